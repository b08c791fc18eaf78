#pragma once

#include "fockcb/combinatorics.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fockcb {

// Semi-infinite ordered wedge u_{k_1} ^ u_{k_2} ^ ... with k_i = s - i + 1 for
// all i past the stored prefix. Canonical form keeps the prefix minimal.
struct WedgeMonomial {
    int s = 0;
    std::vector<int> prefix;
    auto operator<=>(const WedgeMonomial&) const = default;
};

// k = a + e(l - b) - e*l*m with a in [1,e], b in [1,l].
struct BeadTriple {
    int a = 1;
    int b = 1;
    int m = 0;
    auto operator<=>(const BeadTriple&) const = default;
};

BeadTriple factorize(int k, int e, int l);
int reconstruct(const BeadTriple& t, int e, int l);
// Position a - e*m of index k on its runner b.
int runner_value(int k, int e, int l);

// Trims a strictly decreasing prefix to canonical length.
WedgeMonomial canonicalize(std::vector<int> prefix, int s);
bool is_canonical(const WedgeMonomial& u);
// Prefix padded with tail entries up to length r (r >= prefix length).
std::vector<int> extended_prefix(const WedgeMonomial& u, int r);

std::pair<MultiPartition, Charge> to_pair(const WedgeMonomial& u, int e, int l);
WedgeMonomial from_pair(const MultiPartition& lam, const Charge& charge, int e, int l);

long long degree(const WedgeMonomial& u);
// All monomials of total charge s and the given degree, one per partition of
// N, in the order of partitions(N).
std::vector<WedgeMonomial> enumerate_degree_component(int s, int N);

// "s=3; k=15,12,8"
std::string format_monomial(const WedgeMonomial& u);
WedgeMonomial parse_monomial(std::string_view text);

// Runner picture: one line per runner, beads '#', gaps '.', highest value left.
std::string abacus_diagram(const WedgeMonomial& u, int e, int l);

}  // namespace fockcb
