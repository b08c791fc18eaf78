#pragma once

#include "fockcb/abacus.hpp"
#include "fockcb/memo.hpp"
#include "fockcb/qint.hpp"

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace fockcb {

using WedgeVector = std::map<WedgeMonomial, LaurentPoly>;
// Finite ordered wedges (strictly decreasing index lists) with coefficients.
using FiniteVector = std::map<std::vector<int>, LaurentPoly, std::greater<>>;

void add_term(WedgeVector& v, const WedgeMonomial& u, const LaurentPoly& c);
void add_term(FiniteVector& v, const std::vector<int>& w, const LaurentPoly& c);
WedgeVector scaled(const WedgeVector& v, const LaurentPoly& c);
WedgeVector operator+(WedgeVector a, const WedgeVector& b);
WedgeVector operator-(WedgeVector a, const WedgeVector& b);

struct PairTerm {
    int x = 0;  // x > y
    int y = 0;
    LaurentPoly coef;
};

// Expansion of u_{k1} ^ u_{k2} for k1 <= k2 into ordered pairs.
std::vector<PairTerm> straighten_pair(int k1, int k2, int e, int l);

struct EngineOptions {
    bool memoize = true;
    // Upper bound on rule applications per top-level call.
    std::uint64_t fuel = 200'000'000;
};

class WedgeEngine {
public:
    WedgeEngine(int e, int l, EngineOptions opts = {});

    int e() const { return e_; }
    int l() const { return l_; }
    const EngineOptions& options() const { return opts_; }

    // u_{j} ^ w for an ordered finite wedge w.
    FiniteVector insert(int j, const std::vector<int>& w);
    // Finite wedge u_{i_1} ^ ... ^ u_{i_n} in any order.
    FiniteVector straighten(const std::vector<int>& indices);
    // u_{i_1} ^ ... ^ u_{i_r} followed by the tail s-r, s-r-1, ...; terms that
    // reach the tail vanish.
    WedgeVector straighten(const std::vector<int>& indices, int s);

    WedgeVector bar(const WedgeMonomial& u);
    // Explicit number r of reversed factors; r >= bar_length(u).
    WedgeVector bar(const WedgeMonomial& u, int r);
    WedgeVector bar_vector(const WedgeVector& v);

    std::size_t straighten_cache_size() const { return insert_memo_.size(); }
    std::size_t bar_cache_size() const { return bar_memo_.size(); }

private:
    struct Budget {
        std::uint64_t left;
    };
    FiniteVector insert_impl(int j, const std::vector<int>& w, Budget& budget);
    FiniteVector straighten_impl(const std::vector<int>& indices, Budget& budget);
    WedgeVector bar_impl(const WedgeMonomial& u, int r);

    int e_;
    int l_;
    EngineOptions opts_;
    ConcurrentMemo<std::vector<int>, FiniteVector, IntVectorHash> insert_memo_;
    ConcurrentMemo<std::vector<int>, WedgeVector, IntVectorHash> bar_memo_;
};

// Default number of reversed factors: max(prefix length, degree).
int bar_length(const WedgeMonomial& u);

}  // namespace fockcb

namespace fockcb {

// bar(u) for every monomial; OpenMP over monomials, output in input order.
std::vector<WedgeVector> bar_all(WedgeEngine& engine, const std::vector<WedgeMonomial>& us);
std::vector<WedgeVector> bar_all_serial(WedgeEngine& engine, const std::vector<WedgeMonomial>& us);

}  // namespace fockcb
