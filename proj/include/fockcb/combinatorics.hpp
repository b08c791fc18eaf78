#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fockcb {

using Partition = std::vector<int>;               // weakly decreasing, positive parts
using MultiPartition = std::vector<Partition>;    // one partition per component
using Composition = std::vector<int>;             // positive parts, any order
using MultiComposition = std::vector<Composition>;
using Charge = std::vector<int>;

// Box of a multipartition diagram; all three coordinates are 1-based.
struct Node {
    int row = 1;
    int col = 1;
    int comp = 1;
    auto operator<=>(const Node&) const = default;
};

bool is_partition(const Partition& p);
bool is_multipartition(const MultiPartition& lam, int l);
int rank(const MultiComposition& lam);
int height(const MultiComposition& lam);  // longest component
bool contains(const MultiPartition& lam, const Node& g);

int content(const Node& g, const Charge& charge);
int residue(const Node& g, const Charge& charge, int e);
// g strictly above h: smaller content, or equal content and larger component.
bool above(const Node& g, const Node& h, const Charge& charge);

// Addable / removable nodes of the given residue, most-above first.
// Pass residue -1 for all residues.
std::vector<Node> addable_nodes(const MultiPartition& lam, int i, const Charge& charge, int e);
std::vector<Node> removable_nodes(const MultiPartition& lam, int i, const Charge& charge, int e);

MultiPartition add_node(const MultiPartition& lam, const Node& g);
MultiPartition remove_node(const MultiPartition& lam, const Node& g);

std::vector<Partition> partitions(int n);  // reverse lexicographic: (n) first
std::uint64_t partition_count(int n);
// Every l-partition of rank n, sorted lexicographically decreasing on the
// sequence of components (components compared as part lists).
std::vector<MultiPartition> multipartitions(int l, int n);

bool is_split_semisimple(int e, const Charge& charge, int n);

// Grows row `row` of component `comp` (both 1-based) by r. The row may be an
// existing row or the first empty row directly below the last one.
MultiComposition add_nodes_to_part(const MultiComposition& lam, int comp, int row, int r);

// Text forms: "6,1|2,2|4,1", "-|4"; charges "0,1".
std::string format_multipartition(const MultiComposition& lam);
MultiPartition parse_multipartition(std::string_view text);
MultiComposition parse_multicomposition(std::string_view text);
std::string format_charge(const Charge& s);
Charge parse_charge(std::string_view text);
std::string format_node(const Node& g);

}  // namespace fockcb
