#pragma once

#include "fockcb/combinatorics.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fockcb {

bool is_normal(const Node& gamma, const MultiPartition& lam, int i, const Charge& charge, int e);
std::optional<Node> good_node(const MultiPartition& lam, int i, const Charge& charge, int e);

// Rank-n layer of the crystal component of the empty multipartition.
std::set<MultiPartition> uglov_set(int e, int l, const Charge& charge, int n);
std::set<MultiPartition> uglov_set_serial(int e, int l, const Charge& charge, int n);

// Requires 0 <= s_1 <= ... <= s_l < e.
bool flotw_predicate(const MultiPartition& lam, int e, const Charge& charge);

// Charge congruent to v with s_j - s_{j+1} >= n*e; entries are v_j + (l-j)*2ne.
Charge kleshchev_charge(const std::vector<int>& v, int e, int n);

struct CrystalEdge {
    MultiPartition from;
    int color = 0;
    MultiPartition to;
    Node node;
    auto operator<=>(const CrystalEdge&) const = default;
};

struct CrystalGraph {
    int e = 2;
    int l = 1;
    Charge charge;
    std::vector<std::vector<MultiPartition>> layers;  // layer m = all l-partitions of rank m
    std::vector<CrystalEdge> edges;
    std::set<MultiPartition> highest_component;       // vertices reachable from the empty one
};

CrystalGraph crystal_graph(int e, int l, const Charge& charge, int n);
CrystalGraph crystal_graph_serial(int e, int l, const Charge& charge, int n);

std::string to_dot(const CrystalGraph& g);
nlohmann::json to_json(const CrystalGraph& g);

}  // namespace fockcb
