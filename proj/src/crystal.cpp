#include "fockcb/crystal.hpp"

#include "fockcb/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace fockcb {

namespace {

// Signature word most-above first; an addable node cancels the nearest
// uncancelled removable node above it. Returns the surviving removable nodes
// in word order.
std::vector<Node> normal_nodes(const MultiPartition& lam, int i, const Charge& charge, int e) {
    struct Letter {
        Node g;
        bool removable;
    };
    std::vector<Letter> word;
    for (const auto& g : addable_nodes(lam, i, charge, e)) word.push_back({g, false});
    for (const auto& g : removable_nodes(lam, i, charge, e)) word.push_back({g, true});
    std::sort(word.begin(), word.end(), [&](const Letter& a, const Letter& b) { return above(a.g, b.g, charge); });
    std::vector<Letter> stack;
    for (const auto& x : word) {
        if (!x.removable && !stack.empty() && stack.back().removable) stack.pop_back();
        else stack.push_back(x);
    }
    std::vector<Node> out;
    for (const auto& x : stack)
        if (x.removable) out.push_back(x.g);
    return out;
}

void check_residue(int i, int e) {
    if (e < 2) throw InvalidInput("e must be at least 2");
    if (i < 0 || i >= e) throw InvalidInput("residue " + std::to_string(i) + " outside [0, e)");
}

// Edges into lam: removing lam's good i-node gives the source.
std::vector<CrystalEdge> incoming_edges(const MultiPartition& lam, const Charge& charge, int e) {
    std::vector<CrystalEdge> out;
    for (int i = 0; i < e; ++i) {
        // Test goodness of each addition inside the larger multipartition.
        if (auto g = good_node(lam, i, charge, e)) out.push_back({remove_node(lam, *g), i, lam, *g});
    }
    return out;
}

bool reaches_layer(const MultiPartition& lam, const Charge& charge, int e, const std::set<MultiPartition>& prev) {
    for (int i = 0; i < e; ++i)
        if (auto g = good_node(lam, i, charge, e); g && prev.count(remove_node(lam, *g))) return true;
    return false;
}

}  // namespace

bool is_normal(const Node& gamma, const MultiPartition& lam, int i, const Charge& charge, int e) {
    check_residue(i, e);
    auto rem = removable_nodes(lam, i, charge, e);
    if (std::find(rem.begin(), rem.end(), gamma) == rem.end())
        throw InvalidInput("node " + format_node(gamma) + " is not a removable " + std::to_string(i) + "-node");
    auto normal = normal_nodes(lam, i, charge, e);
    return std::find(normal.begin(), normal.end(), gamma) != normal.end();
}

std::optional<Node> good_node(const MultiPartition& lam, int i, const Charge& charge, int e) {
    check_residue(i, e);
    auto normal = normal_nodes(lam, i, charge, e);
    if (normal.empty()) return std::nullopt;
    return normal.front();
}

std::set<MultiPartition> uglov_set_serial(int e, int l, const Charge& charge, int n) {
    if (static_cast<int>(charge.size()) != l) throw InvalidInput("charge length must equal l");
    std::set<MultiPartition> layer{MultiPartition(l)};
    for (int m = 1; m <= n; ++m) {
        std::set<MultiPartition> next;
        for (const auto& lam : multipartitions(l, m))
            if (reaches_layer(lam, charge, e, layer)) next.insert(lam);
        layer = std::move(next);
    }
    return layer;
}

std::set<MultiPartition> uglov_set(int e, int l, const Charge& charge, int n) {
    if (static_cast<int>(charge.size()) != l) throw InvalidInput("charge length must equal l");
    std::set<MultiPartition> layer{MultiPartition(l)};
    for (int m = 1; m <= n; ++m) {
        const auto cand = multipartitions(l, m);
        std::vector<char> keep(cand.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
        for (long long t = 0; t < static_cast<long long>(cand.size()); ++t)
            keep[t] = reaches_layer(cand[t], charge, e, layer);
        std::set<MultiPartition> next;
        for (std::size_t t = 0; t < cand.size(); ++t)
            if (keep[t]) next.insert(cand[t]);
        layer = std::move(next);
    }
    return layer;
}

bool flotw_predicate(const MultiPartition& lam, int e, const Charge& charge) {
    const int l = static_cast<int>(lam.size());
    if (static_cast<int>(charge.size()) != l) throw InvalidInput("charge length must equal l");
    for (int j = 0; j < l; ++j) {
        if (charge[j] < 0 || charge[j] >= e || (j > 0 && charge[j] < charge[j - 1]))
            throw InvalidInput("flotw_predicate needs 0 <= s_1 <= ... <= s_l < e");
    }
    auto part = [&](int c, int i) {
        return i >= 1 && i <= static_cast<int>(lam[c].size()) ? lam[c][i - 1] : 0;
    };
    const int rows = height(lam) + e + 1;
    for (int j = 0; j + 1 < l; ++j)
        for (int i = 1; i <= rows; ++i)
            if (part(j, i) < part(j + 1, i + charge[j + 1] - charge[j])) return false;
    for (int i = 1; i <= rows; ++i)
        if (part(l - 1, i) < part(0, i + e + charge[0] - charge[l - 1])) return false;
    std::map<int, std::set<int>> ends;  // row length -> residues of right ends
    for (int c = 0; c < l; ++c)
        for (int i = 1; i <= static_cast<int>(lam[c].size()); ++i)
            ends[lam[c][i - 1]].insert(residue(Node{i, lam[c][i - 1], c + 1}, charge, e));
    for (const auto& [len, res] : ends)
        if (static_cast<int>(res.size()) == e) return false;
    return true;
}

Charge kleshchev_charge(const std::vector<int>& v, int e, int n) {
    if (e < 2) throw InvalidInput("e must be at least 2");
    for (int x : v)
        if (x < 0 || x >= e) throw InvalidInput("kleshchev_charge: residues must lie in [0, e)");
    // s_j = v_j + (l - j) * 2ne: consecutive gaps are at least 2ne - (e - 1) >= ne.
    const int l = static_cast<int>(v.size());
    const int step = 2 * std::max(n, 1) * e;
    Charge s(l);
    for (int j = 0; j < l; ++j) s[j] = v[j] + (l - 1 - j) * step;
    return s;
}

namespace {

template <bool Parallel>
CrystalGraph build_graph(int e, int l, const Charge& charge, int n) {
    if (static_cast<int>(charge.size()) != l) throw InvalidInput("charge length must equal l");
    if (e < 2) throw InvalidInput("e must be at least 2");
    CrystalGraph g;
    g.e = e;
    g.l = l;
    g.charge = charge;
    for (int m = 0; m <= n; ++m) g.layers.push_back(multipartitions(l, m));
    for (int m = 1; m <= n; ++m) {
        const auto& layer = g.layers[m];
        std::vector<std::vector<CrystalEdge>> found(layer.size());
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
            for (long long t = 0; t < static_cast<long long>(layer.size()); ++t)
                found[t] = incoming_edges(layer[t], charge, e);
        } else {
            for (std::size_t t = 0; t < layer.size(); ++t) found[t] = incoming_edges(layer[t], charge, e);
        }
        for (auto& f : found)
            for (auto& edge : f) g.edges.push_back(std::move(edge));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.highest_component.insert(MultiPartition(l));
    // Edges go up one rank, so a rank-ordered sweep reaches everything.
    std::vector<const CrystalEdge*> by_rank;
    for (const auto& edge : g.edges) by_rank.push_back(&edge);
    std::stable_sort(by_rank.begin(), by_rank.end(),
                     [](const CrystalEdge* a, const CrystalEdge* b) { return rank(a->from) < rank(b->from); });
    for (const auto* edge : by_rank)
        if (g.highest_component.count(edge->from)) g.highest_component.insert(edge->to);
    return g;
}

}  // namespace

CrystalGraph crystal_graph(int e, int l, const Charge& charge, int n) { return build_graph<true>(e, l, charge, n); }

CrystalGraph crystal_graph_serial(int e, int l, const Charge& charge, int n) {
    return build_graph<false>(e, l, charge, n);
}

std::string to_dot(const CrystalGraph& g) {
    std::string out = "digraph crystal {\n";
    out += "  // e=" + std::to_string(g.e) + " charge=" + format_charge(g.charge) + "\n";
    for (const auto& layer : g.layers)
        for (const auto& v : layer) {
            out += "  \"" + format_multipartition(v) + "\"";
            if (g.highest_component.count(v)) out += " [style=bold]";
            out += ";\n";
        }
    for (const auto& edge : g.edges)
        out += "  \"" + format_multipartition(edge.from) + "\" -> \"" + format_multipartition(edge.to) +
               "\" [label=\"" + std::to_string(edge.color) + "\"];\n";
    out += "}\n";
    return out;
}

nlohmann::json to_json(const CrystalGraph& g) {
    nlohmann::json j;
    j["e"] = g.e;
    j["l"] = g.l;
    j["charge"] = g.charge;
    auto layers = nlohmann::json::array();
    for (std::size_t m = 0; m < g.layers.size(); ++m) {
        auto layer = nlohmann::json::array();
        for (const auto& v : g.layers[m])
            layer.push_back({{"multipartition", format_multipartition(v)}, {"uglov", g.highest_component.count(v) > 0}});
        layers.push_back({{"rank", m}, {"vertices", layer}});
    }
    j["layers"] = layers;
    auto edges = nlohmann::json::array();
    for (const auto& edge : g.edges)
        edges.push_back({{"from", format_multipartition(edge.from)},
                         {"to", format_multipartition(edge.to)},
                         {"color", edge.color},
                         {"node", {edge.node.row, edge.node.col, edge.node.comp}}});
    j["edges"] = edges;
    return j;
}

}  // namespace fockcb
