#include <doctest.h>

#include "fockcb/crystal.hpp"
#include "fockcb/errors.hpp"
#include "reference_tables.hpp"

#include <map>

using namespace fockcb;

namespace {

std::set<MultiPartition> parse_all(const std::vector<std::string>& labels) {
    std::set<MultiPartition> out;
    for (const auto& t : labels) out.insert(parse_multipartition(t));
    return out;
}

void ascending_charges(int e, int l, Charge& cur, std::vector<Charge>& out) {
    if (static_cast<int>(cur.size()) == l) {
        out.push_back(cur);
        return;
    }
    for (int x = cur.empty() ? 0 : cur.back(); x < e; ++x) {
        cur.push_back(x);
        ascending_charges(e, l, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("normal and good node examples") {
    Charge s{0, 1};
    CHECK(is_normal({1, 1, 1}, {{1}, {}}, 0, s, 4));
    CHECK(good_node({{1}, {}}, 0, s, 4) == Node{1, 1, 1});
    for (int i = 0; i < 4; ++i) CHECK_FALSE(good_node({{}, {}}, i, s, 4).has_value());
    // e=2, s=(0,0): in (-,(1)) the removable 0-node (1,1,2) has the addable
    // 0-node (1,1,1) just below it, which cancels it.
    CHECK_FALSE(is_normal({1, 1, 2}, {{}, {1}}, 0, {0, 0}, 2));
    CHECK_FALSE(good_node({{}, {1}}, 0, {0, 0}, 2).has_value());
    // Mirror image: the addable node (1,1,2) sits above, nothing is cancelled.
    CHECK(is_normal({1, 1, 1}, {{1}, {}}, 0, {0, 0}, 2));
    // Two removable 1-nodes and no addable one: both normal, the upper is good.
    CHECK(is_normal({1, 2, 1}, {{2}, {1}}, 1, s, 4));
    CHECK(is_normal({1, 1, 2}, {{2}, {1}}, 1, s, 4));
    CHECK(good_node({{2}, {1}}, 1, s, 4) == Node{1, 1, 2});
    CHECK_THROWS_AS(is_normal({1, 1, 1}, {{2}, {}}, 0, s, 4), InvalidInput);
}

TEST_CASE("uglov set small ranks") {
    CHECK(uglov_set(4, 2, {0, 1}, 0) == std::set<MultiPartition>{{{}, {}}});
    CHECK(uglov_set(4, 2, {0, 1}, 1) == std::set<MultiPartition>{{{1}, {}}, {{}, {1}}});
}

TEST_CASE("uglov sets at rank four match the reference lists") {
    for (const auto& c : reftables::cases()) {
        auto got = uglov_set(4, 2, parse_charge(c.charge), 4);
        CHECK(got.size() == 13);
        CHECK(got == parse_all(c.uglov));
    }
}

TEST_CASE("flotw predicate examples") {
    Charge s{0, 1};
    CHECK(flotw_predicate({{}, {}}, 4, s));
    CHECK(flotw_predicate({{4}, {}}, 4, s));
    CHECK_FALSE(flotw_predicate({{}, {3, 1}}, 4, s));
    CHECK_THROWS_AS(flotw_predicate({{}, {}}, 4, {1, 0}), InvalidInput);
    CHECK_THROWS_AS(flotw_predicate({{}, {}}, 4, {0, 4}), InvalidInput);
}

TEST_CASE("crystal sets equal flotw sets for ascending charges") {
    for (auto [e, l] : {std::pair{4, 2}, {3, 2}, {4, 3}}) {
        std::vector<Charge> charges;
        Charge cur;
        ascending_charges(e, l, cur, charges);
        for (const auto& s : charges)
            for (int n = 0; n <= 5; ++n) {
                std::set<MultiPartition> want;
                for (const auto& lam : multipartitions(l, n))
                    if (flotw_predicate(lam, e, s)) want.insert(lam);
                INFO("e=" << e << " s=" << format_charge(s) << " n=" << n);
                CHECK(uglov_set(e, l, s, n) == want);
            }
    }
}

TEST_CASE("uglov sets are invariant under a uniform charge shift") {
    for (auto [e, l] : {std::pair{3, 2}, {4, 2}, {2, 3}})
        for (const Charge& s : {Charge(l, 0), Charge(l, 1)}) {
            Charge base = s;
            base.back() += 2;
            for (int shift : {-7, 3, 10})
                for (int n = 0; n <= 5; ++n) {
                    Charge t = base;
                    for (int& x : t) x += shift;
                    CHECK(uglov_set(e, l, base, n) == uglov_set(e, l, t, n));
                }
        }
}

TEST_CASE("kleshchev charge lift") {
    CHECK(kleshchev_charge({2}, 4, 4) == Charge{2});
    CHECK(kleshchev_charge({0, 1}, 4, 4) == Charge{32, 1});
    CHECK_THROWS_AS(kleshchev_charge({4, 1}, 4, 4), InvalidInput);
    for (auto [e, v] : {std::pair{4, std::vector<int>{0, 1}}, {3, {2, 0}}, {3, {0, 1, 2}}, {2, {1, 1}}}) {
        const int l = static_cast<int>(v.size());
        for (int n = 1; n <= 4; ++n) {
            Charge s = kleshchev_charge(v, e, n);
            for (int j = 0; j < l; ++j) CHECK(((s[j] - v[j]) % e + e) % e == 0);
            for (int j = 0; j + 1 < l; ++j) CHECK(s[j] - s[j + 1] >= n * e);
            Charge doubled = v;
            for (int j = 0; j < l; ++j) doubled[j] = v[j] + 2 * (s[j] - v[j]);
            for (int m = 0; m <= n; ++m) CHECK(uglov_set(e, l, s, m) == uglov_set(e, l, doubled, m));
        }
    }
}

TEST_CASE("crystal graph structure") {
    auto g0 = crystal_graph(4, 2, {0, 1}, 0);
    CHECK(g0.layers.size() == 1);
    CHECK(g0.edges.empty());
    CHECK(g0.highest_component.size() == 1);

    auto g1 = crystal_graph(4, 2, {0, 1}, 1);
    std::set<std::tuple<MultiPartition, int, MultiPartition>> e1;
    for (const auto& ed : g1.edges) e1.insert({ed.from, ed.color, ed.to});
    CHECK(e1 == std::set<std::tuple<MultiPartition, int, MultiPartition>>{{{{}, {}}, 0, {{1}, {}}},
                                                                         {{{}, {}}, 1, {{}, {1}}}});

    for (const Charge& s : {Charge{0, 1}, Charge{4, 1}, Charge{0, 5}, Charge{2, 2}}) {
        auto g = crystal_graph(4, 2, s, 5);
        std::map<std::pair<MultiPartition, int>, int> outdeg, indeg;
        for (const auto& ed : g.edges) {
            CHECK(rank(ed.to) == rank(ed.from) + 1);
            CHECK(good_node(ed.to, ed.color, s, 4) == ed.node);
            CHECK(residue(ed.node, s, 4) == ed.color);
            ++outdeg[{ed.from, ed.color}];
            ++indeg[{ed.to, ed.color}];
        }
        for (const auto& [k, d] : outdeg) CHECK(d <= 1);
        for (const auto& [k, d] : indeg) CHECK(d <= 1);
        std::set<MultiPartition> ug;
        for (int n = 0; n <= 5; ++n)
            for (const auto& lam : uglov_set(4, 2, s, n)) ug.insert(lam);
        CHECK(g.highest_component == ug);
    }
}

TEST_CASE("graph exports") {
    auto g = crystal_graph(3, 2, {0, 1}, 2);
    auto dot = to_dot(g);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("\"-|-\"") != std::string::npos);
    auto j = to_json(g);
    CHECK(j["layers"].size() == 3);
    CHECK(j["edges"].size() == g.edges.size());
}
