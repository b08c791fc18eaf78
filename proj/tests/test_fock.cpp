#include <doctest.h>

#include "fockcb/errors.hpp"
#include "fockcb/fock.hpp"
#include "oracle/oracles.hpp"

using namespace fockcb;

namespace {

// [N]_q = (q^N - q^-N) / (q - q^-1)
LaurentPoly quantum_int(int n) {
    std::vector<LaurentPoly::Term> t;
    int a = n < 0 ? -n : n;
    for (int j = 0; j < a; ++j) t.emplace_back(a - 1 - 2 * j, n < 0 ? -1 : 1);
    return LaurentPoly::from_terms(std::move(t));
}

FockVector single(const MultiPartition& lam, const Charge& s) { return FockVector{{FockKey{lam, s}, LaurentPoly(1)}}; }

FockVector minus(FockVector a, const FockVector& b) {
    for (const auto& [k, c] : b) add_term(a, k, -c);
    return a;
}

}  // namespace

TEST_CASE("N counts") {
    MultiPartition empty{{}, {}};
    Charge s{0, 1};
    CHECK(n_total(empty, 0, s, 4) == 1);
    CHECK(n_total(empty, 2, s, 4) == 0);
    CHECK(n_below(empty, {1, 1, 1}, 0, s, 4) == 0);
    CHECK(n_above(empty, {1, 1, 1}, 0, s, 4) == 0);
    CHECK_THROWS_AS(n_below(empty, {1, 1, 2}, 0, s, 4), InvalidInput);
    CHECK_THROWS_AS(n_below(empty, {2, 1, 1}, 3, s, 4), InvalidInput);
}

TEST_CASE("Chevalley action examples") {
    Charge s{0, 1};
    MultiPartition empty{{}, {}};
    for (int i = 0; i < 4; ++i) CHECK(apply_e(i, single(empty, s), 4).empty());
    CHECK(apply_f(0, single(empty, s), 4) == single({{1}, {}}, s));
    CHECK(apply_k(0, single(empty, s), 4) == FockVector{{FockKey{empty, s}, LaurentPoly::monomial(1)}});
    CHECK(apply_f(2, single(empty, s), 4).empty());
}

TEST_CASE("adding an i-node lowers N_i by two") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 300; ++it) {
        int e = std::uniform_int_distribution<int>(2, 5)(rng);
        int l = std::uniform_int_distribution<int>(1, 3)(rng);
        auto lam = oracle::random_multipartition(rng, l, std::uniform_int_distribution<int>(0, 6)(rng));
        auto s = oracle::random_charge(rng, l, -4, 4);
        int i = std::uniform_int_distribution<int>(0, e - 1)(rng);
        auto adds = addable_nodes(lam, i, s, e);
        CHECK(apply_f(i, single(lam, s), e).size() == adds.size());
        for (const auto& g : adds) CHECK(n_total(add_node(lam, g), i, s, e) == n_total(lam, i, s, e) - 2);
    }
}

TEST_CASE("sl2 commutator relation on random vectors") {
    std::mt19937_64 rng(42);
    const std::pair<int, int> grid[] = {{2, 1}, {3, 1}, {2, 2}, {4, 2}, {3, 3}};
    for (int it = 0; it < 200; ++it) {
        auto [e, l] = grid[it % 5];
        auto s = oracle::random_charge(rng, l, -3, 5);
        int i = std::uniform_int_distribution<int>(0, e - 1)(rng);
        FockVector v, want;
        for (int t = 0; t < 3; ++t) {
            auto lam = oracle::random_multipartition(rng, l, std::uniform_int_distribution<int>(0, 5)(rng));
            auto c = LaurentPoly::monomial(std::uniform_int_distribution<int>(-2, 2)(rng),
                                           std::uniform_int_distribution<int>(1, 3)(rng));
            add_term(v, FockKey{lam, s}, c);
            add_term(want, FockKey{lam, s}, c * quantum_int(n_total(lam, i, s, e)));
        }
        auto got = minus(apply_e(i, apply_f(i, v, e), e), apply_f(i, apply_e(i, v, e), e));
        INFO("e=" << e << " l=" << l << " i=" << i);
        CHECK(got == want);
        CHECK(apply_k(i, apply_k(i, v, e), e).size() == v.size());
    }
}

TEST_CASE("k is diagonal and conjugates f by q^2") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 100; ++it) {
        int e = 3, l = 2;
        auto s = oracle::random_charge(rng, l, 0, 2);
        auto lam = oracle::random_multipartition(rng, l, std::uniform_int_distribution<int>(0, 5)(rng));
        int i = std::uniform_int_distribution<int>(0, e - 1)(rng);
        auto v = single(lam, s);
        auto lhs = apply_k(i, apply_f(i, v, e), e);
        FockVector rhs;
        for (const auto& [k, c] : apply_f(i, apply_k(i, v, e), e)) add_term(rhs, k, c * LaurentPoly::monomial(-2));
        CHECK(lhs == rhs);
    }
}
