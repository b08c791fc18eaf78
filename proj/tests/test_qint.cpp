#include <doctest.h>

#include "fockcb/errors.hpp"
#include "fockcb/qint.hpp"

#include <random>

using namespace fockcb;

namespace {

LaurentPoly P(std::vector<LaurentPoly::Term> t) { return LaurentPoly::from_terms(std::move(t)); }

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> ex(-6, 6), co(-5, 5), len(0, 5);
    std::vector<LaurentPoly::Term> t;
    for (int n = len(rng); n > 0; --n) t.emplace_back(ex(rng), co(rng));
    return P(t);
}

}  // namespace

TEST_CASE("zero coefficients are never stored") {
    auto p = P({{1, 2}, {1, -2}, {0, 0}, {3, 1}});
    CHECK(p.size() == 1);
    CHECK(p.coeff(3) == 1);
    CHECK((p - p).is_zero());
    CHECK(LaurentPoly(0).is_zero());
}

TEST_CASE("bar_poly examples") {
    CHECK(bar_poly(P({{2, 1}, {0, 3}})) == P({{-2, 1}, {0, 3}}));
    CHECK(bar_poly(LaurentPoly()).is_zero());
    auto a = P({{1, 1}, {-1, -1}});
    CHECK(bar_poly(a) == -a);
}

TEST_CASE("eval_one examples") {
    CHECK(eval_one(P({{1, 1}, {-1, 1}})) == 2);
    CHECK(eval_one(LaurentPoly()) == 0);
    CHECK(eval_one(P({{3, 1}, {1, -2}})) == -1);
}

TEST_CASE("truncate_positive examples") {
    CHECK(truncate_positive(P({{1, 1}, {-1, -1}})) == LaurentPoly::monomial(1));
    CHECK(truncate_positive(P({{3, 2}, {-3, -2}, {1, 1}, {-1, -1}})) == P({{3, 2}, {1, 1}}));
    CHECK(truncate_positive(LaurentPoly()).is_zero());
    CHECK_THROWS_AS(truncate_positive(P({{1, 1}})), InvariantViolation);
    CHECK_THROWS_AS(truncate_positive(LaurentPoly(1)), InvariantViolation);
}

TEST_CASE("text and json rendering") {
    CHECK(to_text(P({{-2, 1}, {0, 3}, {1, 2}})) == "q^-2 + 3 + 2*q");
    CHECK(to_text(LaurentPoly()) == "0");
    CHECK(to_text(P({{1, -1}, {-1, 1}})) == "q^-1 - q");
    auto p = P({{-2, 1}, {0, 3}, {5, -7}});
    CHECK(to_json(p).dump() == "[[-2,1],[0,3],[5,-7]]");
    CHECK(poly_from_json(to_json(p)) == p);
}

TEST_CASE("big coefficients survive json") {
    BigInt big = 1;
    for (int i = 0; i < 100; ++i) big *= 3;
    auto p = LaurentPoly::monomial(4, big) + LaurentPoly::monomial(-1, -big);
    auto j = to_json(p);
    CHECK(j[0][1].is_string());
    CHECK(poly_from_json(j) == p);
    CHECK(eval_one(p * p) == 0);
}

TEST_CASE("ring and involution properties on random polynomials") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 500; ++it) {
        auto p = random_poly(rng), r = random_poly(rng), s = random_poly(rng);
        CHECK(bar_poly(bar_poly(p)) == p);
        CHECK(bar_poly(p * r) == bar_poly(p) * bar_poly(r));
        CHECK(bar_poly(p + r) == bar_poly(p) + bar_poly(r));
        CHECK(eval_one(p * r) == eval_one(p) * eval_one(r));
        CHECK(eval_one(p + r) == eval_one(p) + eval_one(r));
        CHECK((p * r) * s == p * (r * s));
        CHECK(p * (r + s) == p * r + p * s);
        CHECK(p * r == r * p);
        CHECK(p.shifted(3) == p * LaurentPoly::monomial(3));
        auto anti = p - bar_poly(p);
        CHECK(is_antisymmetric(anti));
        auto beta = truncate_positive(anti);
        CHECK(beta - bar_poly(beta) == anti);
        for (const auto& [e, c] : beta.terms()) CHECK(e > 0);
    }
}
