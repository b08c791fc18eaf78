#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace fockcb {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in q with integer coefficients, stored sparse and sorted
// by exponent. Zero coefficients are never stored.
class LaurentPoly {
public:
    using Term = std::pair<int, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long long c);  // NOLINT: constants convert implicitly
    static LaurentPoly monomial(int exp, BigInt coef = 1);
    // Builds from unsorted terms; duplicate exponents are summed.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int min_exp() const;
    int max_exp() const;
    BigInt coeff(int exp) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Multiply by q^k.
    LaurentPoly shifted(int k) const;

private:
    void merge(const LaurentPoly& o, int sign);
    std::vector<Term> terms_;
};

// q -> q^{-1}
LaurentPoly bar_poly(const LaurentPoly& p);
BigInt eval_one(const LaurentPoly& p);
bool is_antisymmetric(const LaurentPoly& p);
// Returns beta with positive exponents only and beta - bar(beta) = p.
// Throws InvariantViolation unless bar(p) = -p.
LaurentPoly truncate_positive(const LaurentPoly& p);

// "q^-2 + 3 + 2*q"; the zero polynomial prints as "0".
std::string to_text(const LaurentPoly& p);
// [[exp, coef], ...] sorted by exponent. Coefficients that do not fit in
// 64 bits are emitted as decimal strings.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

}  // namespace fockcb
