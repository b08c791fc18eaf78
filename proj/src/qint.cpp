#include "fockcb/qint.hpp"

#include "fockcb/errors.hpp"

#include <algorithm>
#include <limits>

namespace fockcb {

LaurentPoly::LaurentPoly(long long c) {
    if (c != 0) terms_.emplace_back(0, BigInt(c));
}

LaurentPoly LaurentPoly::monomial(int exp, BigInt coef) {
    LaurentPoly p;
    if (coef != 0) p.terms_.emplace_back(exp, std::move(coef));
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        } else if (t.second != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

int LaurentPoly::min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
int LaurentPoly::max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }

BigInt LaurentPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return 0;
}

void LaurentPoly::merge(const LaurentPoly& o, int sign) {
    if (o.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            out.emplace_back(b->first, sign > 0 ? b->second : BigInt(-b->second));
            ++b;
        } else {
            BigInt c = a->second;
            if (sign > 0) c += b->second;
            else c -= b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    merge(o, 1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    merge(o, -1);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.size() == 1) {
        LaurentPoly r;
        r.terms_.reserve(a.size());
        for (const auto& [e, c] : a.terms_) r.terms_.emplace_back(e + b.terms_[0].first, c * b.terms_[0].second);
        return r;
    }
    std::vector<LaurentPoly::Term> raw;
    raw.reserve(a.size() * b.size());
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_) raw.emplace_back(e1 + e2, c1 * c2);
    return LaurentPoly::from_terms(std::move(raw));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
}

LaurentPoly bar_poly(const LaurentPoly& p) {
    std::vector<LaurentPoly::Term> t(p.terms().rbegin(), p.terms().rend());
    for (auto& x : t) x.first = -x.first;
    return LaurentPoly::from_terms(std::move(t));
}

BigInt eval_one(const LaurentPoly& p) {
    BigInt s = 0;
    for (const auto& t : p.terms()) s += t.second;
    return s;
}

bool is_antisymmetric(const LaurentPoly& p) { return bar_poly(p) == -p; }

LaurentPoly truncate_positive(const LaurentPoly& p) {
    if (!is_antisymmetric(p))
        throw InvariantViolation("truncate_positive: polynomial " + to_text(p) + " is not bar-antisymmetric");
    std::vector<LaurentPoly::Term> pos;
    for (const auto& t : p.terms())
        if (t.first > 0) pos.push_back(t);
    return LaurentPoly::from_terms(std::move(pos));
}

std::string to_text(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string var;
        if (e == 1) var = "q";
        else if (e != 0) var = "q^" + std::to_string(e);
        if (var.empty()) out += mag.str();
        else if (mag == 1) out += var;
        else out += mag.str() + "*" + var;
    }
    return out;
}

nlohmann::json to_json(const LaurentPoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            arr.push_back({e, static_cast<long long>(c)});
        else
            arr.push_back({e, c.str()});
    }
    return arr;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    std::vector<LaurentPoly::Term> t;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) throw InvalidInput("polynomial JSON: expected [exp, coef] pairs");
        const auto& c = pair[1];
        t.emplace_back(pair[0].get<int>(), c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long long>()));
    }
    return LaurentPoly::from_terms(std::move(t));
}

}  // namespace fockcb
