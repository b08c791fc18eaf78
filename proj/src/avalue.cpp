#include "fockcb/avalue.hpp"

#include "fockcb/errors.hpp"

#include <algorithm>

namespace fockcb {

namespace {

long long as_integer(const Rational& r) {
    if (r.denominator() != 1)
        throw UnsupportedRegime("m-vector entry " + std::to_string(r.numerator()) + "/" +
                                std::to_string(r.denominator()) + " is not an integer");
    return r.numerator();
}

// sum_{k=1}^{a} min(k, m) for a, m >= 0
long long clipped_triangle(long long a, long long m) {
    if (a <= m) return a * (a + 1) / 2;
    return m * (m + 1) / 2 + (a - m) * m;
}

}  // namespace

MVector m_vector(int e, int l, const Charge& charge, std::optional<int> alpha) {
    if (e < 2) throw InvalidInput("e must be at least 2");
    if (l < 1 || static_cast<int>(charge.size()) != l) throw InvalidInput("charge length must equal l");
    std::vector<Rational> base;
    for (int j = 0; j < l; ++j) base.push_back(Rational(charge[j]) - Rational(static_cast<long long>(j) * e, l));
    int a = 0;
    if (alpha) {
        a = *alpha;
    } else {
        Rational lo = *std::min_element(base.begin(), base.end());
        while (lo + Rational(static_cast<long long>(a) * e) < 0) ++a;
    }
    MVector out;
    out.alpha = a;
    for (const auto& b : base) {
        out.m.push_back(b + Rational(static_cast<long long>(a) * e));
        if (out.m.back() < 0) throw InvalidInput("m-vector entry negative for alpha = " + std::to_string(a));
    }
    return out;
}

bool is_integral(const MVector& m) {
    return std::all_of(m.m.begin(), m.m.end(), [](const Rational& r) { return r.denominator() == 1; });
}

TranslatedSymbol translated_symbol(const MultiComposition& lam, const MVector& m, int h) {
    if (lam.size() != m.m.size()) throw InvalidInput("translated_symbol: component count mismatch");
    if (h < height(lam)) throw InvalidInput("translated_symbol: height below the multicomposition height");
    TranslatedSymbol B(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) {
        long long mi = as_integer(m.m[i]);
        for (int j = 1; j <= h; ++j) {
            long long part = j <= static_cast<int>(lam[i].size()) ? lam[i][j - 1] : 0;
            B[i].push_back(part - j + h + mi);
        }
    }
    return B;
}

Rational a_rel(const MultiComposition& lam, const MVector& m, int h) {
    const TranslatedSymbol B = translated_symbol(lam, m, h);
    std::vector<long long> mi;
    for (const auto& x : m.m) mi.push_back(as_integer(x));
    long long total = 0;
    for (std::size_t i = 0; i < B.size(); ++i) {
        for (std::size_t x = 0; x < B[i].size(); ++x)
            for (std::size_t y = x + 1; y < B[i].size(); ++y) total += std::min(B[i][x], B[i][y]);
        for (std::size_t j = i + 1; j < B.size(); ++j)
            for (long long a : B[i])
                for (long long b : B[j]) total += std::min(a, b);
    }
    for (const auto& comp : B)
        for (long long a : comp)
            for (long long mj : mi) total -= clipped_triangle(a, mj);
    return Rational(total);
}

Rational a_rel(const MultiComposition& lam, int e, int l, const Charge& charge, int h) {
    return a_rel(lam, m_vector(e, l, charge), h);
}

bool precedes(const MultiComposition& mu, const MultiComposition& nu, int e, int l, const Charge& charge) {
    if (rank(mu) != rank(nu)) throw InvalidInput("precedes: ranks differ");
    const MVector m = m_vector(e, l, charge);
    const int h = std::max(height(mu), height(nu));
    return a_rel(mu, m, h) < a_rel(nu, m, h);
}

AValueTable avalue_table(int e, int l, const Charge& charge, int n, const std::vector<MultiPartition>* labels) {
    AValueTable t;
    t.m = m_vector(e, l, charge);
    for (const auto& x : t.m.m) as_integer(x);  // rejects non-integral entries
    std::vector<MultiPartition> all = labels ? *labels : multipartitions(l, n);
    for (const auto& lam : all) t.height = std::max(t.height, height(lam));
    for (const auto& lam : all) t.rows.push_back({lam, as_integer(a_rel(lam, t.m, t.height))});
    std::sort(t.rows.begin(), t.rows.end(), [](const AValueRow& a, const AValueRow& b) {
        if (a.value != b.value) return a.value < b.value;
        return format_multipartition(a.lambda) < format_multipartition(b.lambda);
    });
    if (!t.rows.empty()) {
        const long long base = t.rows.front().value;
        t.calibration = t.rows.front().lambda;
        for (auto& r : t.rows) r.value -= base;
    }
    return t;
}

}  // namespace fockcb
