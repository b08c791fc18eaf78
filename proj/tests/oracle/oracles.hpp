#pragma once
// Slow, independent reimplementations used only to cross-check the library.
#include "fockcb/abacus.hpp"
#include "fockcb/avalue.hpp"
#include "fockcb/combinatorics.hpp"
#include "fockcb/qint.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using fockcb::LaurentPoly;

// Brute force over a in [1,e], b in [1,l]: the unique triple whose
// reconstruction hits k.
inline fockcb::BeadTriple factorize(int k, int e, int l) {
    for (int a = 1; a <= e; ++a) {
        if (((k - a) % e + e) % e) continue;
        for (int b = 1; b <= l; ++b) {
            long long r = static_cast<long long>(k) - a - static_cast<long long>(e) * (l - b);
            if (r % (static_cast<long long>(e) * l) == 0)
                return {a, b, static_cast<int>(-r / (static_cast<long long>(e) * l))};
        }
    }
    throw std::logic_error("no factorization");
}

// Euler's pentagonal recurrence.
inline std::uint64_t partition_count(int n) {
    std::vector<std::uint64_t> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long acc = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            long long sign = (k % 2) ? 1 : -1;
            acc += sign * static_cast<long long>(p[m - g1]);
            if (g2 <= m) acc += sign * static_cast<long long>(p[m - g2]);
        }
        p[m] = static_cast<std::uint64_t>(acc);
    }
    return p[n];
}

// Exact division of Laurent polynomials; throws if not exact.
inline LaurentPoly divide(LaurentPoly num, const LaurentPoly& den) {
    std::map<int, fockcb::BigInt> quo;
    const int dtop = den.max_exp();
    const fockcb::BigInt lead = den.coeff(dtop);
    while (!num.is_zero()) {
        int top = num.max_exp();
        fockcb::BigInt c = num.coeff(top);
        if (c % lead != 0 || top - dtop < num.min_exp() - den.min_exp())
            throw std::logic_error("inexact division");
        fockcb::BigInt t = c / lead;
        quo[top - dtop] += t;
        num -= den * LaurentPoly::monomial(top - dtop, t);
    }
    std::vector<LaurentPoly::Term> terms(quo.begin(), quo.end());
    return LaurentPoly::from_terms(std::move(terms));
}

inline LaurentPoly qpow(int k) { return LaurentPoly::monomial(k); }

// Pair rules evaluated straight from their rational-function form. `r4_shift`
// is the index offset used in the alpha+beta series of the last rule.
inline std::vector<std::pair<std::pair<int, int>, LaurentPoly>> pair_rule(int k1, int k2, int e, int l,
                                                                          int r4_shift = 1) {
    std::map<std::pair<int, int>, LaurentPoly> acc;
    if (k1 == k2) return {};
    auto t1 = factorize(k1, e, l), t2 = factorize(k2, e, l);
    const int el = e * l;
    auto md = [&](long long x) { return static_cast<int>(((x % el) + el) % el); };
    const int alpha = md(t2.a - t1.a);
    const int beta = md(static_cast<long long>(e) * (t1.b - t2.b));
    const LaurentPoly q = qpow(1), qi = qpow(-1);
    const LaurentPoly qq = q + qi;
    auto run = [&](int shift, int m0, auto coef) {
        for (int m = m0;; ++m) {
            int x = k2 - shift - el * m, y = k1 + shift + el * m;
            if (x <= y) break;
            acc[{x, y}] += coef(m);
        }
    };
    if (alpha == 0 && beta == 0) {
        acc[{k2, k1}] += LaurentPoly(-1);
    } else if (beta == 0) {
        acc[{k2, k1}] += -qi;
        run(alpha, 0, [&](int m) { return (qpow(-2) - 1) * qpow(-2 * m); });
        run(0, 1, [&](int m) { return (qpow(-2) - 1) * qpow(-2 * m + 1) * LaurentPoly(-1); });
    } else if (alpha == 0) {
        acc[{k2, k1}] += q;
        run(beta, 0, [&](int m) { return (qpow(2) - 1) * qpow(2 * m); });
        run(0, 1, [&](int m) { return (qpow(2) - 1) * qpow(2 * m - 1); });
    } else {
        acc[{k2, k1}] += LaurentPoly(1);
        auto odd = [&](int m) { return (q - qi) * divide(qpow(2 * m + 1) + qpow(-2 * m - 1), qq); };
        auto even = [&](int m) { return (q - qi) * divide(qpow(2 * m) - qpow(-2 * m), qq); };
        run(beta, 0, odd);
        run(alpha, 0, odd);
        run(alpha + beta, 0, [&](int m) { return even(m + r4_shift); });
        run(0, 1, even);
    }
    std::vector<std::pair<std::pair<int, int>, LaurentPoly>> out;
    for (auto& [k, c] : acc)
        if (!c.is_zero()) out.emplace_back(k, c);
    return out;
}

using Finite = std::map<std::vector<int>, LaurentPoly>;

// Rewrites the leftmost (or rightmost) non-decreasing adjacent pair until
// every word is strictly decreasing.
inline Finite naive_straighten(const std::vector<int>& w0, int e, int l, int r4_shift = 1,
                               bool leftmost = true, std::uint64_t fuel = 2'000'000) {
    Finite done;
    std::vector<std::pair<std::vector<int>, LaurentPoly>> work{{w0, LaurentPoly(1)}};
    while (!work.empty()) {
        if (fuel-- == 0) throw std::runtime_error("oracle fuel exhausted");
        auto [w, c] = std::move(work.back());
        work.pop_back();
        std::size_t i = w.size();
        for (std::size_t j = 0; j + 1 < w.size(); ++j)
            if (w[j] <= w[j + 1]) {
                i = j;
                if (leftmost) break;
            }
        if (i == w.size()) {
            done[w] += c;
            continue;
        }
        if (w[i] == w[i + 1]) continue;
        for (auto& [xy, d] : pair_rule(w[i], w[i + 1], e, l, r4_shift)) {
            std::vector<int> z = w;
            z[i] = xy.first;
            z[i + 1] = xy.second;
            work.emplace_back(std::move(z), c * d);
        }
    }
    Finite out;
    for (auto& [w, c] : done)
        if (!c.is_zero()) out.emplace(w, c);
    return out;
}

// a-value sums from the literal double loops, pairs inside a component taken
// over positions j < j'.
inline fockcb::Rational a_rel(const fockcb::MultiComposition& lam, const std::vector<long long>& m, int h) {
    const std::size_t l = lam.size();
    std::vector<std::vector<long long>> B(l);
    for (std::size_t i = 0; i < l; ++i)
        for (int j = 1; j <= h; ++j) {
            long long part = j <= static_cast<int>(lam[i].size()) ? lam[i][j - 1] : 0;
            B[i].push_back(part - j + h + m[i]);
        }
    long long s1 = 0;
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t x = 0; x < B[i].size(); ++x)
            for (std::size_t y = x + 1; y < B[i].size(); ++y) s1 += std::min(B[i][x], B[i][y]);
        for (std::size_t j = i + 1; j < l; ++j)
            for (long long a : B[i])
                for (long long b : B[j]) s1 += std::min(a, b);
    }
    long long s2 = 0;
    for (std::size_t i = 0; i < l; ++i)
        for (long long a : B[i])
            for (long long k = 1; k <= a; ++k)
                for (std::size_t j = 0; j < l; ++j) s2 += std::min(k, m[j]);
    return fockcb::Rational(s1 - s2);
}

inline fockcb::Partition random_partition(std::mt19937_64& rng, int n) {
    fockcb::Partition p;
    int left = n, cap = n;
    while (left > 0) {
        int hi = std::min(left, cap);
        int x = std::uniform_int_distribution<int>(1, hi)(rng);
        p.push_back(x);
        left -= x;
        cap = x;
    }
    return p;
}

inline fockcb::MultiPartition random_multipartition(std::mt19937_64& rng, int l, int n) {
    std::vector<int> sizes(l, 0);
    for (int k = 0; k < n; ++k) ++sizes[std::uniform_int_distribution<int>(0, l - 1)(rng)];
    fockcb::MultiPartition lam;
    for (int s : sizes) lam.push_back(random_partition(rng, s));
    return lam;
}

inline fockcb::Charge random_charge(std::mt19937_64& rng, int l, int lo, int hi) {
    fockcb::Charge c;
    for (int j = 0; j < l; ++j) c.push_back(std::uniform_int_distribution<int>(lo, hi)(rng));
    return c;
}

}  // namespace oracle
