#include "fockcb/wedge.hpp"

#include "fockcb/errors.hpp"

#include <algorithm>

namespace fockcb {

void add_term(WedgeVector& v, const WedgeMonomial& u, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.try_emplace(u, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

void add_term(FiniteVector& v, const std::vector<int>& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

WedgeVector scaled(const WedgeVector& v, const LaurentPoly& c) {
    WedgeVector out;
    if (c.is_zero()) return out;
    for (const auto& [u, x] : v) add_term(out, u, x * c);
    return out;
}

WedgeVector operator+(WedgeVector a, const WedgeVector& b) {
    for (const auto& [u, x] : b) add_term(a, u, x);
    return a;
}

WedgeVector operator-(WedgeVector a, const WedgeVector& b) {
    for (const auto& [u, x] : b) add_term(a, u, -x);
    return a;
}

namespace {

const LaurentPoly& q_minus_qinv() {
    static const LaurentPoly p = LaurentPoly::from_terms({{1, 1}, {-1, -1}});
    return p;
}

// (q^{2m+1} + q^{-2m-1}) / (q + q^{-1})
LaurentPoly odd_quotient(int m) {
    std::vector<LaurentPoly::Term> t;
    for (int j = 0; j <= 2 * m; ++j) t.emplace_back(2 * m - 2 * j, j % 2 ? -1 : 1);
    return LaurentPoly::from_terms(std::move(t));
}

// (q^{2m} - q^{-2m}) / (q + q^{-1})
LaurentPoly even_quotient(int m) {
    std::vector<LaurentPoly::Term> t;
    for (int j = 0; j <= 2 * m - 1; ++j) t.emplace_back(2 * m - 1 - 2 * j, j % 2 ? -1 : 1);
    return LaurentPoly::from_terms(std::move(t));
}

int pos_mod(long long a, long long b) { return static_cast<int>(((a % b) + b) % b); }

}  // namespace

std::vector<PairTerm> straighten_pair(int k1, int k2, int e, int l) {
    if (k1 > k2) throw InvalidInput("straighten_pair expects k1 <= k2");
    std::vector<PairTerm> out;
    if (k1 == k2) return out;
    const BeadTriple t1 = factorize(k1, e, l);
    const BeadTriple t2 = factorize(k2, e, l);
    const int el = e * l;
    const int alpha = pos_mod(t2.a - t1.a, el);
    const int beta = pos_mod(static_cast<long long>(e) * (t1.b - t2.b), el);

    std::map<std::pair<int, int>, LaurentPoly, std::greater<>> acc;
    auto add = [&](int x, int y, const LaurentPoly& c) { acc[{x, y}] += c; };
    // Terms u_{k2 - shift - el*m} ^ u_{k1 + shift + el*m} while still ordered.
    auto series = [&](int shift, int m0, auto coef) {
        for (int m = m0;; ++m) {
            int x = k2 - shift - el * m;
            int y = k1 + shift + el * m;
            if (x <= y) break;
            add(x, y, coef(m));
        }
    };

    if (alpha == 0 && beta == 0) {
        add(k2, k1, LaurentPoly(-1));
    } else if (beta == 0) {
        add(k2, k1, LaurentPoly::monomial(-1, -1));
        const LaurentPoly c = LaurentPoly::from_terms({{-2, 1}, {0, -1}});  // q^-2 - 1
        series(alpha, 0, [&](int m) { return c.shifted(-2 * m); });
        series(0, 1, [&](int m) { return (-c).shifted(-2 * m + 1); });
    } else if (alpha == 0) {
        add(k2, k1, LaurentPoly::monomial(1, 1));
        const LaurentPoly c = LaurentPoly::from_terms({{2, 1}, {0, -1}});  // q^2 - 1
        series(beta, 0, [&](int m) { return c.shifted(2 * m); });
        series(0, 1, [&](int m) { return c.shifted(2 * m - 1); });
    } else {
        add(k2, k1, LaurentPoly(1));
        series(beta, 0, [&](int m) { return q_minus_qinv() * odd_quotient(m); });
        series(alpha, 0, [&](int m) { return q_minus_qinv() * odd_quotient(m); });
        // Index m+1 here: with m the rewriting system is not confluent.
        series(alpha + beta, 0, [&](int m) { return q_minus_qinv() * even_quotient(m + 1); });
        series(0, 1, [&](int m) { return q_minus_qinv() * even_quotient(m); });
    }
    for (auto& [xy, c] : acc)
        if (!c.is_zero()) out.push_back(PairTerm{xy.first, xy.second, std::move(c)});
    return out;
}

WedgeEngine::WedgeEngine(int e, int l, EngineOptions opts) : e_(e), l_(l), opts_(opts) {
    if (e < 2) throw InvalidInput("e must be at least 2");
    if (l < 1) throw InvalidInput("l must be at least 1");
}

FiniteVector WedgeEngine::insert(int j, const std::vector<int>& w) {
    Budget budget{opts_.fuel};
    return insert_impl(j, w, budget);
}

FiniteVector WedgeEngine::insert_impl(int j, const std::vector<int>& w, Budget& budget) {
    if (w.empty() || j > w.front()) {
        std::vector<int> z;
        z.reserve(w.size() + 1);
        z.push_back(j);
        z.insert(z.end(), w.begin(), w.end());
        return FiniteVector{{std::move(z), LaurentPoly(1)}};
    }
    if (j == w.front()) return {};

    std::vector<int> key;
    if (opts_.memoize) {
        key.reserve(w.size() + 1);
        key.push_back(j);
        key.insert(key.end(), w.begin(), w.end());
        if (auto hit = insert_memo_.find(key)) return *hit;
    }
    if (budget.left == 0) throw InvariantViolation("straightening fuel exhausted");
    --budget.left;

    const std::vector<int> rest(w.begin() + 1, w.end());
    FiniteVector out;
    for (const auto& term : straighten_pair(j, w.front(), e_, l_)) {
        FiniteVector inner = insert_impl(term.y, rest, budget);
        for (const auto& [v, c2] : inner) {
            const LaurentPoly c12 = term.coef * c2;
            for (const auto& [z, c3] : insert_impl(term.x, v, budget)) add_term(out, z, c12 * c3);
        }
    }
    if (opts_.memoize) return *insert_memo_.insert(key, std::move(out));
    return out;
}

FiniteVector WedgeEngine::straighten_impl(const std::vector<int>& indices, Budget& budget) {
    FiniteVector cur{{std::vector<int>{}, LaurentPoly(1)}};
    for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
        FiniteVector next;
        for (const auto& [w, c] : cur)
            for (const auto& [z, c2] : insert_impl(*it, w, budget)) add_term(next, z, c * c2);
        cur = std::move(next);
    }
    return cur;
}

FiniteVector WedgeEngine::straighten(const std::vector<int>& indices) {
    Budget budget{opts_.fuel};
    return straighten_impl(indices, budget);
}

WedgeVector WedgeEngine::straighten(const std::vector<int>& indices, int s) {
    const int r = static_cast<int>(indices.size());
    WedgeVector out;
    for (const auto& [w, c] : straighten(indices)) {
        if (!w.empty() && w.back() <= s - r) continue;
        add_term(out, canonicalize(w, s), c);
    }
    return out;
}

int bar_length(const WedgeMonomial& u) {
    long long d = degree(u);
    return static_cast<int>(std::max<long long>(static_cast<long long>(u.prefix.size()), d));
}

WedgeVector WedgeEngine::bar(const WedgeMonomial& u) {
    const int r = bar_length(u);
    if (!opts_.memoize) return bar_impl(u, r);
    std::vector<int> key;
    key.reserve(u.prefix.size() + 1);
    key.push_back(u.s);
    key.insert(key.end(), u.prefix.begin(), u.prefix.end());
    if (auto hit = bar_memo_.find(key)) return *hit;
    return *bar_memo_.insert(key, bar_impl(u, r));
}

WedgeVector WedgeEngine::bar(const WedgeMonomial& u, int r) {
    if (r < bar_length(u))
        throw InvalidInput("bar: r = " + std::to_string(r) + " is below max(prefix length, degree) = " +
                           std::to_string(bar_length(u)));
    return bar_impl(u, r);
}

WedgeVector WedgeEngine::bar_impl(const WedgeMonomial& u, int r) {
    if (!is_canonical(u)) throw InvalidInput("bar expects a canonical monomial");
    const std::vector<int> p = extended_prefix(u, r);
    std::vector<BeadTriple> f;
    f.reserve(p.size());
    for (int k : p) f.push_back(factorize(k, e_, l_));
    int omega = 0, omega_b = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            omega += f[i].a == f[j].a;
            omega_b += f[i].b == f[j].b;
        }
    const LaurentPoly pre = LaurentPoly::monomial(omega_b - omega, omega_b % 2 ? -1 : 1);

    Budget budget{opts_.fuel};
    const std::vector<int> reversed(p.rbegin(), p.rend());
    WedgeVector out;
    for (const auto& [w, c] : straighten_impl(reversed, budget)) {
        if (!w.empty() && w.back() <= u.s - r) continue;
        add_term(out, canonicalize(w, u.s), pre * c);
    }
    return out;
}

WedgeVector WedgeEngine::bar_vector(const WedgeVector& v) {
    WedgeVector out;
    for (const auto& [u, c] : v) {
        const LaurentPoly cb = bar_poly(c);
        for (const auto& [w, x] : bar(u)) add_term(out, w, cb * x);
    }
    return out;
}

}  // namespace fockcb

namespace fockcb {

std::vector<WedgeVector> bar_all(WedgeEngine& engine, const std::vector<WedgeMonomial>& us) {
    std::vector<WedgeVector> out(us.size());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
    for (long long t = 0; t < static_cast<long long>(us.size()); ++t) {
        try {
            out[t] = engine.bar(us[t]);
        } catch (...) {
#pragma omp critical(fockcb_bar_all_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

std::vector<WedgeVector> bar_all_serial(WedgeEngine& engine, const std::vector<WedgeMonomial>& us) {
    std::vector<WedgeVector> out;
    out.reserve(us.size());
    for (const auto& u : us) out.push_back(engine.bar(u));
    return out;
}

}  // namespace fockcb
