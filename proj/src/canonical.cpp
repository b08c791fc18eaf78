#include "fockcb/canonical.hpp"

#include "fockcb/crystal.hpp"
#include "fockcb/errors.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace fockcb {

namespace {

std::vector<int> monomial_key(const WedgeMonomial& u) {
    std::vector<int> k;
    k.reserve(u.prefix.size() + 1);
    k.push_back(u.s);
    k.insert(k.end(), u.prefix.begin(), u.prefix.end());
    return k;
}

}  // namespace

CanonicalBasis::CanonicalBasis(int e, int l, EngineOptions opts) : engine_(e, l, opts) {}

std::vector<WedgeMonomial> CanonicalBasis::bar_closure(const WedgeMonomial& u0) {
    // Iterative DFS; post-order reversed is a topological order.
    enum class Mark { Open, Done };
    std::map<WedgeMonomial, Mark> mark;
    std::vector<WedgeMonomial> post;
    struct Frame {
        WedgeMonomial u;
        std::vector<WedgeMonomial> succ;
        std::size_t next = 0;
    };
    auto successors = [&](const WedgeMonomial& u) {
        std::vector<WedgeMonomial> s;
        for (const auto& [w, c] : engine_.bar(u))
            if (w != u) s.push_back(w);
        return s;
    };
    std::vector<Frame> stack;
    stack.push_back({u0, successors(u0)});
    mark[u0] = Mark::Open;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next == f.succ.size()) {
            mark[f.u] = Mark::Done;
            post.push_back(f.u);
            stack.pop_back();
            continue;
        }
        WedgeMonomial w = f.succ[f.next++];
        auto it = mark.find(w);
        if (it == mark.end()) {
            mark[w] = Mark::Open;
            auto s = successors(w);
            stack.push_back({std::move(w), std::move(s)});
        } else if (it->second == Mark::Open) {
            throw InvariantViolation("bar closure has a cycle through " + format_monomial(w) + " (reached from " +
                                     format_monomial(stack.back().u) + ")");
        }
    }
    std::reverse(post.begin(), post.end());
    return post;
}

WedgeVector CanonicalBasis::element(const WedgeMonomial& u0) {
    const bool memo = engine_.options().memoize;
    if (memo)
        if (auto hit = g_memo_.find(monomial_key(u0))) return *hit;

    const std::vector<WedgeMonomial> order = bar_closure(u0);
    std::map<WedgeMonomial, std::size_t> pos;
    for (std::size_t t = 0; t < order.size(); ++t) pos[order[t]] = t;
    std::map<WedgeMonomial, std::shared_ptr<const WedgeVector>> local;

    auto lookup = [&](const WedgeMonomial& a) -> std::shared_ptr<const WedgeVector> {
        if (auto it = local.find(a); it != local.end()) return it->second;
        if (memo)
            if (auto hit = g_memo_.find(monomial_key(a))) return hit;
        throw InvariantViolation("canonical basis element of " + format_monomial(a) + " requested before it was built");
    };

    for (auto v = order.rbegin(); v != order.rend(); ++v) {
        if (memo)
            if (auto hit = g_memo_.find(monomial_key(*v))) {
                local[*v] = hit;
                continue;
            }
        // d = bar(v) - v, peeled off in topological order.
        std::map<std::size_t, std::pair<WedgeMonomial, LaurentPoly>> d;
        for (const auto& [w, c] : engine_.bar(*v)) {
            if (w == *v) {
                if (c != LaurentPoly(1))
                    throw InvariantViolation("coefficient of " + format_monomial(w) + " in its bar image is " + to_text(c));
                continue;
            }
            d.emplace(pos.at(w), std::make_pair(w, c));
        }
        WedgeVector g{{*v, LaurentPoly(1)}};
        while (!d.empty()) {
            auto first = d.begin();
            const WedgeMonomial a = first->second.first;
            const LaurentPoly gamma = first->second.second;
            if (!is_antisymmetric(gamma))
                throw InvariantViolation("correction coefficient " + to_text(gamma) + " at " + format_monomial(a) +
                                         " while building G(" + format_monomial(*v) + ") is not bar-antisymmetric");
            const LaurentPoly beta = truncate_positive(gamma);
            for (const auto& [w, c] : *lookup(a)) {
                const std::size_t p = pos.at(w);
                auto it = d.find(p);
                LaurentPoly delta = gamma * c;
                if (it == d.end()) {
                    d.emplace(p, std::make_pair(w, -delta));
                } else {
                    it->second.second -= delta;
                    if (it->second.second.is_zero()) d.erase(it);
                }
                if (!beta.is_zero()) add_term(g, w, beta * c);
            }
        }
        std::shared_ptr<const WedgeVector> stored;
        if (memo) stored = g_memo_.insert(monomial_key(*v), std::move(g));
        else stored = std::make_shared<const WedgeVector>(std::move(g));
        local[*v] = stored;
    }
    return *local.at(u0);
}

CanonicalElement canonical_element(CanonicalBasis& basis, const MultiPartition& mu, const Charge& charge) {
    CanonicalElement out;
    out.label = mu;
    out.charge = charge;
    out.wedge = basis.element(from_pair(mu, charge, basis.e(), basis.l()));
    for (const auto& [w, c] : out.wedge) {
        auto [lam, ch] = to_pair(w, basis.e(), basis.l());
        add_term(out.expansion, FockKey{lam, ch}, c);
    }
    return out;
}

int DecompositionMatrix::row_index(const MultiPartition& lam) const {
    auto it = std::find(rows.begin(), rows.end(), lam);
    return it == rows.end() ? -1 : static_cast<int>(it - rows.begin());
}

int DecompositionMatrix::col_index(const MultiPartition& mu) const {
    auto it = std::find(cols.begin(), cols.end(), mu);
    return it == cols.end() ? -1 : static_cast<int>(it - cols.begin());
}

namespace {

template <bool Parallel>
DecompositionMatrix build_matrix(int e, int l, const Charge& charge, int n, EngineOptions opts) {
    if (static_cast<int>(charge.size()) != l) throw InvalidInput("charge length must equal l");
    if (n < 0) throw InvalidInput("rank must be nonnegative");
    DecompositionMatrix M;
    M.e = e;
    M.l = l;
    M.charge = charge;
    M.n = n;
    const AValueTable table = avalue_table(e, l, charge, n);
    std::map<MultiPartition, long long> aval;
    for (const auto& r : table.rows) {
        M.rows.push_back(r.lambda);
        M.row_avalues.push_back(r.value);
        aval[r.lambda] = r.value;
    }
    const auto uglov = uglov_set(e, l, charge, n);
    for (const auto& lam : M.rows)
        if (uglov.count(lam)) M.cols.push_back(lam);

    CanonicalBasis basis(e, l, opts);
    std::vector<CanonicalElement> cols(M.cols.size());
    if constexpr (Parallel) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
        for (long long j = 0; j < static_cast<long long>(M.cols.size()); ++j) {
            try {
                cols[j] = canonical_element(basis, M.cols[j], charge);
            } catch (...) {
#pragma omp critical(fockcb_matrix_error)
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        for (std::size_t j = 0; j < M.cols.size(); ++j) cols[j] = canonical_element(basis, M.cols[j], charge);
    }

    M.q_entries.assign(M.rows.size(), std::vector<LaurentPoly>(M.cols.size()));
    M.entries.assign(M.rows.size(), std::vector<BigInt>(M.cols.size(), 0));
    for (std::size_t j = 0; j < M.cols.size(); ++j) {
        for (const auto& [key, c] : cols[j].expansion) {
            if (key.charge != charge) {
                M.cross_charge_support.push_back(format_multipartition(M.cols[j]) + " -> " +
                                                 format_multipartition(key.lambda) + " @ " + format_charge(key.charge) +
                                                 " : " + to_text(c));
                continue;
            }
            const int i = M.row_index(key.lambda);
            if (i < 0) throw InvariantViolation("canonical element has a row of the wrong rank");
            M.q_entries[i][j] = c;
            M.entries[i][j] = eval_one(c);
        }
    }
    return M;
}

}  // namespace

DecompositionMatrix decomposition_matrix(int e, int l, const Charge& charge, int n, EngineOptions opts) {
    return build_matrix<true>(e, l, charge, n, opts);
}

DecompositionMatrix decomposition_matrix_serial(int e, int l, const Charge& charge, int n, EngineOptions opts) {
    return build_matrix<false>(e, l, charge, n, opts);
}

UnitriangularReport verify_unitriangular(const DecompositionMatrix& M) {
    UnitriangularReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    std::map<int, std::size_t> minimal_row_of;
    for (std::size_t j = 0; j < M.cols.size(); ++j) {
        const std::string col = format_multipartition(M.cols[j]);
        const int d = M.row_index(M.cols[j]);
        if (d < 0) {
            fail("column " + col + " has no row of the same label");
            continue;
        }
        if (M.entries[d][j] != 1) fail("diagonal entry of column " + col + " is " + M.entries[d][j].str());
        int best = -1;
        for (std::size_t i = 0; i < M.rows.size(); ++i) {
            const BigInt& x = M.entries[i][j];
            if (x < 0) fail("negative entry at (" + format_multipartition(M.rows[i]) + ", " + col + ")");
            if (x == 0) continue;
            if (best < 0 || M.row_avalues[i] < M.row_avalues[best]) best = static_cast<int>(i);
            if (static_cast<int>(i) != d && M.row_avalues[i] <= M.row_avalues[d])
                fail("row " + format_multipartition(M.rows[i]) + " in column " + col + " has a-value " +
                     std::to_string(M.row_avalues[i]) + " <= " + std::to_string(M.row_avalues[d]));
        }
        if (best >= 0) {
            if (best != d) fail("minimal row of column " + col + " is " + format_multipartition(M.rows[best]));
            if (minimal_row_of.count(best)) fail("minimal row " + format_multipartition(M.rows[best]) + " is shared by two columns");
            minimal_row_of[best] = j;
        }
    }
    return rep;
}

std::string to_csv(const DecompositionMatrix& M) {
    std::string out = "row,column,entry\n";
    for (std::size_t i = 0; i < M.rows.size(); ++i)
        for (std::size_t j = 0; j < M.cols.size(); ++j)
            out += "\"" + format_multipartition(M.rows[i]) + "\",\"" + format_multipartition(M.cols[j]) + "\"," +
                   M.entries[i][j].str() + "\n";
    return out;
}

std::string to_latex(const DecompositionMatrix& M) {
    auto label = [](const MultiPartition& lam) {
        std::string s = "(";
        for (std::size_t c = 0; c < lam.size(); ++c) {
            if (c) s += ",";
            if (lam[c].empty()) {
                s += "\\emptyset";
                continue;
            }
            s += "(";
            for (std::size_t i = 0; i < lam[c].size(); ++i) s += (i ? "," : "") + std::to_string(lam[c][i]);
            s += ")";
        }
        return s + ")";
    };
    std::string out = "\\begin{array}{c|c|" + std::string(M.cols.size(), 'c') + "}\n";
    out += " & a";
    for (const auto& c : M.cols) out += " & " + label(c);
    out += " \\\\\n\\hline\n";
    for (std::size_t i = 0; i < M.rows.size(); ++i) {
        out += label(M.rows[i]) + " & " + std::to_string(M.row_avalues[i]);
        for (std::size_t j = 0; j < M.cols.size(); ++j)
            out += " & " + (M.entries[i][j] == 0 ? std::string(".") : M.entries[i][j].str());
        out += " \\\\\n";
    }
    out += "\\end{array}\n";
    return out;
}

nlohmann::json to_json(const DecompositionMatrix& M, bool keep_q) {
    nlohmann::json j;
    j["e"] = M.e;
    j["l"] = M.l;
    j["charge"] = M.charge;
    j["rank"] = M.n;
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < M.rows.size(); ++i)
        rows.push_back({{"label", format_multipartition(M.rows[i])}, {"a", M.row_avalues[i]}});
    j["rows"] = rows;
    auto cols = nlohmann::json::array();
    for (const auto& c : M.cols) cols.push_back(format_multipartition(c));
    j["columns"] = cols;
    auto entries = nlohmann::json::array();
    for (std::size_t i = 0; i < M.rows.size(); ++i)
        for (std::size_t c = 0; c < M.cols.size(); ++c) {
            if (M.entries[i][c] == 0 && M.q_entries[i][c].is_zero()) continue;
            nlohmann::json t{{"row", format_multipartition(M.rows[i])},
                             {"column", format_multipartition(M.cols[c])},
                             {"entry", M.entries[i][c].str()}};
            if (keep_q) t["q"] = to_json(M.q_entries[i][c]);
            entries.push_back(t);
        }
    j["entries"] = entries;
    j["cross_charge_support"] = M.cross_charge_support;
    return j;
}

nlohmann::json to_json(const WedgeVector& v) {
    auto arr = nlohmann::json::array();
    for (const auto& [u, c] : v)
        arr.push_back({{"monomial", {{"s", u.s}, {"k", u.prefix}}}, {"text", format_monomial(u)}, {"coefficient", to_json(c)}});
    return arr;
}

nlohmann::json to_json(const FockVector& v) {
    auto arr = nlohmann::json::array();
    for (const auto& [k, c] : v)
        arr.push_back({{"multipartition", format_multipartition(k.lambda)},
                       {"charge", format_charge(k.charge)},
                       {"coefficient", to_json(c)}});
    return arr;
}

}  // namespace fockcb
