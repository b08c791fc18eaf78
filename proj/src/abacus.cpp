#include "fockcb/abacus.hpp"

#include "fockcb/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace fockcb {

namespace {

int floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return static_cast<int>(q);
}

int pos_mod(long long a, long long b) { return static_cast<int>(((a % b) + b) % b); }

void check_el(int e, int l) {
    if (e < 2) throw InvalidInput("e must be at least 2");
    if (l < 1) throw InvalidInput("l must be at least 1");
}

// Global index of runner value v on runner b.
int index_of(int v, int b, int e, int l) {
    int a = pos_mod(static_cast<long long>(v) - 1, e) + 1;
    int m = (a - v) / e;
    return a + e * (l - b) - e * l * m;
}

}  // namespace

BeadTriple factorize(int k, int e, int l) {
    check_el(e, l);
    BeadTriple t;
    t.a = pos_mod(static_cast<long long>(k) - 1, e) + 1;
    long long rest = (static_cast<long long>(k) - t.a) / e;  // l - b - l*m
    t.b = l - pos_mod(rest, l);
    t.m = -floor_div(rest - (l - t.b), l);
    return t;
}

int reconstruct(const BeadTriple& t, int e, int l) { return t.a + e * (l - t.b) - e * l * t.m; }

int runner_value(int k, int e, int l) {
    BeadTriple t = factorize(k, e, l);
    return t.a - e * t.m;
}

WedgeMonomial canonicalize(std::vector<int> prefix, int s) {
    for (std::size_t i = 1; i < prefix.size(); ++i)
        if (prefix[i] >= prefix[i - 1]) throw InvalidInput("wedge prefix must be strictly decreasing");
    if (!prefix.empty() && prefix.back() < s - static_cast<int>(prefix.size()) + 1)
        throw InvalidInput("wedge prefix collides with the tail of charge " + std::to_string(s));
    while (!prefix.empty() && prefix.back() == s - static_cast<int>(prefix.size()) + 1) prefix.pop_back();
    return WedgeMonomial{s, std::move(prefix)};
}

bool is_canonical(const WedgeMonomial& u) {
    const auto& p = u.prefix;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] >= p[i - 1]) return false;
    return p.empty() || p.back() > u.s - static_cast<int>(p.size()) + 1;
}

std::vector<int> extended_prefix(const WedgeMonomial& u, int r) {
    std::vector<int> p = u.prefix;
    while (static_cast<int>(p.size()) < r) p.push_back(u.s - static_cast<int>(p.size()));
    return p;
}

std::pair<MultiPartition, Charge> to_pair(const WedgeMonomial& u, int e, int l) {
    check_el(e, l);
    // The monomial is prefix ∪ {k <= T}; every runner is full below the
    // largest runner value reached by an index <= T.
    const int len = static_cast<int>(u.prefix.size());
    const int T = u.s - len;
    std::vector<int> full_below(l + 1, 0);
    std::vector<bool> seen(l + 1, false);
    int found = 0;
    for (int k = T; found < l; --k) {
        BeadTriple t = factorize(k, e, l);
        if (!seen[t.b]) {
            seen[t.b] = true;
            full_below[t.b] = t.a - e * t.m;
            ++found;
        }
    }
    std::vector<std::vector<int>> above(l + 1);
    for (int k : u.prefix) {
        BeadTriple t = factorize(k, e, l);
        above[t.b].push_back(t.a - e * t.m);
    }
    MultiPartition lam(l);
    Charge charge(l);
    for (int b = 1; b <= l; ++b) {
        auto& v = above[b];
        std::sort(v.begin(), v.end(), std::greater<>());
        int sb = full_below[b] + static_cast<int>(v.size());
        charge[b - 1] = sb;
        for (int i = 1; i <= static_cast<int>(v.size()); ++i) {
            int part = v[i - 1] - sb + i - 1;
            if (part > 0) lam[b - 1].push_back(part);
        }
    }
    return {lam, charge};
}

WedgeMonomial from_pair(const MultiPartition& lam, const Charge& charge, int e, int l) {
    check_el(e, l);
    if (!is_multipartition(lam, l) || static_cast<int>(charge.size()) != l)
        throw InvalidInput("from_pair: expected an l-partition and a charge of length l");
    int s = 0;
    for (int x : charge) s += x;
    // Runner b holds every value at or below s_b - len(lambda^(b)); below the
    // smallest such index all runners are full, so that is where the tail starts.
    int threshold = 0;
    for (int b = 1; b <= l; ++b) {
        const int full = index_of(charge[b - 1] - static_cast<int>(lam[b - 1].size()), b, e, l);
        threshold = b == 1 ? full : std::min(threshold, full);
    }
    std::vector<int> ks;
    for (int b = 1; b <= l; ++b) {
        const auto& p = lam[b - 1];
        for (int i = 1;; ++i) {
            int part = i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
            int k = index_of(part + charge[b - 1] - i + 1, b, e, l);
            if (k < threshold) break;
            ks.push_back(k);
        }
    }
    std::sort(ks.begin(), ks.end(), std::greater<>());
    std::vector<int> prefix;
    for (int k : ks)
        if (k >= threshold) prefix.push_back(k);
    if (threshold - 1 != s - static_cast<int>(prefix.size()))
        throw InvariantViolation("from_pair: tail does not match total charge");
    return canonicalize(std::move(prefix), s);
}

long long degree(const WedgeMonomial& u) {
    long long d = 0;
    for (std::size_t i = 0; i < u.prefix.size(); ++i) d += u.prefix[i] - (u.s - static_cast<long long>(i));
    return d;
}

std::vector<WedgeMonomial> enumerate_degree_component(int s, int N) {
    std::vector<WedgeMonomial> out;
    for (const auto& g : partitions(N)) {
        std::vector<int> prefix;
        for (std::size_t i = 0; i < g.size(); ++i) prefix.push_back(s - static_cast<int>(i) + g[i]);
        out.push_back(canonicalize(std::move(prefix), s));
    }
    return out;
}

std::string format_monomial(const WedgeMonomial& u) {
    std::string out = "s=" + std::to_string(u.s) + "; k=";
    for (std::size_t i = 0; i < u.prefix.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(u.prefix[i]);
    }
    return out;
}

WedgeMonomial parse_monomial(std::string_view text) {
    auto trim = [](std::string_view x) {
        while (!x.empty() && x.front() == ' ') x.remove_prefix(1);
        while (!x.empty() && x.back() == ' ') x.remove_suffix(1);
        return x;
    };
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw InvalidInput("monomial must look like 's=<int>; k=<k1,...>'");
    auto lhs = trim(text.substr(0, semi));
    auto rhs = trim(text.substr(semi + 1));
    if (lhs.substr(0, 2) != "s=" || rhs.substr(0, 2) != "k=")
        throw InvalidInput("monomial must look like 's=<int>; k=<k1,...>'");
    Charge s = parse_charge(lhs.substr(2));
    if (s.size() != 1) throw InvalidInput("monomial charge must be a single integer");
    std::vector<int> prefix;
    auto ks = trim(rhs.substr(2));
    if (!ks.empty()) prefix = parse_charge(ks);
    return canonicalize(std::move(prefix), s[0]);
}

std::string abacus_diagram(const WedgeMonomial& u, int e, int l) {
    auto [lam, charge] = to_pair(u, e, l);
    int hi = u.prefix.empty() ? u.s : u.prefix.front();
    int lo = u.s - static_cast<int>(u.prefix.size()) - e * l;
    std::set<int> beads(u.prefix.begin(), u.prefix.end());
    std::map<int, std::string> rows;
    int vmax = runner_value(hi, e, l) + 1, vmin = runner_value(lo, e, l) - 1;
    for (int k = hi; k > lo; --k) {
        vmax = std::max(vmax, runner_value(k, e, l));
        vmin = std::min(vmin, runner_value(k, e, l));
    }
    std::string out;
    for (int b = 1; b <= l; ++b) {
        std::string line = "runner " + std::to_string(b) + " (s=" + std::to_string(charge[b - 1]) + "): ";
        for (int v = vmax; v >= vmin; --v) {
            int k = index_of(v, b, e, l);
            bool bead = beads.count(k) || k <= u.s - static_cast<int>(u.prefix.size());
            line += bead ? '#' : '.';
        }
        out += line + "  " + format_multipartition(MultiComposition{lam[b - 1]}) + "\n";
    }
    return out;
}

}  // namespace fockcb
