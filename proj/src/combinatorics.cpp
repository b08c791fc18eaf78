#include "fockcb/combinatorics.hpp"

#include "fockcb/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace fockcb {

namespace {

int mod(long long a, int e) { return static_cast<int>(((a % e) + e) % e); }

int part(const std::vector<int>& p, int row) {
    return row >= 1 && row <= static_cast<int>(p.size()) ? p[row - 1] : 0;
}

void sort_above_first(std::vector<Node>& nodes, const Charge& charge) {
    std::sort(nodes.begin(), nodes.end(), [&](const Node& a, const Node& b) {
        int ca = content(a, charge), cb = content(b, charge);
        if (ca != cb) return ca < cb;
        return a.comp > b.comp;
    });
}

int parse_int(std::string_view s, std::string_view what) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw InvalidInput("cannot parse " + std::string(what) + " from '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

bool is_multipartition(const MultiPartition& lam, int l) {
    return static_cast<int>(lam.size()) == l && std::all_of(lam.begin(), lam.end(), is_partition);
}

int rank(const MultiComposition& lam) {
    int n = 0;
    for (const auto& p : lam) n = std::accumulate(p.begin(), p.end(), n);
    return n;
}

int height(const MultiComposition& lam) {
    std::size_t h = 0;
    for (const auto& p : lam) h = std::max(h, p.size());
    return static_cast<int>(h);
}

bool contains(const MultiPartition& lam, const Node& g) {
    if (g.comp < 1 || g.comp > static_cast<int>(lam.size()) || g.row < 1 || g.col < 1) return false;
    return g.col <= part(lam[g.comp - 1], g.row);
}

int content(const Node& g, const Charge& charge) { return g.col - g.row + charge.at(g.comp - 1); }

int residue(const Node& g, const Charge& charge, int e) { return mod(content(g, charge), e); }

bool above(const Node& g, const Node& h, const Charge& charge) {
    int cg = content(g, charge), ch = content(h, charge);
    return cg < ch || (cg == ch && h.comp < g.comp);
}

std::vector<Node> addable_nodes(const MultiPartition& lam, int i, const Charge& charge, int e) {
    std::vector<Node> out;
    for (int c = 1; c <= static_cast<int>(lam.size()); ++c) {
        const auto& p = lam[c - 1];
        for (int a = 1; a <= static_cast<int>(p.size()) + 1; ++a) {
            int len = part(p, a);
            if (a == 1 || part(p, a - 1) > len) {
                Node g{a, len + 1, c};
                if (i < 0 || residue(g, charge, e) == i) out.push_back(g);
            }
        }
    }
    sort_above_first(out, charge);
    return out;
}

std::vector<Node> removable_nodes(const MultiPartition& lam, int i, const Charge& charge, int e) {
    std::vector<Node> out;
    for (int c = 1; c <= static_cast<int>(lam.size()); ++c) {
        const auto& p = lam[c - 1];
        for (int a = 1; a <= static_cast<int>(p.size()); ++a) {
            if (p[a - 1] > part(p, a + 1)) {
                Node g{a, p[a - 1], c};
                if (i < 0 || residue(g, charge, e) == i) out.push_back(g);
            }
        }
    }
    sort_above_first(out, charge);
    return out;
}

MultiPartition add_node(const MultiPartition& lam, const Node& g) {
    MultiPartition out = lam;
    auto& p = out.at(g.comp - 1);
    if (g.row == static_cast<int>(p.size()) + 1 && g.col == 1) p.push_back(1);
    else if (g.row <= static_cast<int>(p.size()) && p[g.row - 1] + 1 == g.col) ++p[g.row - 1];
    else throw InvalidInput("node " + format_node(g) + " is not addable");
    if (!is_partition(p)) throw InvalidInput("node " + format_node(g) + " is not addable");
    return out;
}

MultiPartition remove_node(const MultiPartition& lam, const Node& g) {
    MultiPartition out = lam;
    auto& p = out.at(g.comp - 1);
    if (g.row < 1 || g.row > static_cast<int>(p.size()) || p[g.row - 1] != g.col)
        throw InvalidInput("node " + format_node(g) + " is not removable");
    if (--p[g.row - 1] == 0) p.pop_back();
    if (!is_partition(p)) throw InvalidInput("node " + format_node(g) + " is not removable");
    return out;
}

namespace {
void gen_partitions(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::uint64_t partition_count(int n) {
    if (n < 0) return 0;
    // p(k) via counting partitions with parts <= j, one part size at a time.
    std::vector<std::uint64_t> p(n + 1, 0);
    p[0] = 1;
    for (int j = 1; j <= n; ++j)
        for (int k = j; k <= n; ++k) p[k] += p[k - j];
    return p[n];
}

std::vector<MultiPartition> multipartitions(int l, int n) {
    std::vector<MultiPartition> out;
    if (l < 1 || n < 0) return out;
    std::vector<std::vector<Partition>> by_size(n + 1);
    for (int k = 0; k <= n; ++k) by_size[k] = partitions(k);
    MultiPartition cur(l);
    auto rec = [&](auto&& self, int c, int left) -> void {
        if (c == l - 1) {
            for (const auto& p : by_size[left]) {
                cur[c] = p;
                out.push_back(cur);
            }
            return;
        }
        for (int k = 0; k <= left; ++k)
            for (const auto& p : by_size[k]) {
                cur[c] = p;
                self(self, c + 1, left - k);
            }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool is_split_semisimple(int e, const Charge& charge, int n) {
    if (e < 2) throw InvalidInput("e must be at least 2");
    if (n == 0) return true;
    if (e <= n) return false;
    for (std::size_t i = 0; i < charge.size(); ++i)
        for (std::size_t j = 0; j < charge.size(); ++j) {
            if (i == j) continue;
            for (int d = -(n - 1); d <= n - 1; ++d)
                if (mod(static_cast<long long>(d) + charge[i] - charge[j], e) == 0) return false;
        }
    return true;
}

MultiComposition add_nodes_to_part(const MultiComposition& lam, int comp, int row, int r) {
    if (r < 0) throw InvalidInput("add_nodes_to_part: negative node count");
    if (comp < 1 || comp > static_cast<int>(lam.size()))
        throw InvalidInput("add_nodes_to_part: component " + std::to_string(comp) + " out of range");
    const auto& p = lam[comp - 1];
    if (row < 1 || row > static_cast<int>(p.size()) + 1)
        throw InvalidInput("add_nodes_to_part: row " + std::to_string(row) + " out of range");
    MultiComposition out = lam;
    if (r == 0) return out;
    if (row == static_cast<int>(p.size()) + 1) out[comp - 1].push_back(r);
    else out[comp - 1][row - 1] += r;
    return out;
}

std::string format_multipartition(const MultiComposition& lam) {
    std::string out;
    for (std::size_t c = 0; c < lam.size(); ++c) {
        if (c) out += '|';
        if (lam[c].empty()) {
            out += '-';
            continue;
        }
        for (std::size_t i = 0; i < lam[c].size(); ++i) {
            if (i) out += ',';
            out += std::to_string(lam[c][i]);
        }
    }
    return out;
}

MultiComposition parse_multicomposition(std::string_view text) {
    if (text.empty()) throw InvalidInput("empty multipartition text");
    MultiComposition out;
    for (auto comp : split(text, '|')) {
        while (!comp.empty() && comp.front() == ' ') comp.remove_prefix(1);
        while (!comp.empty() && comp.back() == ' ') comp.remove_suffix(1);
        Composition p;
        if (comp != "-") {
            for (auto x : split(comp, ',')) {
                int v = parse_int(x, "part");
                if (v <= 0) throw InvalidInput("parts must be positive in '" + std::string(text) + "'");
                p.push_back(v);
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

MultiPartition parse_multipartition(std::string_view text) {
    MultiPartition out = parse_multicomposition(text);
    for (const auto& p : out)
        if (!is_partition(p)) throw InvalidInput("'" + std::string(text) + "' has a component that is not a partition");
    return out;
}

std::string format_charge(const Charge& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

Charge parse_charge(std::string_view text) {
    if (text.empty()) throw InvalidInput("empty charge");
    Charge s;
    for (auto x : split(text, ',')) s.push_back(parse_int(x, "charge entry"));
    return s;
}

std::string format_node(const Node& g) {
    return "(" + std::to_string(g.row) + "," + std::to_string(g.col) + "," + std::to_string(g.comp) + ")";
}

}  // namespace fockcb
