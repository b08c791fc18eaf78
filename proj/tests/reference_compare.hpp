#pragma once
#include "fockcb/canonical.hpp"
#include "reference_tables.hpp"

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace reftables {

using Triple = std::tuple<std::string, std::string, int>;

// Every (row, column, entry) of the reference matrix, zeros included.
inline std::set<Triple> triples(const Case& c) {
    std::set<Triple> out;
    for (std::size_t i = 0; i < c.matrix.size(); ++i)
        for (std::size_t j = 0; j < c.matrix[i].size(); ++j)
            out.insert({c.avalues[i].first, c.avalues[j].first, c.matrix[i][j] == '1' ? 1 : 0});
    return out;
}

inline std::set<Triple> triples(const fockcb::DecompositionMatrix& M) {
    std::set<Triple> out;
    for (std::size_t i = 0; i < M.rows.size(); ++i)
        for (std::size_t j = 0; j < M.cols.size(); ++j)
            out.insert({fockcb::format_multipartition(M.rows[i]), fockcb::format_multipartition(M.cols[j]),
                        static_cast<int>(M.entries[i][j])});
    return out;
}

// Columns as sets of nonzero row labels, with column labels forgotten.
inline std::multiset<std::set<std::string>> column_supports(const std::set<Triple>& t) {
    std::map<std::string, std::set<std::string>> by_col;
    for (const auto& [r, c, x] : t) {
        by_col[c];
        if (x != 0) by_col[c].insert(r);
    }
    std::multiset<std::set<std::string>> out;
    for (auto& [c, rows] : by_col) out.insert(rows);
    return out;
}

// Human-readable difference between two triple sets.
inline std::vector<std::string> diff(const std::set<Triple>& want, const std::set<Triple>& got) {
    std::vector<std::string> out;
    for (const auto& t : want)
        if (!got.count(t) && std::get<2>(t) != 0)
            out.push_back("expected 1 at (" + std::get<0>(t) + ", " + std::get<1>(t) + ")");
    for (const auto& t : got)
        if (!want.count(t) && std::get<2>(t) != 0)
            out.push_back("computed " + std::to_string(std::get<2>(t)) + " at (" + std::get<0>(t) + ", " +
                          std::get<1>(t) + ")");
    return out;
}

}  // namespace reftables
