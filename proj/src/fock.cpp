#include "fockcb/fock.hpp"

#include "fockcb/errors.hpp"

#include <algorithm>

namespace fockcb {

void add_term(FockVector& v, const FockKey& k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

int n_total(const MultiPartition& lam, int i, const Charge& charge, int e) {
    return static_cast<int>(addable_nodes(lam, i, charge, e).size()) -
           static_cast<int>(removable_nodes(lam, i, charge, e).size());
}

namespace {

template <class Pred>
int count_diff(const MultiPartition& lam, const Node& gamma, int i, const Charge& charge, int e, Pred keep) {
    auto add = addable_nodes(lam, i, charge, e);
    if (residue(gamma, charge, e) != i || std::find(add.begin(), add.end(), gamma) == add.end())
        throw InvalidInput("node " + format_node(gamma) + " is not an addable " + std::to_string(i) + "-node");
    int n = 0;
    for (const auto& g : add) n += keep(g);
    for (const auto& g : removable_nodes(lam, i, charge, e)) n -= keep(g);
    return n;
}

}  // namespace

int n_above(const MultiPartition& lam, const Node& gamma, int i, const Charge& charge, int e) {
    return count_diff(lam, gamma, i, charge, e, [&](const Node& g) { return above(g, gamma, charge); });
}

int n_below(const MultiPartition& lam, const Node& gamma, int i, const Charge& charge, int e) {
    return count_diff(lam, gamma, i, charge, e, [&](const Node& g) { return above(gamma, g, charge); });
}

FockVector apply_f(int i, const FockVector& v, int e) {
    FockVector out;
    for (const auto& [key, c] : v)
        for (const auto& g : addable_nodes(key.lambda, i, key.charge, e))
            add_term(out, FockKey{add_node(key.lambda, g), key.charge},
                     c.shifted(n_below(key.lambda, g, i, key.charge, e)));
    return out;
}

FockVector apply_e(int i, const FockVector& v, int e) {
    FockVector out;
    for (const auto& [key, c] : v)
        for (const auto& g : removable_nodes(key.lambda, i, key.charge, e)) {
            MultiPartition mu = remove_node(key.lambda, g);
            add_term(out, FockKey{mu, key.charge}, c.shifted(-n_above(mu, g, i, key.charge, e)));
        }
    return out;
}

FockVector apply_k(int i, const FockVector& v, int e) {
    FockVector out;
    for (const auto& [key, c] : v) add_term(out, key, c.shifted(n_total(key.lambda, i, key.charge, e)));
    return out;
}

}  // namespace fockcb
