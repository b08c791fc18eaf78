#pragma once

#include "fockcb/combinatorics.hpp"
#include "fockcb/qint.hpp"

#include <compare>
#include <map>

namespace fockcb {

struct FockKey {
    MultiPartition lambda;
    Charge charge;
    auto operator<=>(const FockKey&) const = default;
};

using FockVector = std::map<FockKey, LaurentPoly>;

void add_term(FockVector& v, const FockKey& k, const LaurentPoly& c);

// #addable i-nodes - #removable i-nodes.
int n_total(const MultiPartition& lam, int i, const Charge& charge, int e);
// Same difference restricted to nodes strictly above / below gamma, where
// gamma is an addable i-node of lam (throws InvalidInput otherwise).
int n_above(const MultiPartition& lam, const Node& gamma, int i, const Charge& charge, int e);
int n_below(const MultiPartition& lam, const Node& gamma, int i, const Charge& charge, int e);

FockVector apply_f(int i, const FockVector& v, int e);
FockVector apply_e(int i, const FockVector& v, int e);
FockVector apply_k(int i, const FockVector& v, int e);

}  // namespace fockcb
