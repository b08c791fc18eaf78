#pragma once

#include "fockcb/combinatorics.hpp"

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fockcb {

using Rational = boost::rational<long long>;

// m^(j) = s_j - (j-1)e/l + alpha*e with the smallest alpha >= 0 making every
// entry nonnegative, unless alpha is forced.
struct MVector {
    std::vector<Rational> m;
    int alpha = 0;
};

MVector m_vector(int e, int l, const Charge& charge, std::optional<int> alpha = std::nullopt);
bool is_integral(const MVector& m);

// B'^(i)_j = lambda^(i)_j - j + h + m^(i) for j = 1..h.
using TranslatedSymbol = std::vector<std::vector<long long>>;
TranslatedSymbol translated_symbol(const MultiComposition& lam, const MVector& m, int h);

// The two explicit sums of the a-value with the parameter-only constant left
// out. Pairs inside one component run over positions j < j' (for
// multipartitions these are exactly the pairs a > b).
Rational a_rel(const MultiComposition& lam, const MVector& m, int h);
Rational a_rel(const MultiComposition& lam, int e, int l, const Charge& charge, int h);

// mu strictly below nu, compared at the common height max(h_mu, h_nu).
bool precedes(const MultiComposition& mu, const MultiComposition& nu, int e, int l, const Charge& charge);

struct AValueRow {
    MultiPartition lambda;
    long long value = 0;
};

struct AValueTable {
    std::vector<AValueRow> rows;  // ascending value, text order on ties
    MultiPartition calibration;   // row fixed to 0
    int height = 0;
    MVector m;
};

// Calibrated a-values of every l-partition of rank n (or of `labels`).
AValueTable avalue_table(int e, int l, const Charge& charge, int n,
                         const std::vector<MultiPartition>* labels = nullptr);

}  // namespace fockcb
