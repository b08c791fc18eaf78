#pragma once

#include "fockcb/avalue.hpp"
#include "fockcb/fock.hpp"
#include "fockcb/wedge.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fockcb {

// Canonical basis elements G(u) of the semi-infinite wedge space, computed
// from the bar involution and cached per monomial. Thread-safe.
class CanonicalBasis {
public:
    CanonicalBasis(int e, int l, EngineOptions opts = {});

    WedgeEngine& engine() { return engine_; }
    int e() const { return engine_.e(); }
    int l() const { return engine_.l(); }

    // Monomials reachable from u0 through bar supports, topologically sorted
    // (u0 first, every bar edge points forward). Throws InvariantViolation on
    // a cycle.
    std::vector<WedgeMonomial> bar_closure(const WedgeMonomial& u0);

    // Bar-invariant element equal to u modulo qZ[q]-combinations of other
    // monomials.
    WedgeVector element(const WedgeMonomial& u);

    std::size_t cache_size() const { return g_memo_.size(); }

private:
    WedgeEngine engine_;
    ConcurrentMemo<std::vector<int>, WedgeVector, IntVectorHash> g_memo_;
};

struct CanonicalElement {
    MultiPartition label;
    Charge charge;
    WedgeVector wedge;
    FockVector expansion;  // keys may carry other charges
};

CanonicalElement canonical_element(CanonicalBasis& basis, const MultiPartition& mu, const Charge& charge);

struct DecompositionMatrix {
    int e = 2;
    int l = 1;
    Charge charge;
    int n = 0;
    std::vector<MultiPartition> rows;        // ascending a-value, text order on ties
    std::vector<long long> row_avalues;      // calibrated, minimal row at 0
    std::vector<MultiPartition> cols;        // Uglov labels, same order
    std::vector<std::vector<LaurentPoly>> q_entries;  // [row][col]
    std::vector<std::vector<BigInt>> entries;         // q = 1
    // One line per nonzero coefficient of an Uglov column on a different charge.
    std::vector<std::string> cross_charge_support;

    int row_index(const MultiPartition& lam) const;
    int col_index(const MultiPartition& mu) const;
};

DecompositionMatrix decomposition_matrix(int e, int l, const Charge& charge, int n, EngineOptions opts = {});
DecompositionMatrix decomposition_matrix_serial(int e, int l, const Charge& charge, int n, EngineOptions opts = {});

struct UnitriangularReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Diagonal ones, strictly larger a-values below the diagonal in each column,
// nonnegative entries, and each column's minimal-a row is its own label.
UnitriangularReport verify_unitriangular(const DecompositionMatrix& M);

std::string to_csv(const DecompositionMatrix& M);
std::string to_latex(const DecompositionMatrix& M);
nlohmann::json to_json(const DecompositionMatrix& M, bool keep_q);
nlohmann::json to_json(const WedgeVector& v);
nlohmann::json to_json(const FockVector& v);

}  // namespace fockcb
