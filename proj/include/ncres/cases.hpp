#pragma once

#include "ncres/scalar.hpp"
#include "ncres/symbols.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncres {

enum class OperatorKind { Dirac, Signature };

std::string to_string(OperatorKind op);

/// One index tuple of the boundary-term sum: symbol orders r, l and the
/// derivative counts k, j, |alpha| subject to r-k-|alpha|+l-j-1 = -n.
struct CaseIndex {
    int r, l, k, j, alpha;
    std::string label;  // conventional case name ("a I", "b", ...)
};

/// Exact per-case contribution (coefficient of the boundary volume form).
struct CaseResult {
    CaseIndex index;
    ScalarSum contribution;
};

struct PhiReport {
    OperatorKind op;
    int n;
    std::vector<CaseResult> cases;
    ScalarSum total;
};

/// All solutions of r - k - |alpha| + l - j - 1 = -n with r, l in
/// [min_order, -1].  Five cases for n = 4, one for n = 3.
std::vector<CaseIndex> enumerate_cases(int n, int min_order = -2);

/// Evaluate one case of the boundary sum:
///   prefactor * sphere( line( trace[ d^j_{xn} d^alpha_{xi'} d^k_{xin} pi+ q_r
///                                    x  d^alpha_{x'} d^{j+1}_{xin} d^k_{xn} q_l ] ) )
/// with d^alpha_{x'} == 0 at the base point, so every |alpha| > 0 case
/// vanishes.  The prefactor is (-i)^{|alpha|+j+k+1} / (alpha! (j+k+1)!).
CaseResult evaluate_case(const CaseIndex& idx, const SymbolSet& symbols);

/// The integrand trace of a case before the xi_n and sphere integrals.
RatFunc case_trace(const CaseIndex& idx, const SymbolSet& symbols);

PhiReport assemble_phi(const SymbolSet& symbols, OperatorKind op);
PhiReport assemble_phi(OperatorKind op, int n);

/// res_{1,1} = case a II integral; res_{2,1} = case b integral (n = 4).
ScalarSum res_11(const SymbolSet& symbols);
ScalarSum res_21(const SymbolSet& symbols);

/// Kastler-Kalau-Walze-type total: the computed boundary term plus the
/// interior coefficient quoted from prior work (never recomputed here).
struct KkwReport {
    OperatorKind op;
    int n;
    ScalarSum boundary;                    // computed
    std::optional<std::string> interior;   // quoted coefficient of int_M s dvol
};

KkwReport kkw_total(OperatorKind op, int n);

}  // namespace ncres
