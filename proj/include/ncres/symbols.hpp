#pragma once

#include "ncres/algebra.hpp"
#include "ncres/geometry.hpp"

namespace ncres {

/// 1-jet in the normal variable at the base point: a value and its
/// d/dx_n-derivative.  Tangential x-derivatives vanish identically in the
/// chosen normal coordinates.
struct JetElem {
    AlgebraElement val;
    AlgebraElement dxn;
    bool has_dxn = true;  // false once the jet depth is consumed

    friend JetElem operator+(const JetElem& a, const JetElem& b) {
        return {a.val + b.val, a.dxn + b.dxn, a.has_dxn && b.has_dxn};
    }
    friend JetElem operator-(const JetElem& a) { return {-a.val, -a.dxn, a.has_dxn}; }
    friend JetElem operator*(const JetElem& a, const JetElem& b) {  // Leibniz
        return {a.val * b.val, a.dxn * b.val + a.val * b.dxn, a.has_dxn && b.has_dxn};
    }
    friend JetElem operator*(const JetElem& a, const GRat& c) {
        return {a.val * c, a.dxn * c, a.has_dxn};
    }

    JetElem derive_xin() const { return {val.derive_xin(), dxn.derive_xin(), has_dxn}; }
    JetElem pi_plus() const { return {pi_plus_symbol(val), pi_plus_symbol(dxn), has_dxn}; }
    JetElem reduce_sphere() const { return {val.reduce_sphere(), dxn.reduce_sphere(), has_dxn}; }

    /// Consume the normal derivative; a second request is a jet-depth error.
    AlgebraElement derive_xn() const {
        if (!has_dxn) throw SymbolError("jet: second x_n-derivative requested");
        return dxn;
    }
};

/// The graded symbol data needed by the boundary-residue cases: q_{-1} as a
/// full 1-jet and q_{-2} at the base point, both restricted to |xi'| = 1.
struct SymbolSet {
    Backend backend;
    JetElem p1;           // order +1, polynomial entries (not sphere-restricted)
    AlgebraElement p0;    // order 0 at x_0
    JetElem q1;           // q_{-1}
    JetElem q2;           // q_{-2}; x_n-derivative unavailable (never needed)
};

/// p_1 = i c(xi) as a 1-jet: value i(c(xi') + xi_n c(dx_n)), normal
/// derivative i (H/2) c(xi').
JetElem principal_symbol(const Backend& backend);

/// Invert sigma(D) = p_1 + p_0 through order -2:
///   q_{-1} = p_1^{-1},
///   q_{-2} = -q_{-1}[p_0 q_{-1} + d_{xi_n} p_1 * D_{x_n} q_{-1}],
/// the tangential terms of the sum vanishing at the base point.
/// Results are restricted to the unit tangential sphere.
SymbolSet invert_symbol(const Backend& backend, const JetElem& p1, const AlgebraElement& p0);

/// Convenience: build p_1, p_0 (from the collar-metric connection) and invert.
SymbolSet build_symbols(const Backend& backend);

}  // namespace ncres
