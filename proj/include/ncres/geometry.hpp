#pragma once

#include "ncres/algebra.hpp"
#include "ncres/poly.hpp"
#include "ncres/scalar.hpp"

#include <vector>

namespace ncres {

/// 1-jet of the collar metric g = h(x_n)^{-1} g^{boundary} + dx_n^2 at the
/// base point, in boundary normal coordinates: g_ij = delta_ij, tangential
/// derivatives vanish, and the only normal derivative is
/// d/dx_n g_ij = -H delta_ij for i, j < n (H = h'(0), kept formal).
struct MetricJet {
    int n;

    Poly g(int i, int j) const { return (i == j) ? Poly(1) : Poly(); }
    Poly g_inv(int i, int j) const { return g(i, j); }
    Poly dxn_g(int i, int j) const {
        if (i == j && i < n - 1) return -Poly::var(h_var(n));
        return Poly();
    }
};

/// All Christoffel symbols Gamma^k_ij at the base point, as polynomials in H.
struct ChristoffelTable {
    int n;
    std::vector<Poly> gamma;  // [k][i][j]
    const Poly& at(int k, int i, int j) const { return gamma[(k * n + i) * n + j]; }
};

/// Connection matrix omega_{s,t}(e~_i) at the base point.
struct ConnectionTable {
    int n;
    std::vector<Poly> omega;  // [s][t][i]
    const Poly& at(int s, int t, int i) const { return omega[(s * n + t) * n + i]; }
};

ChristoffelTable christoffel(const MetricJet& jet);
ConnectionTable connection_matrix(const MetricJet& jet);

/// Sub-leading symbol p_0 at the base point:
///   Dirac:      -1/4 sum omega_{s,t}(e~_i) c_i c_s c_t
///   signature:  +1/4 sum omega_{s,t}(e~_i) c_i (cbar_s cbar_t - c_s c_t)
AlgebraElement subleading_symbol(const Backend& backend, const ConnectionTable& omega);

struct BoundaryAction {
    Poly K;       // extrinsic curvature trace at x_0
    Poly I_gr_b;  // gravitational boundary action per unit boundary volume (2K)
};

/// K = sum_i K_ii with K_ij = -Gamma^n_ij; requires n = 4.
BoundaryAction boundary_action(const MetricJet& jet);

}  // namespace ncres
