#include "ncres/geometry.hpp"

#include <stdexcept>

namespace ncres {

namespace {

// Coordinate derivative of g_ij in direction l: only l = n-1 survives.
Poly d_g(const MetricJet& jet, int l, int i, int j) {
    if (l == jet.n - 1) return jet.dxn_g(i, j);
    return Poly();
}

// -d/dx_i of the frame matrix entry h_ts (Lemma A.3 data): the frame
// e~_t = sqrt(h) e_t scales with the collar, so the only nonzero derivative
// is d/dx_n h_tt = -H/2 for t < n.
Poly neg_d_frame(const MetricJet& jet, int i, int t, int s) {
    int n = jet.n;
    if (i == n - 1 && t == s && t < n - 1)
        return Poly::var(h_var(n)) * GRat::of(1, 2);
    return Poly();
}

}  // namespace

ChristoffelTable christoffel(const MetricJet& jet) {
    int n = jet.n;
    ChristoffelTable t{n, std::vector<Poly>(n * n * n)};
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Poly acc;
                for (int l = 0; l < n; ++l) {
                    Poly inv = jet.g_inv(k, l);
                    if (inv.is_zero()) continue;
                    acc += inv * (d_g(jet, j, l, i) + d_g(jet, i, l, j) - d_g(jet, l, i, j));
                }
                t.gamma[(k * n + i) * n + j] = acc * GRat::of(1, 2);
            }
    return t;
}

ConnectionTable connection_matrix(const MetricJet& jet) {
    int n = jet.n;
    ChristoffelTable gam = christoffel(jet);
    ConnectionTable w{n, std::vector<Poly>(n * n * n)};
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (int i = 0; i < n; ++i)
                w.omega[(s * n + t) * n + i] = neg_d_frame(jet, i, t, s) + gam.at(s, i, t);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (int i = 0; i < n; ++i)
                if (w.at(s, t, i) != -w.at(t, s, i))
                    throw std::logic_error("connection matrix not antisymmetric");
    return w;
}

AlgebraElement subleading_symbol(const Backend& backend, const ConnectionTable& omega) {
    int n = backend.n;
    if (omega.n != n) throw std::invalid_argument("subleading symbol: dimension mismatch");
    AlgebraElement acc(backend.dim, n);
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                const Poly& w = omega.at(s, t, i);
                if (w.is_zero()) continue;
                AlgebraElement word =
                    (backend.kind == BackendKind::Spinor)
                        ? backend.c[i] * backend.c[s] * backend.c[t]
                        : backend.c[i] * (backend.cbar[s] * backend.cbar[t] -
                                          backend.c[s] * backend.c[t]);
                acc += word * RatFunc::from_poly(w, n);
            }
    GRat quarter = GRat::of(1, 4);
    return acc * (backend.kind == BackendKind::Spinor ? -quarter : quarter);
}

BoundaryAction boundary_action(const MetricJet& jet) {
    if (jet.n != 4) throw std::invalid_argument("boundary action: n = 4 only");
    ChristoffelTable gam = christoffel(jet);
    Poly K;
    for (int i = 0; i < jet.n - 1; ++i) K -= gam.at(jet.n - 1, i, i);
    return BoundaryAction{K, K * GRat(2)};
}

}  // namespace ncres
