#include "ncres/symbols.hpp"

namespace ncres {

JetElem principal_symbol(const Backend& backend) {
    int n = backend.n;
    GRat I = GRat::i();
    AlgebraElement cxp = c_xi_prime(backend);
    AlgebraElement full = cxp + backend.c_dxn() * RatFunc::from_poly(Poly::var(xin_var(n)), n);
    // d/dx_n c(xi')(x_0) = (H/2) c(xi'); c(dx_n) is x_n-independent.
    AlgebraElement dxn = cxp * RatFunc::from_poly(Poly::var(h_var(n)) * GRat::of(1, 2), n);
    return {full * I, dxn * I, true};
}

SymbolSet invert_symbol(const Backend& backend, const JetElem& p1, const AlgebraElement& p0) {
    int n = backend.n;
    int dim = backend.dim;
    GRat I = GRat::i();

    // p_1^2 is scalar: |xi|^2 Id with normal derivative H |xi'|^2 Id.  On the
    // unit tangential sphere this becomes (1 + xi_n^2, H).
    JetElem sq = (p1 * p1).reduce_sphere();
    {
        Poly expect = Poly(1) + Poly::var(xin_var(n), 2);
        AlgebraElement ev = AlgebraElement::scalar(RatFunc::from_poly(expect, n), dim);
        AlgebraElement ed = AlgebraElement::scalar(RatFunc::from_poly(Poly::var(h_var(n)), n), dim);
        if (sq.val != ev || sq.dxn != ed)
            throw SymbolError("invert: p_1^2 is not |xi|^2 Id on the sphere");
    }
    // (1/s, -s'/s^2) for the scalar jet s = 1 + xi_n^2.
    RatFunc inv_s(Poly(1), 1, 1, n);
    RatFunc dinv_s = -RatFunc(Poly::var(h_var(n)), 2, 2, n);
    JetElem inv_sq{AlgebraElement::scalar(inv_s, dim), AlgebraElement::scalar(dinv_s, dim), true};

    JetElem q1 = (p1.reduce_sphere() * inv_sq);

    // q_{-2} at x_0: only the j = n term of the derivative sum survives.
    JetElem dp1 = p1.derive_xin().reduce_sphere();
    AlgebraElement dxj_q1 = q1.derive_xn() * (-I);  // D_{x_n} q_{-1}
    AlgebraElement inner = p0.reduce_sphere() * q1.val + dp1.val * dxj_q1;
    AlgebraElement q2v = -(q1.val * inner);
    JetElem q2{q2v.reduce_sphere(), AlgebraElement(dim, n), false};

    return SymbolSet{backend, p1, p0, q1, q2};
}

SymbolSet build_symbols(const Backend& backend) {
    MetricJet jet{backend.n};
    AlgebraElement p0 = subleading_symbol(backend, connection_matrix(jet));
    return invert_symbol(backend, principal_symbol(backend), p0);
}

}  // namespace ncres
