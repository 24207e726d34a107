#include "ncres/ratfunc.hpp"

#include <sstream>

namespace ncres {

namespace {

// p = (xin - root) * quot + rem, with rem free of xin.  Returns true and
// fills quot when the division is exact.
bool divide_linear(const Poly& p, int xin, const GRat& root, Poly& quot) {
    int d = p.degree_in(xin);
    if (p.is_zero()) { quot = Poly(); return true; }
    std::vector<Poly> c(d + 1);
    for (int k = 0; k <= d; ++k) c[k] = p.coefficient_of(xin, k);
    std::vector<Poly> q(std::max(d, 1));
    Poly carry = c[d];
    for (int k = d - 1; k >= 0; --k) {
        q[k] = carry;
        carry = c[k] + carry * root;
    }
    if (!carry.is_zero()) return false;
    Poly out;
    for (int k = 0; k < d; ++k) out += q[k] * Poly::var(xin, k);
    quot = out;
    return true;
}

long factorial(int k) {
    long r = 1;
    for (int j = 2; j <= k; ++j) r *= j;
    return r;
}

}  // namespace

void RatFunc::normalize() {
    if (num_.is_zero()) { a_ = 0; b_ = 0; return; }
    int xin = xin_var(n_);
    Poly q;
    while (a_ > 0 && divide_linear(num_, xin, GRat::i(), q)) { num_ = q; --a_; }
    while (b_ > 0 && divide_linear(num_, xin, -GRat::i(), q)) { num_ = q; --b_; }
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.n_ != g.n_) throw SymbolError("ratfunc: mixed dimensions");
    int xin = xin_var(f.n_);
    int a = std::max(f.a_, g.a_), b = std::max(f.b_, g.b_);
    Poly mi = Poly::var(xin) - Poly(GRat::i());   // xi_n - i
    Poly pi = Poly::var(xin) + Poly(GRat::i());   // xi_n + i
    auto lift = [&](const RatFunc& h) {
        Poly p = h.num_;
        for (int k = h.a_; k < a; ++k) p *= mi;
        for (int k = h.b_; k < b; ++k) p *= pi;
        return p;
    };
    return RatFunc(lift(f) + lift(g), a, b, f.n_);
}

RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
    if (f.is_zero() || g.is_zero()) return RatFunc(Poly(), 0, 0, f.n_ ? f.n_ : g.n_);
    if (f.n_ != g.n_) throw SymbolError("ratfunc: mixed dimensions");
    return RatFunc(f.num_ * g.num_, f.a_ + g.a_, f.b_ + g.b_, f.n_);
}

RatFunc operator*(const RatFunc& f, const GRat& c) {
    if (c.is_zero()) return RatFunc(Poly(), 0, 0, f.n_);
    RatFunc r = f;
    r.num_ = r.num_ * c;
    return r;
}

RatFunc RatFunc::derive_xin() const {
    int xin = xin_var(n_);
    if (is_polynomial()) return RatFunc(num_.derivative(xin), 0, 0, n_);
    Poly mi = Poly::var(xin) - Poly(GRat::i());
    Poly pi = Poly::var(xin) + Poly(GRat::i());
    // (N / (mi^a pi^b))' = [N' mi pi - N (a pi + b mi)] / (mi^{a+1} pi^{b+1})
    Poly top = num_.derivative(xin) * mi * pi
             - num_ * (pi * GRat(long(a_)) + mi * GRat(long(b_)));
    return RatFunc(top, a_ + 1, b_ + 1, n_);
}

RatFunc RatFunc::derive_var(int v) const {
    if (v == xin_var(n_)) return derive_xin();
    return RatFunc(num_.derivative(v), a_, b_, n_);
}

RatFunc RatFunc::principal_part_at_i() const {
    if (is_zero() || a_ == 0) return RatFunc(Poly(), 0, 0, n_);
    if (xin_degree() > -1)
        throw SymbolError("principal part: xi_n-degree >= 0, symbol-order bookkeeping bug");
    int xin = xin_var(n_);
    // g(xi_n) = num / (xi_n + i)^b is regular at +i; the Laurent coefficient
    // of (xi_n - i)^{-k} is g^{(a-k)}(i)/(a-k)!.
    RatFunc g(num_, 0, b_, n_);
    Poly mi = Poly::var(xin) - Poly(GRat::i());
    std::vector<Poly> coeff(a_ + 1);  // coeff[k] of (xi_n - i)^{-k}
    for (int m = 0; m < a_; ++m) {
        GRat den = (GRat::i() + GRat::i()).pow(g.pole_at_minus_i());
        coeff[a_ - m] = g.num().substitute(xin, GRat::i()) * (GRat(1) / den)
                      * (GRat(1) / GRat(factorial(m)));
        if (m + 1 < a_) g = g.derive_xin();
    }
    std::vector<Poly> pows(a_ + 1);
    pows[0] = Poly(1);
    for (int k = 1; k <= a_; ++k) pows[k] = pows[k - 1] * mi;
    Poly num_out;
    for (int k = 1; k <= a_; ++k) num_out += coeff[k] * pows[a_ - k];
    return RatFunc(num_out, a_, 0, n_);
}

Poly RatFunc::residue_at_i() const {
    if (is_zero() || a_ == 0) return Poly();
    int xin = xin_var(n_);
    RatFunc g(num_, 0, b_, n_);
    for (int m = 1; m < a_; ++m) g = g.derive_xin();
    GRat den = (GRat::i() + GRat::i()).pow(g.pole_at_minus_i());
    return g.num().substitute(xin, GRat::i()) * (GRat(1) / den)
         * (GRat(1) / GRat(factorial(a_ - 1)));
}

Poly RatFunc::line_integral_pi_coefficient() const {
    if (is_zero()) return Poly();
    if (xin_degree() > -2) throw SymbolError("line integral: divergent (xi_n-degree >= -1)");
    // 2 pi i * Res_{+i}; the pi factor is carried by the caller.
    return residue_at_i() * (GRat::i() + GRat::i());
}

RatFunc ratfunc_normalize(const Poly& num, const Poly& den, int n) {
    if (den.is_zero()) throw SymbolError("ratfunc: zero denominator");
    int xin = xin_var(n);
    Poly d = den, q;
    int a = 0, b = 0;
    while (divide_linear(d, xin, GRat::i(), q)) { d = q; ++a; }
    while (divide_linear(d, xin, -GRat::i(), q)) { d = q; ++b; }
    if (!d.is_constant())
        throw SymbolError("ratfunc: denominator has a pole away from xi_n = +-i");
    GRat c = d.constant_value();
    return RatFunc(num * (GRat(1) / c), a, b, n);
}

std::string RatFunc::str() const {
    std::ostringstream os;
    os << "(" << num_.str(n_) << ")";
    if (a_ || b_) {
        os << " / [";
        if (a_) os << "(xin-i)^" << a_;
        if (b_) os << (a_ ? " " : "") << "(xin+i)^" << b_;
        os << "]";
    }
    return os.str();
}

}  // namespace ncres
