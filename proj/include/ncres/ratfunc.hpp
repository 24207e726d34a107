#pragma once

#include "ncres/poly.hpp"

#include <stdexcept>

namespace ncres {

/// Raised when a denominator is not a product of powers of (xi_n -+ i), or
/// when a degree/jet precondition signals a bookkeeping bug upstream.
struct SymbolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rational function of xi_n whose only poles sit at xi_n = +-i:
///     num / ((xi_n - i)^a (xi_n + i)^b)
/// with num a polynomial in the tangential covariables, xi_n, and H.
/// Canonical form: num divisible by neither linear factor unless the
/// corresponding multiplicity is zero.
class RatFunc {
public:
    RatFunc() : n_(0), a_(0), b_(0) {}
    RatFunc(Poly num, int a, int b, int n) : num_(std::move(num)), a_(a), b_(b), n_(n) {
        if (a < 0 || b < 0) throw SymbolError("ratfunc: negative pole multiplicity");
        normalize();
    }
    static RatFunc from_poly(Poly p, int n) { return RatFunc(std::move(p), 0, 0, n); }
    static RatFunc constant(GRat c, int n) { return RatFunc(Poly(std::move(c)), 0, 0, n); }

    const Poly& num() const { return num_; }
    int pole_at_i() const { return a_; }
    int pole_at_minus_i() const { return b_; }
    int dim() const { return n_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return a_ == 0 && b_ == 0; }

    /// Total degree in xi_n counting the denominator: deg(num) - a - b.
    int xin_degree() const { return num_.degree_in(xin_var(n_)) - a_ - b_; }

    friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator-(const RatFunc& f) { RatFunc r = f; r.num_ = -r.num_; return r; }
    friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator*(const RatFunc& f, const GRat& c);
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    friend bool operator==(const RatFunc& f, const RatFunc& g) {
        return f.a_ == g.a_ && f.b_ == g.b_ && f.num_ == g.num_;
    }
    friend bool operator!=(const RatFunc& f, const RatFunc& g) { return !(f == g); }

    /// d/d xi_n, by the quotient rule; result canonical.
    RatFunc derive_xin() const;
    /// d/d xi_i for a tangential variable (the denominator carries no xi_i).
    RatFunc derive_var(int v) const;

    /// Sum of the Laurent terms c_k/(xi_n - i)^k, k = 1..a.  Requires total
    /// xi_n-degree <= -1 so that no polynomial part exists.
    RatFunc principal_part_at_i() const;

    /// Laurent coefficient of (xi_n - i)^{-1}; a polynomial in the remaining
    /// variables.
    Poly residue_at_i() const;

    /// integral over the real xi_n line, closed in the upper half plane:
    /// 2*pi*i * residue_at_i.  Returns P such that the integral equals pi*P.
    /// Requires total xi_n-degree <= -2 (absolute convergence).
    Poly line_integral_pi_coefficient() const;

    /// Canonical representative modulo |xi'|^2 = 1 (numerator reduction).
    RatFunc reduce_sphere() const { return RatFunc(num_.reduce_sphere(n_), a_, b_, n_); }
    RatFunc even_tangential_part() const {
        return RatFunc(num_.even_tangential_part(n_), a_, b_, n_);
    }
    RatFunc substitute_h_zero() const {
        return RatFunc(num_.substitute(h_var(n_), GRat(0)), a_, b_, n_);
    }

    std::string str() const;

private:
    void normalize();

    Poly num_;
    int a_, b_;
    int n_;
};

/// Build num/den, rejecting any denominator that is not a product of powers
/// of (xi_n - i) and (xi_n + i) up to a constant factor.
RatFunc ratfunc_normalize(const Poly& num, const Poly& den, int n);

}  // namespace ncres
