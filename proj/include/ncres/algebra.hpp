#pragma once

#include "ncres/ratfunc.hpp"

#include <span>
#include <vector>

namespace ncres {

/// Square matrix over RatFunc: an endomorphism of the spinor space or of the
/// full exterior algebra.
class AlgebraElement {
public:
    AlgebraElement() : dim_(0), n_(0) {}
    AlgebraElement(int dim, int n)
        : dim_(dim), n_(n), e_(dim * dim, RatFunc(Poly(), 0, 0, n)) {}

    static AlgebraElement identity(int dim, int n);
    static AlgebraElement scalar(const RatFunc& s, int dim);

    int dim() const { return dim_; }
    int space_dim() const { return n_; }
    RatFunc& at(int r, int c) { return e_[r * dim_ + c]; }
    const RatFunc& at(int r, int c) const { return e_[r * dim_ + c]; }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const RatFunc& s);
    friend AlgebraElement operator*(const AlgebraElement& a, const GRat& s);
    AlgebraElement& operator+=(const AlgebraElement& o) { *this = *this + o; return *this; }
    AlgebraElement& operator-=(const AlgebraElement& o) { *this = *this - o; return *this; }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    bool is_zero() const;

    RatFunc trace() const;

    AlgebraElement map(const auto& f) const {
        AlgebraElement r(dim_, n_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = f(e_[k]);
        return r;
    }
    AlgebraElement derive_xin() const { return map([](const RatFunc& f) { return f.derive_xin(); }); }
    AlgebraElement derive_var(int v) const {
        return map([v](const RatFunc& f) { return f.derive_var(v); });
    }
    AlgebraElement reduce_sphere() const {
        return map([](const RatFunc& f) { return f.reduce_sphere(); });
    }
    AlgebraElement substitute_h_zero() const {
        return map([](const RatFunc& f) { return f.substitute_h_zero(); });
    }

private:
    int dim_, n_;
    std::vector<RatFunc> e_;
};

/// Entry-wise half-plane projection: sum of principal parts at xi_n = +i.
AlgebraElement pi_plus_symbol(const AlgebraElement& e);

enum class BackendKind { Spinor, Exterior };

/// Exact matrix realization of the Clifford action(s).  Spinor backends carry
/// the generators c(e_1)..c(e_n); the exterior backend additionally carries
/// cbar(e_1)..cbar(e_n) built from exterior/interior multiplication.
struct Backend {
    BackendKind kind;
    int n;
    int dim;
    std::vector<AlgebraElement> c;
    std::vector<AlgebraElement> cbar;  // empty for spinor backends

    const AlgebraElement& c_dxn() const { return c[n - 1]; }
};

/// Supported: (spinor,3), (spinor,4), (exterior,4).  All Clifford relations
/// are verified at construction.
Backend make_backend(BackendKind kind, int n);

/// Verify gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij (and the exterior
/// cbar/mixed relations when present); throws on violation.
void verify_relations(const Backend& b);

/// Sum_i coeffs_i * c(e_i); coeffs are polynomials (typically xi_i or
/// constants).
AlgebraElement clifford_of_covector(const Backend& b, std::span<const Poly> coeffs);
AlgebraElement cbar_of_covector(const Backend& b, std::span<const Poly> coeffs);

/// c(xi') = sum_{i<n} xi_i c(e_i).
AlgebraElement c_xi_prime(const Backend& b);

/// Trace of [eps(e_i)iota(e_i)-iota(e_i)eps(e_i)][eps(e_n)iota(e_n)-iota(e_n)eps(e_n)]
/// on degree-m forms of the n=4 exterior backend (i != n).
long graded_mode_trace(int m);

}  // namespace ncres
