#pragma once

#include "ncres/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace ncres {

// Variable layout for a computation in dimension n:
//   0 .. n-2   tangential covariables xi_1 .. xi_{n-1}
//   n-1        normal covariable xi_n
//   n          H = h'(0)
constexpr int kMaxVars = 8;

inline int xin_var(int n) { return n - 1; }
inline int h_var(int n) { return n; }

using Mono = std::array<std::uint8_t, kMaxVars>;

/// Multivariate polynomial over Gaussian rationals.  Zero coefficients are
/// never stored; the generator set is fixed by the ambient dimension n.
class Poly {
public:
    Poly() = default;
    explicit Poly(GRat c) { if (!c.is_zero()) terms_[Mono{}] = std::move(c); }
    Poly(long c) : Poly(GRat(c)) {}

    static Poly var(int v, int exp = 1) {
        Poly p;
        if (v < 0 || v >= kMaxVars) throw std::invalid_argument("poly: bad variable index");
        Mono m{};
        m[v] = static_cast<std::uint8_t>(exp);
        p.terms_[m] = GRat(1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
    }
    GRat constant_value() const {
        if (terms_.empty()) return GRat(0);
        if (!is_constant()) throw std::logic_error("poly: not a constant");
        return terms_.begin()->second;
    }

    const std::map<Mono, GRat>& terms() const { return terms_; }

    void add_term(const Mono& m, const GRat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono m;
                for (int v = 0; v < kMaxVars; ++v) {
                    unsigned s = unsigned(ma[v]) + unsigned(mb[v]);
                    if (s > 255) throw std::overflow_error("poly: exponent overflow");
                    m[v] = static_cast<std::uint8_t>(s);
                }
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend Poly operator*(const Poly& a, const GRat& c) {
        Poly r;
        if (c.is_zero()) return r;
        for (const auto& [m, cc] : a.terms_) r.terms_[m] = cc * c;
        return r;
    }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(int v) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            if (m[v] == 0) continue;
            Mono d = m;
            d[v] -= 1;
            r.add_term(d, c * GRat(long(m[v])));
        }
        return r;
    }

    /// Substitute variable v by a Gaussian-rational constant.
    Poly substitute(int v, const GRat& value) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Mono d = m;
            d[v] = 0;
            r.add_term(d, c * value.pow(m[v]));
        }
        return r;
    }

    int degree_in(int v) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, int(m[v]));
        return d;
    }

    int total_degree_in(const std::vector<int>& vars) const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (int v : vars) s += m[v];
            d = std::max(d, s);
        }
        return d;
    }

    bool depends_on(int v) const { return degree_in(v) > 0; }

    /// Coefficient of v^k, as a polynomial in the remaining variables.
    Poly coefficient_of(int v, int k) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            if (int(m[v]) != k) continue;
            Mono d = m;
            d[v] = 0;
            r.add_term(d, c);
        }
        return r;
    }

    /// Reduce modulo the unit-sphere relation xi_1^2+...+xi_{n-1}^2 = 1:
    /// rewrite xi_{n-1}^2 -> 1 - sum_{i<n-1} xi_i^2 until the last tangential
    /// variable appears with degree at most 1.  Canonical remainder.
    Poly reduce_sphere(int n) const {
        int t = n - 2;  // last tangential variable
        if (t < 0) return *this;
        Poly rel(1);    // 1 - sum_{i < t} xi_i^2
        for (int i = 0; i < t; ++i) rel -= Poly::var(i, 2);
        Poly work = *this, out;
        while (!work.terms_.empty()) {
            Poly next;
            for (const auto& [m, c] : work.terms_) {
                if (m[t] >= 2) {
                    Mono d = m;
                    d[t] -= 2;
                    Poly mono;
                    mono.terms_[d] = c;
                    next += mono * rel;
                } else {
                    out.add_term(m, c);
                }
            }
            work = std::move(next);
        }
        return out;
    }

    /// Drop every monomial of odd total degree in the tangential variables.
    Poly even_tangential_part(int n) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (int v = 0; v <= n - 2; ++v) s += m[v];
            if (s % 2 == 0) r.add_term(m, c);
        }
        return r;
    }

    std::string str(int n) const;

private:
    std::map<Mono, GRat> terms_;
};

std::string var_name(int v, int n);

}  // namespace ncres
