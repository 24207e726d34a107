#pragma once

#include "ncres/rational.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace ncres {

/// One exact monomial  coeff * pi^p * Omega^o * H^h  with pi, Omega, H kept
/// as opaque formal symbols.  Omega stands for the area of the unit sphere
/// S^{n-2} in the tangential covariable space.
struct ScalarTerm {
    GRat coeff;
    int pi_pow = 0;
    int omega_pow = 0;
    int h_pow = 0;
};

/// Formal sum of ScalarTerms in normal form (like monomials combined, zero
/// coefficients dropped).  The currency of all final results.
class ScalarSum {
public:
    ScalarSum() = default;
    ScalarSum(ScalarTerm t) { add(t); }
    static ScalarSum of(GRat c, int pi_pow = 0, int omega_pow = 0, int h_pow = 0) {
        return ScalarSum(ScalarTerm{std::move(c), pi_pow, omega_pow, h_pow});
    }

    void add(const ScalarTerm& t) {
        if (t.coeff.is_zero()) return;
        auto key = std::make_tuple(t.pi_pow, t.omega_pow, t.h_pow);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_[key] = t.coeff;
        } else {
            it->second += t.coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }

    std::vector<ScalarTerm> terms() const {
        std::vector<ScalarTerm> out;
        for (const auto& [k, c] : terms_)
            out.push_back({c, std::get<0>(k), std::get<1>(k), std::get<2>(k)});
        return out;
    }

    friend ScalarSum operator+(const ScalarSum& a, const ScalarSum& b) {
        ScalarSum r = a;
        for (const auto& t : b.terms()) r.add(t);
        return r;
    }
    friend ScalarSum operator-(const ScalarSum& a, const ScalarSum& b) {
        ScalarSum r = a;
        for (auto t : b.terms()) { t.coeff = -t.coeff; r.add(t); }
        return r;
    }
    /// Multiply every term by c * pi^p * Omega^o * H^h.
    ScalarSum scaled(const GRat& c, int pi_pow = 0, int omega_pow = 0, int h_pow = 0) const {
        ScalarSum r;
        for (auto t : terms()) {
            t.coeff *= c;
            t.pi_pow += pi_pow;
            t.omega_pow += omega_pow;
            t.h_pow += h_pow;
            r.add(t);
        }
        return r;
    }
    friend ScalarSum operator*(const ScalarSum& a, const ScalarSum& b) {
        ScalarSum r;
        for (const auto& ta : a.terms())
            for (auto tb : b.terms()) {
                tb.coeff *= ta.coeff;
                tb.pi_pow += ta.pi_pow;
                tb.omega_pow += ta.omega_pow;
                tb.h_pow += ta.h_pow;
                r.add(tb);
            }
        return r;
    }
    ScalarSum& operator+=(const ScalarSum& o) { *this = *this + o; return *this; }

    friend bool operator==(const ScalarSum& a, const ScalarSum& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ScalarSum& a, const ScalarSum& b) { return !(a == b); }

    ScalarSum substitute_h_zero() const {
        ScalarSum r;
        for (const auto& t : terms())
            if (t.h_pow == 0) r.add(t);
        return r;
    }

    /// Numeric value with pi -> M_PI, Omega -> given area, H -> given value.
    double eval(double omega, double h) const;

    /// Substitute the numeric sphere area Omega_{n-1} = area(S^{n-2}) as a
    /// power of pi: Omega_2 = 2 pi, Omega_3 = 4 pi.  Supported for n = 3, 4.
    ScalarSum substitute_omega(int n) const;

    std::string str() const;

private:
    std::map<std::tuple<int, int, int>, GRat> terms_;
};

}  // namespace ncres
