#pragma once

#include "ncres/cases.hpp"

#include <complex>
#include <functional>
#include <random>
#include <string>

namespace ncres {

/// Floating-point cross-check of exact results.  Everything here is
/// independent of the residue/principal-part path: integrals are done by
/// adaptive quadrature, sphere integrals by product rules.
namespace oracle {

struct Record {
    std::string id;
    std::complex<double> exact{0.0, 0.0};
    std::complex<double> numeric{0.0, 0.0};
    double rel_err = 0.0;
    bool converged = true;
    bool pass = false;
};

constexpr double kTolerance = 1e-6;

/// Evaluate a polynomial / rational function at a numeric point
/// (xi' on the sphere, real xi_n, H -> h).
std::complex<double> eval_poly(const Poly& p, const std::vector<double>& xi_prime, double xin,
                               double h);
std::complex<double> eval_ratfunc(const RatFunc& f, const std::vector<double>& xi_prime,
                                  double xin, double h);

/// Adaptive quadrature of f over the whole real xi_n line (tan substitution).
std::complex<double> quad_line(const std::function<std::complex<double>(double)>& f,
                               bool* converged = nullptr);

/// Product-rule quadrature over the unit sphere S^{n-2} (trapezoid on S^1,
/// Gauss-Legendre x trapezoid on S^2); exact for the moderate-degree
/// polynomial integrands that occur here.
std::complex<double> quad_sphere(
    const std::function<std::complex<double>(const std::vector<double>&)>& f, int n);

/// Monte Carlo sphere integral, for the independent moment check.
double monte_carlo_moment(const std::vector<int>& alpha, int n, std::size_t samples,
                          std::mt19937& rng);

/// Compare the exact line integral of f (2*pi*i * Res) against quadrature at
/// a sampled tangential point with H = h.
Record check_line_integral(const std::string& id, const RatFunc& f,
                           const std::vector<double>& xi_prime, double h);

/// Compare one full case contribution (sphere x line quadrature of the exact
/// trace integrand) against the exact ScalarSum with H = h.
Record check_case(const CaseIndex& idx, const SymbolSet& symbols, double h);

/// Random rational function with small Gaussian-integer data, poles only at
/// +-i, total xi_n-degree <= -2.
RatFunc random_admissible(std::mt19937& rng, int n);

}  // namespace oracle
}  // namespace ncres
