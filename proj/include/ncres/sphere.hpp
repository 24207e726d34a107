#pragma once

#include "ncres/poly.hpp"
#include "ncres/scalar.hpp"

namespace ncres {

/// Exact integral of a monomial xi^alpha over the unit sphere S^{n-2} in the
/// tangential covariable space, as a rational multiple of the total area
/// Omega.  Odd moments vanish; for even alpha the value is
///     prod_i (alpha_i - 1)!!  /  prod_{j=0}^{m-1} (d + 2j),
/// with d = n-1 and m = |alpha|/2.
Rat sphere_moment(const std::vector<int>& alpha, int n);

/// Integrate a polynomial in xi_1..xi_{n-1} and H over the unit sphere
/// S^{n-2}.  The normal covariable must already be integrated out.
/// Each surviving monomial contributes coeff * moment * Omega * H^h.
ScalarSum sphere_integrate(const Poly& p, int n);

}  // namespace ncres
