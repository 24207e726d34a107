#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncres/ratfunc.hpp"
#include "ncres/scalar.hpp"
#include "ncres/sphere.hpp"

using namespace ncres;

namespace {
constexpr int N = 4;
Poly xn() { return Poly::var(xin_var(N)); }
}  // namespace

TEST_CASE("gaussian rational field ops") {
    GRat a = GRat::of(3, 4) + GRat::i() * GRat::of(1, 2);
    GRat b = GRat::of(-2, 7) + GRat::i() * GRat(5);
    CHECK(a * b / b == a);
    CHECK(a + (-a) == GRat(0));
    CHECK(GRat::i() * GRat::i() == GRat(-1));
    CHECK(a.conj() * a == GRat(Rat(3, 4) * Rat(3, 4) + Rat(1, 2) * Rat(1, 2)));
    CHECK(GRat::of(1, 3).pow(3) == GRat::of(1, 27));
}

TEST_CASE("polynomial ring ops") {
    Poly x0 = Poly::var(0), x1 = Poly::var(1);
    Poly p = (x0 + x1) * (x0 - x1);
    CHECK(p == x0 * x0 - x1 * x1);
    CHECK(p.derivative(0) == x0 * GRat(2));
    CHECK(p.substitute(0, GRat(2)) == Poly(GRat(4)) - x1 * x1);
    CHECK((p - p).is_zero());
    CHECK(p.degree_in(0) == 2);
}

TEST_CASE("sphere reduction is canonical and idempotent") {
    // on S^2 (n = 4): xi_2^2 rewrites to 1 - xi_0^2 - xi_1^2
    Poly x2sq = Poly::var(2, 2);
    Poly red = x2sq.reduce_sphere(N);
    CHECK(red == Poly(1) - Poly::var(0, 2) - Poly::var(1, 2));
    CHECK(red.reduce_sphere(N) == red);
    // |xi'|^2 itself reduces to 1
    Poly len = Poly::var(0, 2) + Poly::var(1, 2) + x2sq;
    CHECK(len.reduce_sphere(N) == Poly(1));
}

TEST_CASE("rational function normalization cancels shared linear factors") {
    Poly num = (xn() - Poly(GRat::i())) * (xn() * xn() + Poly(GRat(3)));
    RatFunc f(num, 3, 2, N);
    RatFunc g(xn() * xn() + Poly(GRat(3)), 2, 2, N);
    CHECK(f == g);
    CHECK(f.xin_degree() == -2);
    CHECK_THROWS_AS(RatFunc(Poly(1), -1, 0, N), SymbolError);
}

TEST_CASE("denominator admissibility is enforced") {
    Poly den = (xn() - Poly(GRat::i())) * (xn() + Poly(GRat::i()));
    CHECK(ratfunc_normalize(Poly(1), den, N) == RatFunc(Poly(1), 1, 1, N));
    CHECK_THROWS_AS(ratfunc_normalize(Poly(1), xn() - Poly(GRat(2)), N), SymbolError);
    CHECK_THROWS_AS(ratfunc_normalize(Poly(1), xn() * xn() - Poly(1), N), SymbolError);
}

TEST_CASE("field axioms on random-ish rational functions") {
    RatFunc f(xn() + Poly(GRat(2)), 2, 1, N);
    RatFunc g(xn() * xn() - Poly(GRat::i()), 1, 2, N);
    RatFunc h(Poly(GRat::of(5, 3)), 0, 1, N);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f + (g + h) == (f + g) + h);
    CHECK((f - f).is_zero());
}

TEST_CASE("derivative satisfies the Leibniz rule through poles") {
    RatFunc f(xn() + Poly(GRat(2)), 2, 0, N);
    RatFunc g(Poly(1), 1, 1, N);
    CHECK((f * g).derive_xin() == f.derive_xin() * g + f * g.derive_xin());
}

TEST_CASE("residue and line integral of the arctangent kernel") {
    // 1/(1+xin^2): residue at +i is 1/(2i), integral pi
    RatFunc f(Poly(1), 1, 1, N);
    CHECK(f.residue_at_i() == Poly(GRat(1) / (GRat(2) * GRat::i())));
    CHECK(f.line_integral_pi_coefficient() == Poly(1));
    // xin/(1+xin^2)^2 integrates to zero by parity
    RatFunc g(xn(), 2, 2, N);
    CHECK(g.line_integral_pi_coefficient().is_zero());
    // degree -1 is not absolutely convergent
    RatFunc h(xn(), 1, 1, N);
    CHECK_THROWS_AS(h.line_integral_pi_coefficient(), SymbolError);
}

TEST_CASE("principal part reproduces the full function for pure poles") {
    RatFunc f(xn() + Poly(GRat(3) * GRat::i()), 2, 0, N);
    CHECK(f.principal_part_at_i() == f);
    RatFunc mixed(Poly(1), 1, 1, N);
    // 1/(1+xin^2) = (1/2i)/(xin-i) - (1/2i)/(xin+i); only the first survives
    RatFunc pp = mixed.principal_part_at_i();
    CHECK(pp == RatFunc(Poly(GRat(1) / (GRat(2) * GRat::i())), 1, 0, N));
    CHECK(pp.principal_part_at_i() == pp);
    CHECK((mixed - pp).principal_part_at_i().is_zero());
}

TEST_CASE("sphere moments match the double-factorial formula") {
    // S^2: mean of xi_0^2 is 1/3, of xi_0^4 is 1/5, of xi_0^2 xi_1^2 is 1/15
    CHECK(sphere_moment({2, 0, 0}, 4) == Rat(1, 3));
    CHECK(sphere_moment({4, 0, 0}, 4) == Rat(1, 5));
    CHECK(sphere_moment({2, 2, 0}, 4) == Rat(1, 15));
    CHECK(sphere_moment({1, 0, 0}, 4) == Rat(0));
    // S^1: mean of xi_0^2 is 1/2
    CHECK(sphere_moment({2, 0}, 3) == Rat(1, 2));
    CHECK(sphere_moment({2, 2}, 3) == Rat(1, 8));
}

TEST_CASE("sphere integration refuses the normal covariable") {
    Poly bad = Poly::var(xin_var(N));
    CHECK_THROWS_AS(sphere_integrate(bad, N), std::invalid_argument);
}

TEST_CASE("formal scalar sums normalize and evaluate") {
    ScalarSum s = ScalarSum::of(GRat::of(1, 2), 1, 1, 0) + ScalarSum::of(GRat::of(-1, 2), 1, 1, 0);
    CHECK(s.is_zero());
    ScalarSum t = ScalarSum::of(GRat::of(3, 8), 1, 1, 1);
    CHECK(t.scaled(GRat(4)) == ScalarSum::of(GRat::of(3, 2), 1, 1, 1));
    CHECK(t.substitute_h_zero().is_zero());
    CHECK(t.eval(4.0 * 3.14159, 2.0) == doctest::Approx(0.375 * 3.141592653589793 * 4 * 3.14159 * 2));
    // Omega_3 = 4 pi
    CHECK(t.substitute_omega(4) == ScalarSum::of(GRat::of(3, 2), 2, 0, 1));
}
