#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncres/checks.hpp"
#include "ncres/geometry.hpp"

using namespace ncres;

TEST_CASE("christoffel symbols of the collar metric at the base point") {
    for (int n : {3, 4}) {
        MetricJet jet{n};
        ChristoffelTable g = christoffel(jet);
        Poly half_h = Poly::var(h_var(n)) * GRat::of(1, 2);
        for (int i = 0; i < n - 1; ++i) {
            CHECK(g.at(n - 1, i, i) == half_h);
            CHECK(g.at(i, n - 1, i) == -half_h);
            CHECK(g.at(i, i, n - 1) == -half_h);
        }
        CHECK(g.at(n - 1, n - 1, n - 1).is_zero());
        CHECK(g.at(0, 1, 1).is_zero());
    }
}

TEST_CASE("connection one-form is antisymmetric with the expected entries") {
    for (int n : {3, 4}) {
        ConnectionTable w = connection_matrix(MetricJet{n});
        Poly half_h = Poly::var(h_var(n)) * GRat::of(1, 2);
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                for (int i = 0; i < n; ++i)
                    CHECK(w.at(s, t, i) == -w.at(t, s, i));
        for (int i = 0; i < n - 1; ++i) CHECK(w.at(n - 1, i, i) == half_h);
    }
}

TEST_CASE("subleading symbol closed forms") {
    for (auto [op, n] : {std::pair{OperatorKind::Dirac, 4}, {OperatorKind::Dirac, 3},
                         {OperatorKind::Signature, 4}}) {
        for (const auto& r : geometry_checks(op, n)) {
            INFO(r.id, " computed ", r.computed, " expected ", r.expected);
            CHECK(r.status == CheckStatus::Match);
        }
    }
}

TEST_CASE("extrinsic curvature and the gravitational boundary density") {
    BoundaryAction act = boundary_action(MetricJet{4});
    Poly H = Poly::var(h_var(4));
    CHECK(act.K == H * GRat::of(-3, 2));
    CHECK(act.I_gr_b == H * GRat(-3));
    CHECK_THROWS(boundary_action(MetricJet{3}));
}

TEST_CASE("product metric has trivial connection data") {
    ChristoffelTable g = christoffel(MetricJet{4});
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(g.at(k, i, j).substitute(h_var(4), GRat(0)).is_zero());
}
