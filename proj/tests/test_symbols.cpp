#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncres/checks.hpp"
#include "ncres/symbols.hpp"

using namespace ncres;

namespace {
SymbolSet dirac4() {
    static SymbolSet s = build_symbols(make_backend(BackendKind::Spinor, 4));
    return s;
}
}  // namespace

TEST_CASE("principal symbol squares to |xi|^2 on the unit tangential sphere") {
    SymbolSet s = dirac4();
    AlgebraElement sq = (s.p1.val * s.p1.val).reduce_sphere();
    RatFunc len(Poly(1) + Poly::var(xin_var(4), 2), 0, 0, 4);
    CHECK(sq == AlgebraElement::scalar(len, 4));
}

TEST_CASE("inverse symbol composes back to the identity") {
    for (auto [kind, n] : {std::pair{BackendKind::Spinor, 4}, {BackendKind::Spinor, 3},
                           {BackendKind::Exterior, 4}}) {
        SymbolSet s = build_symbols(make_backend(kind, n));
        AlgebraElement id = AlgebraElement::identity(s.backend.dim, n);
        CHECK((s.p1.reduce_sphere() * s.q1).val.reduce_sphere() == id.reduce_sphere());
        AlgebraElement order_m1 = s.p1.val * s.q2.val + s.p0 * s.q1.val +
                                  s.p1.derive_xin().val * (s.q1.dxn * (-GRat::i()));
        CHECK(order_m1.reduce_sphere().is_zero());
    }
}

TEST_CASE("normal-derivative bookkeeping obeys the Leibniz rule") {
    SymbolSet s = dirac4();
    JetElem prod = s.q1 * s.q1;
    CHECK(prod.dxn == (s.q1.dxn * s.q1.val + s.q1.val * s.q1.dxn));
    // a jet carries one derivative only
    CHECK_THROWS_AS(s.q2.derive_xn(), SymbolError);
}

TEST_CASE("half-plane projection is an idempotent module map") {
    SymbolSet s = dirac4();
    AlgebraElement p = pi_plus_symbol(s.q1.val);
    CHECK(pi_plus_symbol(p) == p);
    CHECK(pi_plus_symbol(s.q1.val + s.q2.val) == pi_plus_symbol(s.q1.val) + pi_plus_symbol(s.q2.val));
    // the complementary part has no pole at +i
    AlgebraElement rest = s.q1.val - p;
    CHECK(pi_plus_symbol(rest).is_zero());
}

TEST_CASE("closed-form identities for the inverse symbol and its projections") {
    for (auto [op, n] : {std::pair{OperatorKind::Dirac, 4}, {OperatorKind::Dirac, 3},
                         {OperatorKind::Signature, 4}}) {
        for (const auto& r : symbol_checks(op, n)) {
            INFO(r.id, " [", r.anchor, "] computed ", r.computed, " expected ", r.expected);
            CHECK(r.status == CheckStatus::Match);
        }
    }
}

TEST_CASE("trace identity records all match") {
    for (auto [op, n] : {std::pair{OperatorKind::Dirac, 4}, {OperatorKind::Dirac, 3},
                         {OperatorKind::Signature, 4}}) {
        for (const auto& r : trace_checks(op, n)) {
            INFO(r.id, " computed ", r.computed, " expected ", r.expected);
            CHECK(r.status == CheckStatus::Match);
        }
    }
}
