// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include "ncres/checks.hpp"
#include "ncres/oracle.hpp"

#include <functional>
#include <iostream>
#include <string>

using namespace ncres;

namespace {

int failures = 0;

void criterion(const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
}

bool suite_matches(const std::vector<VerificationRecord>& recs,
                   const std::vector<std::string>& ids) {
    for (const auto& id : ids) {
        bool found = false;
        for (const auto& r : recs)
            if (r.id == id) {
                found = true;
                if (r.status == CheckStatus::Mismatch) return false;
            }
        if (!found) return false;
    }
    return true;
}

bool no_mismatch(const std::vector<VerificationRecord>& recs) {
    for (const auto& r : recs)
        if (r.status == CheckStatus::Mismatch) return false;
    return true;
}

}  // namespace

int main() {
    auto d4 = run_all_checks(OperatorKind::Dirac, 4);
    auto s4 = run_all_checks(OperatorKind::Signature, 4);
    auto d3 = run_all_checks(OperatorKind::Dirac, 3);

    criterion("1. geometry suite (christoffel, connection, subleading symbol, boundary action)",
              suite_matches(d4, {"christoffel-table", "connection-table", "p0-closed-form",
                                 "extrinsic-curvature", "boundary-action"}) &&
                  suite_matches(s4, {"p0-closed-form"}) && suite_matches(d3, {"p0-closed-form"}));

    criterion("2. trace-identity suite (spinor n=4, exterior n=4, spinor n=3, degree-graded values)",
              suite_matches(d4, {"tr[c(xi')c(dxn)]", "tr[c(dxn)^2]", "tr[c(xi')^2]",
                                 "tr[dxn(c(xi'))c(dxn)]", "tr[dxn(c(xi'))c(xi')]"}) &&
                  suite_matches(s4, {"tr[id]", "tr[c(xi')dxn(c(xi'))]",
                                     "tr[c(xi')p0c(xi')c(dxn)]", "tr[c(dxn)p0~]", "graded-trace-b4m"}) &&
                  suite_matches(d3, {"tr[c(xi')c(dxn)]", "tr[c(dxn)^2]", "tr[c(xi')^2]"}));

    criterion("3. symbol suite (inverse symbol, projections, derivative closed forms)",
              no_mismatch(symbol_checks(OperatorKind::Dirac, 4)) &&
                  no_mismatch(symbol_checks(OperatorKind::Signature, 4)) &&
                  no_mismatch(symbol_checks(OperatorKind::Dirac, 3)));

    {
        PhiReport phi = assemble_phi(OperatorKind::Dirac, 4);
        KkwReport kkw = kkw_total(OperatorKind::Dirac, 4);
        auto v = [](long num, long den) { return ScalarSum::of(GRat::of(num, den), 1, 1, 1); };
        criterion("4. case suite, half-spin operator n=4 (0, -3/8, 3/8, 9/8, -9/8; total 0)",
                  phi.cases.size() == 5 && phi.cases[0].contribution.is_zero() &&
                      phi.cases[1].contribution == v(-3, 8) &&
                      phi.cases[2].contribution == v(3, 8) &&
                      phi.cases[3].contribution == v(9, 8) &&
                      phi.cases[4].contribution == v(-9, 8) && phi.total.is_zero() &&
                      kkw.boundary.is_zero() && kkw.interior == "-Omega_4/3");
    }

    {
        PhiReport sig = assemble_phi(OperatorKind::Signature, 4);
        PhiReport dir = assemble_phi(OperatorKind::Dirac, 4);
        bool ok = sig.cases.size() == dir.cases.size() && sig.total.is_zero();
        for (size_t k = 0; ok && k < sig.cases.size(); ++k)
            ok = sig.cases[k].contribution == dir.cases[k].contribution.scaled(GRat(4));
        ok = ok && kkw_total(OperatorKind::Signature, 4).interior == "8*Omega_4/3";
        criterion("5. case suite, form-valued operator n=4 (each case 4x; total 0)", ok);
    }

    criterion("6. residue functionals (res11 = case a II, res21 = case b, both as "
              "multiples of the boundary action density)",
              suite_matches(d4, {"res11-is-caseaII", "res21-is-caseb", "theorem-res11",
                                 "theorem-res21"}) &&
                  suite_matches(s4, {"res11-is-caseaII", "res21-is-caseb", "theorem-res11",
                                     "theorem-res21"}));

    {
        bool ok = suite_matches(d3, {"case-enumeration", "trace (5.6)", "phi-magnitude"});
        bool documented = false;
        for (const auto& r : d3)
            if (r.id == "phi-phase") documented = r.status == CheckStatus::DocumentedDiscrepancy;
        criterion("7. n=3 suite (single case, magnitude pi^2, phase recorded as "
                  "documented discrepancy)",
                  ok && documented);
    }

    criterion("8. property suites (representation independence, flat-collar degeneracy, "
              "projection idempotence, trace cyclicity, canonical forms)",
              suite_matches(d4, {"conjugated-representation", "tangential-permutation",
                                 "h-to-zero", "pi+-idempotent", "trace-cyclicity",
                                 "canonical-idempotence", "flat-collar-degeneracy"}) &&
                  no_mismatch(property_checks(OperatorKind::Signature, 4)) &&
                  no_mismatch(property_checks(OperatorKind::Dirac, 3)));

    {
        bool ok = true;
        for (auto [op, n] : {std::pair{OperatorKind::Dirac, 4}, {OperatorKind::Signature, 4},
                             {OperatorKind::Dirac, 3}})
            ok = ok && no_mismatch(run_oracle_checks(op, n, 12345));
        criterion("9. numeric oracle (every case integrand and 100 random rational "
                  "functions within 1e-6)",
                  ok);
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
