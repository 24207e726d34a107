#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncres/report.hpp"

#include <sstream>

using namespace ncres;

namespace {
bool same_records(const std::vector<VerificationRecord>& a,
                  const std::vector<VerificationRecord>& b) {
    if (a.size() != b.size()) return false;
    for (size_t k = 0; k < a.size(); ++k) {
        const auto& x = a[k];
        const auto& y = b[k];
        if (x.id != y.id || x.anchor != y.anchor || x.computed != y.computed ||
            x.expected != y.expected || x.status != y.status)
            return false;
        if (x.terms.size() != y.terms.size()) return false;
        for (size_t t = 0; t < x.terms.size(); ++t)
            if (x.terms[t].coeff != y.terms[t].coeff || x.terms[t].pi_pow != y.terms[t].pi_pow ||
                x.terms[t].omega_pow != y.terms[t].omega_pow ||
                x.terms[t].h_pow != y.terms[t].h_pow)
                return false;
    }
    return true;
}
}  // namespace

TEST_CASE("configuration validation") {
    RunConfig ok;
    CHECK_NOTHROW(validate(ok));
    RunConfig sig3{OperatorKind::Signature, 3};
    CHECK_THROWS_AS(validate(sig3), std::invalid_argument);
    RunConfig dim5{OperatorKind::Dirac, 5};
    CHECK_THROWS_AS(validate(dim5), std::invalid_argument);
}

TEST_CASE("exit code is a pure function of the statuses") {
    RunReport rep;
    rep.records.push_back({"a", "plumbing", "x", "x", CheckStatus::Match, {}});
    CHECK(exit_code(rep) == 0);
    rep.records.push_back({"b", "plumbing", "x", "y", CheckStatus::DocumentedDiscrepancy, {}});
    CHECK(exit_code(rep) == 0);
    rep.records.push_back({"c", "plumbing", "x", "y", CheckStatus::Mismatch, {}});
    CHECK(exit_code(rep) == 1);
}

TEST_CASE("json report round-trips to the identical record set") {
    RunConfig cfg;
    cfg.emit_cases = true;
    cfg.format = ReportFormat::Json;
    RunReport rep = run_verify(cfg);
    RunReport back = from_json(to_json(rep));
    CHECK(same_records(rep.records, back.records));
    CHECK(back.verdict == rep.verdict);
    CHECK(back.config.dim == cfg.dim);
    CHECK(back.config.emit_cases == cfg.emit_cases);
    REQUIRE(back.phi_total.size() == rep.phi_total.size());
    for (size_t k = 0; k < rep.phi_total.size(); ++k)
        CHECK(back.phi_total[k].coeff == rep.phi_total[k].coeff);
}

TEST_CASE("structured exact serialization uses fraction strings") {
    RunConfig cfg;
    cfg.op = OperatorKind::Dirac;
    cfg.emit_cases = true;
    RunReport rep = run_verify(cfg);
    std::string j = to_json(rep);
    CHECK(j.find("\"coeff_re\": \"-3/8\"") != std::string::npos);
    CHECK(j.find("\"phi_total\"") != std::string::npos);
    CHECK(j.find("\"verdict\": \"pass\"") != std::string::npos);
    // no decimal serialization of exact data
    CHECK(j.find("0.375") == std::string::npos);
}

TEST_CASE("renderers produce the verdict in every format") {
    RunConfig cfg;
    cfg.dim = 3;
    RunReport rep = run_verify(cfg);
    std::ostringstream text, md;
    render_text(rep, text);
    render_markdown(rep, md);
    CHECK(text.str().find("verdict: pass") != std::string::npos);
    CHECK(text.str().find("DOCUMENTED-DISCREPANCY") != std::string::npos);
    CHECK(md.str().find("| MATCH |") != std::string::npos);
    CHECK(md.str().find("**pass**") != std::string::npos);
}

TEST_CASE("scenario verdicts") {
    for (auto [op, n] : {std::pair{OperatorKind::Dirac, 4}, {OperatorKind::Signature, 4},
                         {OperatorKind::Dirac, 3}}) {
        RunConfig cfg;
        cfg.op = op;
        cfg.dim = n;
        RunReport rep = run_verify(cfg);
        CHECK(rep.verdict == "pass");
        CHECK(exit_code(rep) == 0);
    }
}
