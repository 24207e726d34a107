#include "ncres/report.hpp"

#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <ostream>
#include <sstream>

namespace ncres {

namespace {

int log_level() {
    static int level = [] {
        const char* env = std::getenv("NCGRES_LOG");
        if (!env) return 0;
        std::string v(env);
        if (v == "debug") return 2;
        if (v == "info") return 1;
        return 0;
    }();
    return level;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

nlohmann::json term_to_json(const ScalarTerm& t) {
    return {{"coeff_re", rat_str(t.coeff.re)},
            {"coeff_im", rat_str(t.coeff.im)},
            {"pi_pow", t.pi_pow},
            {"omega_pow", t.omega_pow},
            {"h_pow", t.h_pow}};
}

ScalarTerm term_from_json(const nlohmann::json& j) {
    ScalarTerm t;
    t.coeff = GRat(Rat(j.at("coeff_re").get<std::string>()),
                   Rat(j.at("coeff_im").get<std::string>()));
    t.pi_pow = j.at("pi_pow").get<int>();
    t.omega_pow = j.at("omega_pow").get<int>();
    t.h_pow = j.at("h_pow").get<int>();
    return t;
}

CheckStatus status_from(const std::string& s) {
    if (s == "MATCH") return CheckStatus::Match;
    if (s == "MISMATCH") return CheckStatus::Mismatch;
    if (s == "DOCUMENTED-DISCREPANCY") return CheckStatus::DocumentedDiscrepancy;
    throw std::invalid_argument("unknown status: " + s);
}

std::string format_name(ReportFormat f) {
    switch (f) {
        case ReportFormat::Text: return "text";
        case ReportFormat::Json: return "json";
        case ReportFormat::Markdown: return "markdown";
    }
    return "?";
}

}  // namespace

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= 2) std::cerr << "[debug] " << msg << "\n";
}

void validate(const RunConfig& cfg) {
    if (cfg.dim != 3 && cfg.dim != 4)
        throw std::invalid_argument("--dim must be 3 or 4");
    if (cfg.op == OperatorKind::Signature && cfg.dim == 3)
        throw std::invalid_argument(
            "the signature scenario is defined for --dim 4 only");
}

RunReport run_verify(const RunConfig& cfg) {
    validate(cfg);
    RunReport rep;
    rep.config = cfg;
    log_info("scenario: " + to_string(cfg.op) + " n=" + std::to_string(cfg.dim));
    rep.records = run_all_checks(cfg.op, cfg.dim, cfg.emit_cases);
    if (cfg.oracle) {
        log_info("running numeric oracle, seed " + std::to_string(cfg.seed));
        for (auto& r : run_oracle_checks(cfg.op, cfg.dim, cfg.seed))
            rep.records.push_back(std::move(r));
    }
    for (const auto& r : rep.records)
        log_debug(r.id + " [" + r.anchor + "] " + to_string(r.status));
    rep.phi_total = assemble_phi(cfg.op, cfg.dim).total.terms();
    rep.verdict = exit_code(rep) == 0 ? "pass" : "fail";
    return rep;
}

int exit_code(const RunReport& rep) {
    for (const auto& r : rep.records)
        if (r.status == CheckStatus::Mismatch) return 1;
    return 0;
}

void render_text(const RunReport& rep, std::ostream& os) {
    os << "scenario: " << to_string(rep.config.op) << ", n = " << rep.config.dim << "\n";
    for (const auto& r : rep.records) {
        os << "  " << to_string(r.status) << "  " << r.id << "  [" << r.anchor << "]\n";
        if (r.status != CheckStatus::Match) {
            os << "      computed: " << r.computed << "\n";
            os << "      expected: " << r.expected << "\n";
        }
    }
    ScalarSum total;
    for (const auto& t : rep.phi_total) total.add(t);
    os << "boundary total: " << total.str() << "\n";
    os << "verdict: " << rep.verdict << "\n";
}

void render_markdown(const RunReport& rep, std::ostream& os) {
    os << "# Verification report: " << to_string(rep.config.op) << ", n = " << rep.config.dim
       << "\n\n";
    os << "| status | check | anchor | computed | expected |\n";
    os << "|---|---|---|---|---|\n";
    for (const auto& r : rep.records)
        os << "| " << to_string(r.status) << " | " << r.id << " | " << r.anchor << " | "
           << r.computed << " | " << r.expected << " |\n";
    ScalarSum total;
    for (const auto& t : rep.phi_total) total.add(t);
    os << "\nBoundary total: `" << total.str() << "`\n\n";
    os << "Verdict: **" << rep.verdict << "**\n";
}

std::string to_json(const RunReport& rep) {
    nlohmann::json j;
    j["config"] = {{"operator", to_string(rep.config.op)},
                   {"dim", rep.config.dim},
                   {"format", format_name(rep.config.format)},
                   {"emit_cases", rep.config.emit_cases},
                   {"oracle", rep.config.oracle ? "numeric" : "off"},
                   {"seed", rep.config.seed}};
    j["records"] = nlohmann::json::array();
    for (const auto& r : rep.records) {
        nlohmann::json jr = {{"id", r.id},
                             {"anchor", r.anchor},
                             {"computed", r.computed},
                             {"expected", r.expected},
                             {"status", to_string(r.status)}};
        jr["terms"] = nlohmann::json::array();
        for (const auto& t : r.terms) jr["terms"].push_back(term_to_json(t));
        j["records"].push_back(std::move(jr));
    }
    j["phi_total"] = nlohmann::json::array();
    for (const auto& t : rep.phi_total) j["phi_total"].push_back(term_to_json(t));
    j["verdict"] = rep.verdict;
    return j.dump(2);
}

RunReport from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RunReport rep;
    const auto& jc = j.at("config");
    std::string opname = jc.at("operator").get<std::string>();
    rep.config.op = opname == "signature" ? OperatorKind::Signature : OperatorKind::Dirac;
    rep.config.dim = jc.at("dim").get<int>();
    std::string fmt = jc.at("format").get<std::string>();
    rep.config.format = fmt == "json"       ? ReportFormat::Json
                        : fmt == "markdown" ? ReportFormat::Markdown
                                            : ReportFormat::Text;
    rep.config.emit_cases = jc.at("emit_cases").get<bool>();
    rep.config.oracle = jc.at("oracle").get<std::string>() == "numeric";
    rep.config.seed = jc.at("seed").get<unsigned>();
    for (const auto& jr : j.at("records")) {
        VerificationRecord r;
        r.id = jr.at("id").get<std::string>();
        r.anchor = jr.at("anchor").get<std::string>();
        r.computed = jr.at("computed").get<std::string>();
        r.expected = jr.at("expected").get<std::string>();
        r.status = status_from(jr.at("status").get<std::string>());
        for (const auto& jt : jr.at("terms")) r.terms.push_back(term_from_json(jt));
        rep.records.push_back(std::move(r));
    }
    for (const auto& jt : j.at("phi_total")) rep.phi_total.push_back(term_from_json(jt));
    rep.verdict = j.at("verdict").get<std::string>();
    return rep;
}

}  // namespace ncres
