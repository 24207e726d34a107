#pragma once

#include "ncres/checks.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ncres {

enum class ReportFormat { Text, Json, Markdown };

struct RunConfig {
    OperatorKind op = OperatorKind::Dirac;
    int dim = 4;
    ReportFormat format = ReportFormat::Text;
    bool emit_cases = false;
    bool oracle = false;
    unsigned seed = 1;
};

/// Reject unsupported scenarios ((signature,3), dim outside {3,4}); throws
/// std::invalid_argument with a usage-grade message.
void validate(const RunConfig& cfg);

struct RunReport {
    RunConfig config;
    std::vector<VerificationRecord> records;
    std::vector<ScalarTerm> phi_total;
    std::string verdict;  // "pass" or "fail"
};

/// Run every exact suite (plus the oracle when configured) for the scenario.
RunReport run_verify(const RunConfig& cfg);

/// 0 iff every non-DOCUMENTED record matches, 1 otherwise.
int exit_code(const RunReport& rep);

void render_text(const RunReport& rep, std::ostream& os);
void render_markdown(const RunReport& rep, std::ostream& os);
std::string to_json(const RunReport& rep);
RunReport from_json(const std::string& text);

/// NCGRES_LOG-gated stderr logging (error < info < debug; default error).
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace ncres
