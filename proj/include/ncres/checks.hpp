#pragma once

#include "ncres/cases.hpp"

#include <string>
#include <vector>

namespace ncres {

enum class CheckStatus { Match, Mismatch, DocumentedDiscrepancy };

std::string to_string(CheckStatus s);

/// One verification line: a computed exact value against its expected form,
/// anchored to the equation or lemma it reproduces ("plumbing" when none).
struct VerificationRecord {
    std::string id;
    std::string anchor;
    std::string computed;
    std::string expected;
    CheckStatus status = CheckStatus::Match;
    std::vector<ScalarTerm> terms;  // structured exact value, when scalar-valued
};

std::vector<VerificationRecord> geometry_checks(OperatorKind op, int n);
std::vector<VerificationRecord> trace_checks(OperatorKind op, int n);
std::vector<VerificationRecord> symbol_checks(OperatorKind op, int n);
std::vector<VerificationRecord> case_checks(OperatorKind op, int n, bool emit_cases);
std::vector<VerificationRecord> action_checks(OperatorKind op, int n);
std::vector<VerificationRecord> property_checks(OperatorKind op, int n);

/// Every exact suite for the scenario, in order.
std::vector<VerificationRecord> run_all_checks(OperatorKind op, int n, bool emit_cases = true);

/// Floating-point oracle records (quadrature cross-checks); never mutates
/// exact results.
std::vector<VerificationRecord> run_oracle_checks(OperatorKind op, int n, unsigned seed);

}  // namespace ncres
