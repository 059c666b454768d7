#pragma once

#include <string>
#include <vector>

namespace padicverify {

/// Outcome of one variant of a congruence comparison.  `valuation` is
/// v_p(lhs - rhs) for that variant, capped at the working precision.
struct VariantResult {
    std::string sign;    // "plus" | "minus" | "-"
    std::string euler;   // "plain" | "chi-p" | "euler-inv" | "-"
    std::string ppower;  // "without" | "with" | "-"
    int valuation = 0;
    int required = 0;
    bool pass = false;
};

/// One verification record: a claim instance at one grid point.
struct CongruenceReport {
    std::string claim;
    long d = 0;  // 0 when not applicable
    long p = 0;
    int n = 0;  // 0 when not applicable
    long f = 0;
    int g = 2;
    std::string status;  // ok | skipped-inert | skipped-ramified |
                         // skipped-embedding | skipped-p-divides-h |
                         // hypothesis-failed
    std::string lhs, rhs;
    int required_valuation = 0;
    int working_precision = 0;
    std::vector<VariantResult> variants;
    bool passed = false;
    std::string variant_passed;
    std::string embedding;
    std::string note;
    double time_ms = 0.0;
};

enum class ReportFormat { text, csv, json };

ReportFormat report_format_from_string(const std::string& s);

/// Deterministically ordered rendering; `stable` drops timing fields so two
/// identical runs emit byte-identical output.
std::string emit_report(std::vector<CongruenceReport> reports, ReportFormat fmt,
                        bool stable);

/// Inverse of the json emitter (used by round-trip checks).
std::vector<CongruenceReport> parse_report_json(const std::string& text);

/// Values of each variant dimension that pass on every ok-classified point,
/// per claim; the measurement the harness prints after a run.
std::string variant_summary(const std::vector<CongruenceReport>& reports);

/// 0 when everything passed or was skipped, 1 on any congruence failure.
int report_exit_code(const std::vector<CongruenceReport>& reports);

void sort_reports(std::vector<CongruenceReport>& reports);

}  // namespace padicverify
