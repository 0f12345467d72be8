#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amq/bounds.hpp"
#include "amq/funcmodel.hpp"

namespace amq {

struct CampaignConfig {
    std::vector<std::string> functions;
    std::vector<double> lambda;
    std::vector<double> mu;
    std::vector<double> alpha;
    std::vector<double> m;
    std::vector<double> q;
    double a = 0.0;
    double b = 1.0;
    double domain_upper = 4.0;  // catalog domain for non-sine entries
    double tol = 1e-10;         // integrator tolerance
    int cert_points = 4096;
    double cert_tol = 1e-12;
    double slack = 1e-8;
    std::string out;            // report path; empty = do not write
    std::string format = "csv"; // csv | json
    std::string log;            // optional skip/error log path
    std::uint64_t seed = 1;
    int random_rows = 0;        // extra seeded random ParamSets per function
};

struct ReportRow {
    std::string function;
    ParamSet params;
    BoundReport report;
    std::string error;  // non-empty when evaluation failed; report fields unset

    bool evaluated() const { return error.empty(); }
};

struct CampaignSummary {
    std::uint64_t rows = 0;
    std::uint64_t skipped = 0;
    std::uint64_t errors = 0;
    std::uint64_t cert_passes = 0;
    // Certificate-passing rows where the min-form bound's own hypothesis
    // (thm24_hypothesis_ok) held and the bound was therefore checked.
    std::uint64_t t24_checked = 0;
    std::uint64_t violations_t22 = 0;
    std::uint64_t violations_t24 = 0;
    std::uint64_t violations_t26 = 0;
    double worst_ratio_t22 = 0.0;
    double worst_ratio_t24 = 0.0;
    double worst_ratio_t26 = 0.0;

    std::uint64_t violations() const {
        return violations_t22 + violations_t24 + violations_t26;
    }
};

struct CampaignResult {
    CampaignSummary summary;
    std::vector<ReportRow> rows;
    std::vector<std::string> skip_log;
};

// Deterministic sweep over functions x grids (plus optional seeded random
// draws). Rows are ordered by (function index, grid index); per-row
// evaluation errors are recorded in the row, not fatal. Writes the report
// (and the skip log) when the config names output paths.
CampaignResult run_campaign(const CampaignConfig& cfg);

// Fixed-column CSV, floats with 17 significant digits.
std::string to_csv(const std::vector<ReportRow>& rows);

// JSON array of row objects, same 17-digit float policy.
std::string to_json(const std::vector<ReportRow>& rows);

void emit_report(const std::vector<ReportRow>& rows, const std::string& format,
                 const std::string& path);

// Parses a JSON config document; throws std::runtime_error with a message on
// malformed input or constraint violations (e.g. empty function list).
CampaignConfig load_config(const std::string& path);
CampaignConfig parse_config(const std::string& json_text);

// The grid the acceptance campaign runs: all five catalog functions on
// [0, 1] with dense lambda/mu grids and alpha, m in {1/4, 1/2, 1},
// q in {1, 2, 3}.
CampaignConfig default_campaign_config();

// Accepts "p/q" fractions and plain decimals.
double parse_fraction(const std::string& text);

// Integrator tolerance default, overridable via the AMQ_TOL environment
// variable.
double default_tolerance();

}  // namespace amq
