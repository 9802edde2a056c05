#pragma once

#include <string>
#include <vector>

#include "pdlab/config.hpp"

namespace pdlab {

// One measured value from one replica. `cell` identifies the grid point
// ("n=8", "L=10;j=3", ...); `method` labels how the value was obtained
// (exact | beam | mc | mc-lower-bound) so lower bounds are never pooled into
// exact columns.
struct RawRow {
    long replica = 0;
    std::string cell;
    std::string metric;
    double value = 0.0;
    std::string method = "exact";
};

struct SummaryRow {
    std::string cell;
    std::string metric;
    std::string method;
    double mean = 0.0;
    double se = 0.0;
    long count = 0;
};

struct ExperimentResult {
    ExperimentConfig cfg;
    std::vector<RawRow> raw;
    std::vector<SummaryRow> summary;
    std::vector<std::string> notes;
};

// Runs all replicas (parallel over cfg.width workers; output independent of
// the width) and finalizes summary rows.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Serializations used by run + the CLI: raw.csv, summary.csv, summary.json
// inside cfg.out_dir (created if missing).
void write_result_files(const ExperimentResult& res);
std::string raw_csv(const ExperimentResult& res);
std::string summary_csv(const ExperimentResult& res);
std::string summary_json(const ExperimentResult& res);

// Scans r until the empirical bad-box probability drops below the target
// (3 SE confidence). Empty scan uses a geometric default derived from lambda.
struct CalibrationRow {
    double r = 0.0;
    double p_bad = 0.0;
    double se = 0.0;
    long replicas = 0;
};

struct CalibrationResult {
    double r = 0.0;
    double p_bad = 0.0;
    double se = 0.0;
    std::vector<CalibrationRow> scan;
};

CalibrationResult calibrate_r(double lambda, double target, uint64_t seed,
                              std::vector<double> scan = {}, long replicas = 400);

} // namespace pdlab
