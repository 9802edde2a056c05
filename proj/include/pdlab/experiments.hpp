#pragma once

#include <functional>

#include "pdlab/runner.hpp"

namespace pdlab {

// One experiment = a per-replica measurement plus an optional custom
// summarizer (the default groups rows by (cell, metric, method) and reports
// mean / SE / count in first-appearance order).
struct ExperimentDef {
    std::function<std::vector<RawRow>(const ExperimentConfig&, long replica, uint64_t seed)>
        replica_fn;
    std::function<void(const ExperimentConfig&, const std::vector<RawRow>&,
                       std::vector<SummaryRow>&, std::vector<std::string>&)>
        finalize; // may be null
};

const ExperimentDef& experiment_def(const std::string& name);

// Shared grouping helper (also used by custom finalizers).
std::vector<SummaryRow> summarize_rows(const std::vector<RawRow>& raw);

} // namespace pdlab
