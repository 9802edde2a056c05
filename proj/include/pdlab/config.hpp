#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdlab/fpp.hpp"
#include "pdlab/pointset.hpp"
#include "pdlab/weightfn.hpp"

namespace pdlab {

// Configuration for one experiment run. Serializes to a sectioned key = value
// file and to an equivalent JSON document; both round-trip exactly.
struct ExperimentConfig {
    std::string experiment = "fn-scaling";
    Window window{-16, 16, -16, 16, 8};
    IntensityModel intensity{};
    EdgeTimeDist nu{};
    WeightFn f{};

    std::vector<int> n_list{2, 4, 6, 8};
    std::vector<int> r_list{2, 4, 6};
    std::vector<int> m_list{5, 7, 9};
    std::vector<int> l_list{1, 2, 3};
    std::vector<int> L_list{6, 10, 14};
    std::vector<double> a_list{0.2};
    std::vector<double> r_scan{};

    double p = 0.5;        // bond/site probability
    double r_scale = 54.0; // renormalization scale
    int shift_index = 1;
    long replicas = 8;
    long outer = 30;  // nested Monte Carlo: point sets
    long inner = 30;  // nested Monte Carlo: time draws per point set
    uint64_t seed = 1;
    int width = 1; // worker threads
    int beam_width = 64;
    long budget = 5'000'000;
    long mc_samples = 20'000;
    int pairs_per_side = 1;
    double target = 0.05; // calibration target for P(bad)
    std::string out_dir = "out";

    void validate() const;
    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// The known experiment names.
const std::vector<std::string>& experiment_names();

// Sensible per-experiment defaults (window sizes, grids, distributions).
ExperimentConfig default_config(const std::string& experiment);

// Sectioned key = value format.
std::string emit_config(const ExperimentConfig& cfg);
ExperimentConfig parse_config(const std::string& text);

// JSON equivalent.
std::string emit_config_json(const ExperimentConfig& cfg);
ExperimentConfig parse_config_json(const std::string& text);

// Loads by extension: .json uses the JSON parser, anything else the sectioned
// format.
ExperimentConfig load_config_file(const std::string& path);

} // namespace pdlab
