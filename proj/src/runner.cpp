#include "pdlab/runner.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pdlab/boxes.hpp"
#include "pdlab/experiments.hpp"
#include "pdlab/stats.hpp"

namespace pdlab {

namespace {

std::string fmt(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.experiment == "fpp-variance" && cfg.replicas != cfg.outer)
        throw ConfigError("fpp-variance parallelizes over point sets: set replicas = outer");

    const ExperimentDef& def = experiment_def(cfg.experiment);
    ExperimentResult res;
    res.cfg = cfg;

    std::vector<std::vector<RawRow>> per_replica(std::size_t(cfg.replicas));
    std::atomic<long> next{0};
    std::mutex err_mutex;
    std::string first_error;

    auto worker = [&]() {
        while (true) {
            const long rep = next.fetch_add(1);
            if (rep >= cfg.replicas) return;
            {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error.empty()) return;
            }
            try {
                const uint64_t seed = derive_seed(cfg.seed, cfg.experiment, uint64_t(rep));
                per_replica[std::size_t(rep)] = def.replica_fn(cfg, rep, seed);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (first_error.empty())
                    first_error = "replica " + std::to_string(rep) + ": " + e.what();
            }
        }
    };
    if (cfg.width == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < cfg.width; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (!first_error.empty()) {
        if (first_error.find("budget") != std::string::npos)
            throw BudgetExceeded(first_error);
        throw Error(first_error);
    }

    for (auto& rows : per_replica)
        res.raw.insert(res.raw.end(), rows.begin(), rows.end());

    if (def.finalize)
        def.finalize(cfg, res.raw, res.summary, res.notes);
    else
        res.summary = summarize_rows(res.raw);
    return res;
}

std::string raw_csv(const ExperimentResult& res) {
    std::ostringstream os;
    os << "replica,cell,metric,value,method\n";
    for (const RawRow& r : res.raw)
        os << r.replica << ',' << r.cell << ',' << r.metric << ',' << fmt(r.value) << ','
           << r.method << '\n';
    return os.str();
}

std::string summary_csv(const ExperimentResult& res) {
    std::ostringstream os;
    os << "cell,metric,method,mean,se,count\n";
    for (const SummaryRow& r : res.summary)
        os << r.cell << ',' << r.metric << ',' << r.method << ',' << fmt(r.mean) << ','
           << fmt(r.se) << ',' << r.count << '\n';
    return os.str();
}

std::string summary_json(const ExperimentResult& res) {
    nlohmann::ordered_json j;
    j["config"] = nlohmann::ordered_json::parse(emit_config_json(res.cfg));
    j["summary"] = nlohmann::ordered_json::array();
    for (const SummaryRow& r : res.summary)
        j["summary"].push_back({{"cell", r.cell},
                                {"metric", r.metric},
                                {"method", r.method},
                                {"mean", r.mean},
                                {"se", r.se},
                                {"count", r.count}});
    j["notes"] = res.notes;
    return j.dump(2) + "\n";
}

void write_result_files(const ExperimentResult& res) {
    namespace fs = std::filesystem;
    fs::create_directories(res.cfg.out_dir);
    auto write = [&](const std::string& name, const std::string& body) {
        std::ofstream os(fs::path(res.cfg.out_dir) / name, std::ios::binary);
        if (!os) throw Error("cannot write " + name + " in " + res.cfg.out_dir);
        os << body;
    };
    write("raw.csv", raw_csv(res));
    write("summary.csv", summary_csv(res));
    write("summary.json", summary_json(res));
}

CalibrationResult calibrate_r(double lambda, double target, uint64_t seed,
                              std::vector<double> scan, long replicas) {
    if (!(target > 0 && target < 0.5)) throw InvalidParameter("target must be in (0, 0.5)");
    if (!(lambda > 0)) throw InvalidParameter("lambda must be > 0");
    if (scan.empty()) {
        // Default: r values whose per-sub-box mean runs from 6 to 14.
        const int k = 3 * alpha_d(2);
        for (double m = 6.0; m <= 14.0; m += 1.0) scan.push_back(double(k) * std::sqrt(m / lambda));
    }
    std::sort(scan.begin(), scan.end());

    CalibrationResult out;
    for (double r : scan) {
        long bad = 0, reps = 0;
        Window box{-r / 2, r / 2, -r / 2, r / 2, 0};
        // Sequential with early rejection once the estimate is 3 SE above the
        // target.
        for (long rep = 0; rep < replicas; ++rep) {
            const PointSet ps = sample_poisson(
                box, {IntensityModel::Kind::Homogeneous, lambda, 0, 1},
                derive_seed(seed, "calibrate", uint64_t(rep) * 1000003 + uint64_t(r * 97)));
            if (!classify_box(ps, BoxGrid{r, 1}, {0, 0}, BoxMode::Good)) ++bad;
            ++reps;
            if (reps >= 60 && reps % 20 == 0) {
                const double p = double(bad) / double(reps);
                const double se = std::sqrt(std::max(p * (1 - p), 1e-12) / double(reps));
                if (p - 3 * se > target) break; // hopeless at this scale
            }
        }
        const double p = double(bad) / double(reps);
        const double se = std::sqrt(std::max(p * (1 - p), 1e-12) / double(reps));
        out.scan.push_back({r, p, se, reps});
        if (reps == replicas && p + 3 * se <= target) {
            out.r = r;
            out.p_bad = p;
            out.se = se;
            return out;
        }
    }
    double best = 1.0;
    for (const auto& row : out.scan) best = std::min(best, row.p_bad);
    throw CalibrationFailed("no scanned r reached the target; best P(bad) = " + fmt(best));
}

} // namespace pdlab
