// pdlab: Poisson-Delaunay simulation lab.
//
//   pdlab <experiment> [--config FILE] [--seed S] [--width W] [--out DIR]
//   pdlab calibrate-r --lambda L --target T [--seed S] [--out DIR]
//   pdlab render --points FILE [--out FILE.svg] [--voronoi] [--circumcircles]
//   pdlab print-config <experiment>
//
// Exit codes: 0 success, 2 configuration error, 3 budget error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "pdlab/errors.hpp"
#include "pdlab/runner.hpp"
#include "pdlab/svg.hpp"

using namespace pdlab;

namespace {

int run_experiment_cmd(const std::string& name, const std::string& config_path, long seed,
                       int width, const std::string& out_dir, bool have_seed, bool have_width) {
    ExperimentConfig cfg =
        config_path.empty() ? default_config(name) : load_config_file(config_path);
    if (!config_path.empty() && cfg.experiment != name)
        throw ConfigError("config is for experiment '" + cfg.experiment + "', not '" + name + "'");
    cfg.experiment = name;
    if (have_seed) cfg.seed = uint64_t(seed);
    if (have_width) cfg.width = width;
    if (!out_dir.empty()) cfg.out_dir = out_dir;

    const ExperimentResult res = run_experiment(cfg);
    write_result_files(res);
    std::cout << summary_csv(res);
    for (const auto& note : res.notes) std::cout << "# note: " << note << '\n';
    std::cout << "# wrote " << cfg.out_dir << "/raw.csv, summary.csv, summary.json\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poisson-Delaunay simulation lab"};
    app.require_subcommand(1);

    // Experiment subcommands share one option set.
    struct ExpOpts {
        std::string config;
        long seed = 0;
        int width = 0;
        std::string out;
        bool have_seed = false, have_width = false;
    };
    std::map<std::string, std::shared_ptr<ExpOpts>> opts;
    for (const std::string& name : experiment_names()) {
        auto o = std::make_shared<ExpOpts>();
        CLI::App* sub = app.add_subcommand(name, "run the " + name + " experiment");
        sub->add_option("--config", o->config, "config file (.json or key = value)");
        sub->add_option("--seed", o->seed, "base seed")->each([o](const std::string&) {
            o->have_seed = true;
        });
        sub->add_option("--width", o->width, "worker threads")->each([o](const std::string&) {
            o->have_width = true;
        });
        sub->add_option("--out", o->out, "output directory");
        opts[name] = o;
    }

    double cal_lambda = 1.0, cal_target = 0.05;
    long cal_seed = 1;
    std::string cal_out;
    CLI::App* cal = app.add_subcommand("calibrate-r", "scan r until P(bad) meets the target");
    cal->add_option("--lambda", cal_lambda, "intensity")->required();
    cal->add_option("--target", cal_target, "bad-box probability target in (0, 0.5)");
    cal->add_option("--seed", cal_seed, "base seed");
    cal->add_option("--out", cal_out, "output directory");

    std::string render_points, render_out = "render.svg";
    bool render_voronoi = false, render_circum = false;
    CLI::App* render = app.add_subcommand("render", "render a point set file as SVG");
    render->add_option("--points", render_points, "point set file")->required();
    render->add_option("--out", render_out, "output SVG path");
    render->add_flag("--voronoi", render_voronoi, "overlay the Voronoi diagram");
    render->add_flag("--circumcircles", render_circum, "overlay circumcircles");

    std::string print_name;
    CLI::App* print_cfg = app.add_subcommand("print-config", "print the default config");
    print_cfg->add_option("experiment", print_name, "experiment name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        for (const std::string& name : experiment_names()) {
            if (app.get_subcommand(name)->parsed()) {
                const auto& o = *opts[name];
                return run_experiment_cmd(name, o.config, o.seed, o.width, o.out, o.have_seed,
                                          o.have_width);
            }
        }
        if (cal->parsed()) {
            const CalibrationResult res = calibrate_r(cal_lambda, cal_target, uint64_t(cal_seed));
            std::cout << "r,p_bad,se,replicas\n";
            for (const auto& row : res.scan)
                std::cout << row.r << ',' << row.p_bad << ',' << row.se << ',' << row.replicas
                          << '\n';
            std::cout << "# calibrated r = " << res.r << " with P(bad) = " << res.p_bad << '\n';
            if (!cal_out.empty()) {
                std::filesystem::create_directories(cal_out);
                std::ofstream os(std::filesystem::path(cal_out) / "calibration.csv");
                os << "r,p_bad,se,replicas\n";
                for (const auto& row : res.scan)
                    os << row.r << ',' << row.p_bad << ',' << row.se << ',' << row.replicas << '\n';
            }
            return 0;
        }
        if (render->parsed()) {
            const PointSet ps = read_pointset_file(render_points);
            std::ofstream os(render_out, std::ios::binary);
            if (!os) throw Error("cannot write " + render_out);
            if (ps.size() < 3) {
                os << render_svg_frame(ps.window);
            } else {
                SvgOptions opt;
                opt.voronoi = render_voronoi;
                opt.circumcircles = render_circum;
                os << render_svg(build_delaunay(ps), opt);
            }
            std::cout << "# wrote " << render_out << '\n';
            return 0;
        }
        if (print_cfg->parsed()) {
            std::cout << emit_config(default_config(print_name));
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
