#include "pdlab/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pdlab/errors.hpp"

namespace pdlab {

namespace {

std::string fmt(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

double parse_double(const std::string& s, const std::string& key) {
    double v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError("bad number for " + key + ": '" + s + "'");
    return v;
}

long parse_long(const std::string& s, const std::string& key) {
    long v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError("bad integer for " + key + ": '" + s + "'");
    return v;
}

uint64_t parse_u64(const std::string& s, const std::string& key) {
    uint64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError("bad integer for " + key + ": '" + s + "'");
    return v;
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& s, const std::string& key, Parse parse) {
    std::vector<T> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        // trim
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(parse(item.substr(b, e - b + 1), key));
    }
    return out;
}

template <typename T>
std::string join(const std::vector<T>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        if constexpr (std::is_same_v<T, double>)
            out += fmt(xs[i]);
        else
            out += std::to_string(xs[i]);
    }
    return out;
}

std::string intensity_kind_name(IntensityModel::Kind k) {
    return k == IntensityModel::Kind::Homogeneous ? "homogeneous" : "modulated";
}

IntensityModel::Kind intensity_kind_of(const std::string& s) {
    if (s == "homogeneous") return IntensityModel::Kind::Homogeneous;
    if (s == "modulated") return IntensityModel::Kind::Modulated;
    throw ConfigError("unknown intensity.kind '" + s + "'");
}

std::string nu_kind_name(EdgeTimeDist::Kind k) {
    switch (k) {
        case EdgeTimeDist::Kind::Exponential: return "exponential";
        case EdgeTimeDist::Kind::Uniform: return "uniform";
        case EdgeTimeDist::Kind::Deterministic: return "deterministic";
        case EdgeTimeDist::Kind::BernoulliMix: return "bernoulli-mix";
    }
    return "?";
}

EdgeTimeDist::Kind nu_kind_of(const std::string& s) {
    if (s == "exponential") return EdgeTimeDist::Kind::Exponential;
    if (s == "uniform") return EdgeTimeDist::Kind::Uniform;
    if (s == "deterministic") return EdgeTimeDist::Kind::Deterministic;
    if (s == "bernoulli-mix") return EdgeTimeDist::Kind::BernoulliMix;
    throw ConfigError("unknown nu.kind '" + s + "'");
}

std::string f_kind_name(WeightFn::Kind k) {
    switch (k) {
        case WeightFn::Kind::Identity: return "identity";
        case WeightFn::Kind::Square: return "square";
        case WeightFn::Kind::Logarithmic: return "log";
        case WeightFn::Kind::Constant: return "const";
    }
    return "?";
}

WeightFn::Kind f_kind_of(const std::string& s) {
    if (s == "identity") return WeightFn::Kind::Identity;
    if (s == "square") return WeightFn::Kind::Square;
    if (s == "log") return WeightFn::Kind::Logarithmic;
    if (s == "const") return WeightFn::Kind::Constant;
    throw ConfigError("unknown f.kind '" + s + "'");
}

} // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names{
        "fn-scaling", "kappa",     "gamma-area",   "fpp-variance", "segment-walk",
        "cluster-tail", "good-box", "path-density", "stabbing",     "confinement",
        "reimer",     "cover-animal"};
    return names;
}

void ExperimentConfig::validate() const {
    const auto& names = experiment_names();
    if (std::find(names.begin(), names.end(), experiment) == names.end())
        throw ConfigError("unknown experiment '" + experiment + "'");
    window.validate();
    intensity.validate();
    nu.validate();
    f.validate();
    if (replicas < 1) throw ConfigError("run.replicas must be >= 1");
    if (outer < 1 || inner < 1) throw ConfigError("run.outer and run.inner must be >= 1");
    if (width < 1) throw ConfigError("run.width must be >= 1");
    if (!(p >= 0 && p <= 1)) throw ConfigError("run.p must be in [0,1]");
    if (!(r_scale > 0)) throw ConfigError("run.r_scale must be > 0");
    if (shift_index < 1 || shift_index > 9) throw ConfigError("run.shift_index must be in 1..9");
    if (beam_width < 1) throw ConfigError("run.beam_width must be >= 1");
    if (mc_samples < 100) throw ConfigError("run.mc_samples must be >= 100");
    if (pairs_per_side < 1) throw ConfigError("run.pairs_per_side must be >= 1");
    if (!(target > 0 && target < 0.5)) throw ConfigError("run.target must be in (0, 0.5)");
    auto need = [&](bool cond, const std::string& what) {
        if (!cond) throw ConfigError("grids." + what + " must be nonempty for " + experiment);
    };
    if (experiment == "fn-scaling" || experiment == "gamma-area" || experiment == "fpp-variance" ||
        experiment == "segment-walk" || experiment == "cluster-tail" || experiment == "stabbing")
        need(!n_list.empty(), "n_list");
    if (experiment == "kappa") need(!r_list.empty(), "r_list");
    if (experiment == "path-density") {
        need(!m_list.empty(), "m_list");
        need(!a_list.empty(), "a_list");
    }
    if (experiment == "cover-animal") {
        need(!l_list.empty(), "l_list");
        need(!m_list.empty(), "m_list");
    }
    if (experiment == "good-box") need(!L_list.empty(), "L_list");
    if (experiment == "reimer") {
        if (n_list.size() < 2) throw ConfigError("reimer needs grids.n_list = w,h[,k]");
        const int w = n_list[0], h = n_list[1];
        const int k = n_list.size() > 2 ? n_list[2] : 1;
        if (w < 1 || h < 1 || k < 1 || k > w || k > h)
            throw ConfigError("reimer grid/Lambda sizes are inconsistent");
    }
}

ExperimentConfig default_config(const std::string& experiment) {
    ExperimentConfig cfg;
    cfg.experiment = experiment;
    if (experiment == "fn-scaling") {
        cfg.window = {-16, 16, -16, 16, 8};
        cfg.n_list = {2, 4, 6, 8};
        cfg.replicas = 200;
    } else if (experiment == "kappa") {
        cfg.window = {-16, 16, -16, 16, 8};
        cfg.r_list = {2, 4, 6};
        cfg.replicas = 300;
    } else if (experiment == "gamma-area") {
        cfg.window = {-24, 24, -24, 24, 10};
        cfg.n_list = {4, 8, 16};
        cfg.replicas = 200;
    } else if (experiment == "fpp-variance") {
        cfg.window = {-12, 76, -28, 28, 10};
        cfg.n_list = {8, 16, 32, 64};
        cfg.outer = 100;
        cfg.inner = 50;
        cfg.replicas = 100; // = outer
        cfg.nu = EdgeTimeDist{EdgeTimeDist::Kind::Exponential, 1.0, 0, 1, 1, 0};
    } else if (experiment == "segment-walk") {
        cfg.window = {-12, 44, -16, 16, 6};
        cfg.n_list = {8, 16, 32};
        cfg.replicas = 300;
    } else if (experiment == "cluster-tail") {
        cfg.window = {-12, 12, -12, 12, 4};
        cfg.n_list = {2, 5, 10};
        cfg.p = 0.05;
        cfg.replicas = 400;
    } else if (experiment == "good-box") {
        cfg.window = {-96, 96, -96, 96, 0};
        cfg.intensity.lambda = 4.0;
        cfg.L_list = {6, 10, 14};
        cfg.p = 0.9;
        cfg.replicas = 100;
    } else if (experiment == "path-density") {
        cfg.window = {-14, 14, -14, 14, 6};
        cfg.m_list = {5, 7, 9};
        cfg.a_list = {0.2};
        cfg.p = 0.9;
        cfg.replicas = 300;
    } else if (experiment == "stabbing") {
        cfg.window = {-6, 46, -6, 46, 6};
        cfg.n_list = {10, 20, 40};
        cfg.replicas = 100;
    } else if (experiment == "confinement") {
        cfg.window = {-81, 81, -81, 81, 0};
        cfg.r_scale = 54.0;
        cfg.intensity.lambda = 10.95; // per-sub-box mean at r = 54
        cfg.replicas = 500;
    } else if (experiment == "reimer") {
        cfg.n_list = {9, 9, 3}; // grid w, h, central Lambda block side
        cfg.p = 0.3;
        cfg.replicas = 100000;
    } else if (experiment == "cover-animal") {
        cfg.m_list = {40};
        cfg.l_list = {1, 2, 3};
        cfg.replicas = 1000;
    }
    return cfg;
}

std::string emit_config(const ExperimentConfig& c) {
    std::ostringstream os;
    os << "[experiment]\nname = " << c.experiment << "\n\n";
    os << "[window]\nx0 = " << fmt(c.window.x0) << "\nx1 = " << fmt(c.window.x1)
       << "\ny0 = " << fmt(c.window.y0) << "\ny1 = " << fmt(c.window.y1)
       << "\nbuffer = " << fmt(c.window.buffer) << "\n\n";
    os << "[intensity]\nkind = " << intensity_kind_name(c.intensity.kind)
       << "\nlambda = " << fmt(c.intensity.lambda) << "\namp = " << fmt(c.intensity.amp)
       << "\nfreq = " << fmt(c.intensity.freq) << "\n\n";
    os << "[nu]\nkind = " << nu_kind_name(c.nu.kind) << "\nrate = " << fmt(c.nu.rate)
       << "\nlo = " << fmt(c.nu.lo) << "\nhi = " << fmt(c.nu.hi) << "\nvalue = " << fmt(c.nu.value)
       << "\np0 = " << fmt(c.nu.p0) << "\n\n";
    os << "[f]\nkind = " << f_kind_name(c.f.kind) << "\nc = " << fmt(c.f.c) << "\n\n";
    os << "[grids]\nn_list = " << join(c.n_list) << "\nr_list = " << join(c.r_list)
       << "\nm_list = " << join(c.m_list) << "\nl_list = " << join(c.l_list)
       << "\nL_list = " << join(c.L_list) << "\na_list = " << join(c.a_list)
       << "\nr_scan = " << join(c.r_scan) << "\n\n";
    os << "[run]\np = " << fmt(c.p) << "\nr_scale = " << fmt(c.r_scale)
       << "\nshift_index = " << c.shift_index << "\nreplicas = " << c.replicas
       << "\nouter = " << c.outer << "\ninner = " << c.inner << "\nseed = " << c.seed
       << "\nwidth = " << c.width << "\nbeam_width = " << c.beam_width
       << "\nbudget = " << c.budget << "\nmc_samples = " << c.mc_samples
       << "\npairs_per_side = " << c.pairs_per_side << "\ntarget = " << fmt(c.target)
       << "\nout_dir = " << c.out_dir << "\n";
    return os.str();
}

namespace {

// First pass: extract experiment.name so partial configs start from that
// experiment's defaults.
std::string peek_experiment_name(const std::string& text) {
    std::istringstream is(text);
    std::string line, section;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (line.front() == '[') {
            section = line.substr(1, line.size() - 2);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        const auto kb = key.find_first_not_of(" \t"), ke = key.find_last_not_of(" \t");
        const auto vb = val.find_first_not_of(" \t"), ve = val.find_last_not_of(" \t");
        if (kb == std::string::npos || vb == std::string::npos) continue;
        if (section == "experiment" && key.substr(kb, ke - kb + 1) == "name")
            return val.substr(vb, ve - vb + 1);
    }
    return {};
}

} // namespace

ExperimentConfig parse_config(const std::string& text) {
    const std::string name = peek_experiment_name(text);
    ExperimentConfig c = name.empty() ? ExperimentConfig{} : default_config(name);
    std::istringstream is(text);
    std::string line, section;
    auto set = [&](const std::string& key, const std::string& val) {
        const std::string full = section + "." + key;
        if (full == "experiment.name") c.experiment = val;
        else if (full == "window.x0") c.window.x0 = parse_double(val, full);
        else if (full == "window.x1") c.window.x1 = parse_double(val, full);
        else if (full == "window.y0") c.window.y0 = parse_double(val, full);
        else if (full == "window.y1") c.window.y1 = parse_double(val, full);
        else if (full == "window.buffer") c.window.buffer = parse_double(val, full);
        else if (full == "intensity.kind") c.intensity.kind = intensity_kind_of(val);
        else if (full == "intensity.lambda") c.intensity.lambda = parse_double(val, full);
        else if (full == "intensity.amp") c.intensity.amp = parse_double(val, full);
        else if (full == "intensity.freq") c.intensity.freq = parse_double(val, full);
        else if (full == "nu.kind") c.nu.kind = nu_kind_of(val);
        else if (full == "nu.rate") c.nu.rate = parse_double(val, full);
        else if (full == "nu.lo") c.nu.lo = parse_double(val, full);
        else if (full == "nu.hi") c.nu.hi = parse_double(val, full);
        else if (full == "nu.value") c.nu.value = parse_double(val, full);
        else if (full == "nu.p0") c.nu.p0 = parse_double(val, full);
        else if (full == "f.kind") c.f.kind = f_kind_of(val);
        else if (full == "f.c") c.f.c = parse_double(val, full);
        else if (full == "grids.n_list") c.n_list = parse_list<int>(val, full, [](const std::string& s, const std::string& k) { return int(parse_long(s, k)); });
        else if (full == "grids.r_list") c.r_list = parse_list<int>(val, full, [](const std::string& s, const std::string& k) { return int(parse_long(s, k)); });
        else if (full == "grids.m_list") c.m_list = parse_list<int>(val, full, [](const std::string& s, const std::string& k) { return int(parse_long(s, k)); });
        else if (full == "grids.l_list") c.l_list = parse_list<int>(val, full, [](const std::string& s, const std::string& k) { return int(parse_long(s, k)); });
        else if (full == "grids.L_list") c.L_list = parse_list<int>(val, full, [](const std::string& s, const std::string& k) { return int(parse_long(s, k)); });
        else if (full == "grids.a_list") c.a_list = parse_list<double>(val, full, parse_double);
        else if (full == "grids.r_scan") c.r_scan = parse_list<double>(val, full, parse_double);
        else if (full == "run.p") c.p = parse_double(val, full);
        else if (full == "run.r_scale") c.r_scale = parse_double(val, full);
        else if (full == "run.shift_index") c.shift_index = int(parse_long(val, full));
        else if (full == "run.replicas") c.replicas = parse_long(val, full);
        else if (full == "run.outer") c.outer = parse_long(val, full);
        else if (full == "run.inner") c.inner = parse_long(val, full);
        else if (full == "run.seed") c.seed = parse_u64(val, full);
        else if (full == "run.width") c.width = int(parse_long(val, full));
        else if (full == "run.beam_width") c.beam_width = int(parse_long(val, full));
        else if (full == "run.budget") c.budget = parse_long(val, full);
        else if (full == "run.mc_samples") c.mc_samples = parse_long(val, full);
        else if (full == "run.pairs_per_side") c.pairs_per_side = int(parse_long(val, full));
        else if (full == "run.target") c.target = parse_double(val, full);
        else if (full == "run.out_dir") c.out_dir = val;
        else throw ConfigError("unknown key '" + full + "'");
    };
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("malformed section header: " + line);
            section = line.substr(1, line.size() - 2);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key = value: " + line);
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            const auto b2 = s.find_first_not_of(" \t");
            if (b2 == std::string::npos) {
                s.clear();
                return;
            }
            const auto e2 = s.find_last_not_of(" \t");
            s = s.substr(b2, e2 - b2 + 1);
        };
        trim(key);
        trim(val);
        set(key, val);
    }
    return c;
}

std::string emit_config_json(const ExperimentConfig& c) {
    nlohmann::ordered_json j;
    j["experiment"]["name"] = c.experiment;
    j["window"] = {{"x0", c.window.x0}, {"x1", c.window.x1}, {"y0", c.window.y0},
                   {"y1", c.window.y1}, {"buffer", c.window.buffer}};
    j["intensity"] = {{"kind", intensity_kind_name(c.intensity.kind)},
                      {"lambda", c.intensity.lambda},
                      {"amp", c.intensity.amp},
                      {"freq", c.intensity.freq}};
    j["nu"] = {{"kind", nu_kind_name(c.nu.kind)}, {"rate", c.nu.rate}, {"lo", c.nu.lo},
               {"hi", c.nu.hi},                   {"value", c.nu.value}, {"p0", c.nu.p0}};
    j["f"] = {{"kind", f_kind_name(c.f.kind)}, {"c", c.f.c}};
    j["grids"] = {{"n_list", c.n_list}, {"r_list", c.r_list}, {"m_list", c.m_list},
                  {"l_list", c.l_list}, {"L_list", c.L_list}, {"a_list", c.a_list},
                  {"r_scan", c.r_scan}};
    j["run"] = {{"p", c.p},
                {"r_scale", c.r_scale},
                {"shift_index", c.shift_index},
                {"replicas", c.replicas},
                {"outer", c.outer},
                {"inner", c.inner},
                {"seed", c.seed},
                {"width", c.width},
                {"beam_width", c.beam_width},
                {"budget", c.budget},
                {"mc_samples", c.mc_samples},
                {"pairs_per_side", c.pairs_per_side},
                {"target", c.target},
                {"out_dir", c.out_dir}};
    return j.dump(2) + "\n";
}

ExperimentConfig parse_config_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("json parse: ") + e.what());
    }
    ExperimentConfig c;
    try {
        const std::string name = j.at("experiment").at("name").get<std::string>();
        c = default_config(name);
        c.experiment = name;
        const auto& w = j.at("window");
        c.window = {w.at("x0"), w.at("x1"), w.at("y0"), w.at("y1"), w.at("buffer")};
        const auto& in = j.at("intensity");
        c.intensity.kind = intensity_kind_of(in.at("kind").get<std::string>());
        c.intensity.lambda = in.at("lambda");
        c.intensity.amp = in.at("amp");
        c.intensity.freq = in.at("freq");
        const auto& nu = j.at("nu");
        c.nu.kind = nu_kind_of(nu.at("kind").get<std::string>());
        c.nu.rate = nu.at("rate");
        c.nu.lo = nu.at("lo");
        c.nu.hi = nu.at("hi");
        c.nu.value = nu.at("value");
        c.nu.p0 = nu.at("p0");
        const auto& f = j.at("f");
        c.f.kind = f_kind_of(f.at("kind").get<std::string>());
        c.f.c = f.at("c");
        const auto& g = j.at("grids");
        c.n_list = g.at("n_list").get<std::vector<int>>();
        c.r_list = g.at("r_list").get<std::vector<int>>();
        c.m_list = g.at("m_list").get<std::vector<int>>();
        c.l_list = g.at("l_list").get<std::vector<int>>();
        c.L_list = g.at("L_list").get<std::vector<int>>();
        c.a_list = g.at("a_list").get<std::vector<double>>();
        c.r_scan = g.at("r_scan").get<std::vector<double>>();
        const auto& r = j.at("run");
        c.p = r.at("p");
        c.r_scale = r.at("r_scale");
        c.shift_index = r.at("shift_index");
        c.replicas = r.at("replicas");
        c.outer = r.at("outer");
        c.inner = r.at("inner");
        c.seed = r.at("seed").get<uint64_t>();
        c.width = r.at("width");
        c.beam_width = r.at("beam_width");
        c.budget = r.at("budget");
        c.mc_samples = r.at("mc_samples");
        c.pairs_per_side = r.at("pairs_per_side");
        c.target = r.at("target");
        c.out_dir = r.at("out_dir").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("missing or malformed field: ") + e.what());
    }
    return c;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return parse_config_json(ss.str());
    return parse_config(ss.str());
}

} // namespace pdlab
