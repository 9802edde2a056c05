#include "pdlab/pointset.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace pdlab {

namespace {

uint64_t point_key(Vec2 p) { return hash_combine(double_bits(p.x), double_bits(p.y)); }

} // namespace

PointSet sample_poisson(const Window& window, const IntensityModel& intensity, uint64_t seed) {
    window.validate();
    intensity.validate();

    PointSet ps;
    ps.window = window;
    ps.seed = seed;
    ps.intensity = intensity;

    Rng rng(derive_seed(seed, "poisson-sample", 0));
    const double dominating = intensity.c_mu() * intensity.lambda;
    const double mean = dominating * window.area();
    const long count = rng.poisson(mean);
    ps.points.reserve(std::size_t(count));

    std::unordered_set<uint64_t> seen;
    seen.reserve(std::size_t(count) * 2);
    long produced = 0;
    while (produced < count) {
        Vec2 p{rng.uniform(window.x0, window.x1), rng.uniform(window.y0, window.y1)};
        ++produced;
        if (intensity.kind == IntensityModel::Kind::Modulated) {
            // Thinning: keep with probability density / dominating rate.
            if (rng.next_unit() >= intensity.density(p) / dominating) continue;
        }
        // Exact duplicates have probability zero; redraw rather than admit one
        // so that point identity by coordinates is unambiguous.
        if (!seen.insert(point_key(p)).second) {
            --produced;
            continue;
        }
        ps.points.push_back(p);
    }
    return ps;
}

int locate(const PointSet& ps, Vec2 x) {
    if (ps.points.empty()) throw EmptyConfiguration("locate on empty point set");
    int best = 0;
    double best_d = dist2(ps.points[0], x);
    for (std::size_t i = 1; i < ps.points.size(); ++i) {
        const double d = dist2(ps.points[i], x);
        if (d < best_d) {
            best_d = d;
            best = int(i);
        }
    }
    return best;
}

namespace {

std::string fmt_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

} // namespace

void write_pointset(std::ostream& os, const PointSet& ps) {
    os << "# window " << fmt_double(ps.window.x0) << ' ' << fmt_double(ps.window.x1) << ' '
       << fmt_double(ps.window.y0) << ' ' << fmt_double(ps.window.y1) << " buffer "
       << fmt_double(ps.window.buffer) << " seed " << ps.seed << '\n';
    for (const Vec2& p : ps.points) os << fmt_double(p.x) << ' ' << fmt_double(p.y) << '\n';
}

PointSet read_pointset(std::istream& is) {
    PointSet ps;
    std::string line;
    if (!std::getline(is, line)) throw InvalidParameter("point set file is empty");
    {
        std::istringstream hs(line);
        std::string hash, word;
        hs >> hash >> word;
        if (hash != "#" || word != "window") throw InvalidParameter("missing point set header");
        std::string buffer_kw, seed_kw;
        if (!(hs >> ps.window.x0 >> ps.window.x1 >> ps.window.y0 >> ps.window.y1 >> buffer_kw >>
              ps.window.buffer >> seed_kw >> ps.seed) ||
            buffer_kw != "buffer" || seed_kw != "seed")
            throw InvalidParameter("malformed point set header");
    }
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Vec2 p;
        if (!(ls >> p.x >> p.y)) throw InvalidParameter("malformed point line: " + line);
        ps.points.push_back(p);
    }
    return ps;
}

void write_pointset_file(const std::string& path, const PointSet& ps) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open for write: " + path);
    write_pointset(os, ps);
}

PointSet read_pointset_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open for read: " + path);
    return read_pointset(is);
}

} // namespace pdlab
