#include "pdlab/reimer.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pdlab/errors.hpp"
#include "pdlab/rng.hpp"
#include "pdlab/stats.hpp"

namespace pdlab {

LatticeField random_lattice_field(int w, int h, double p, uint64_t seed) {
    if (w < 1 || h < 1) throw InvalidParameter("grid must be nonempty");
    if (!(p >= 0 && p <= 1)) throw InvalidParameter("p must be in [0,1]");
    LatticeField f{w, h, {}};
    f.bad.resize(std::size_t(w) * std::size_t(h));
    Rng rng(seed);
    for (auto& b : f.bad) b = rng.next_unit() < p ? 1 : 0;
    return f;
}

LatticeClusters lattice_clusters(const LatticeField& f) {
    LatticeClusters out;
    out.comp.assign(f.bad.size(), -1);
    std::vector<std::pair<int, int>> stack;
    for (int y = 0; y < f.h; ++y) {
        for (int x = 0; x < f.w; ++x) {
            const std::size_t idx = std::size_t(y) * std::size_t(f.w) + std::size_t(x);
            if (!f.bad[idx] || out.comp[idx] >= 0) continue;
            const int id = int(out.sizes.size());
            out.sizes.push_back(0);
            out.comp[idx] = id;
            stack.assign(1, {x, y});
            while (!stack.empty()) {
                const auto [cx, cy] = stack.back();
                stack.pop_back();
                ++out.sizes[std::size_t(id)];
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        const int nx = cx + dx, ny = cy + dy;
                        if (nx < 0 || nx >= f.w || ny < 0 || ny >= f.h) continue;
                        const std::size_t ni = std::size_t(ny) * std::size_t(f.w) + std::size_t(nx);
                        if (!f.bad[ni] || out.comp[ni] >= 0) continue;
                        out.comp[ni] = id;
                        stack.push_back({nx, ny});
                    }
            }
        }
    }
    return out;
}

namespace {

struct SampleValues {
    double lhs = 0.0;
    std::vector<double> per_site; // f(|Cl(x)|) per Lambda site
};

SampleValues evaluate(const LatticeField& f, const LatticeClusters& cl, const WeightFn& weight,
                      const std::vector<GridSite>& lambda) {
    SampleValues out;
    std::set<int> distinct;
    out.per_site.reserve(lambda.size());
    for (const GridSite& z : lambda) {
        const int id = cl.id(f, z.x, z.y);
        if (id >= 0) distinct.insert(id);
        out.per_site.push_back(weight.at_size(id >= 0 ? cl.sizes[std::size_t(id)] : 0));
    }
    out.lhs = 1.0;
    for (int id : distinct) out.lhs *= weight.at_size(cl.sizes[std::size_t(id)]);
    return out;
}

} // namespace

ReimerProbe reimer_probe(int w, int h, double p, const WeightFn& weight,
                         const std::vector<GridSite>& lambda, long replicas, uint64_t seed) {
    if (replicas < 2) throw InvalidParameter("need >= 2 replicas");
    for (const GridSite& z : lambda)
        if (z.x < 0 || z.x >= w || z.y < 0 || z.y >= h)
            throw InvalidParameter("Lambda site outside the grid");

    std::vector<double> lhs_samples;
    std::vector<std::vector<double>> site_samples(lambda.size());
    for (long rep = 0; rep < replicas; ++rep) {
        const LatticeField f = random_lattice_field(w, h, p, derive_seed(seed, "reimer", uint64_t(rep)));
        const LatticeClusters cl = lattice_clusters(f);
        const SampleValues vals = evaluate(f, cl, weight, lambda);
        lhs_samples.push_back(vals.lhs);
        for (std::size_t i = 0; i < lambda.size(); ++i) site_samples[i].push_back(vals.per_site[i]);
    }

    ReimerProbe out;
    const MeanSe lhs = mean_se(lhs_samples);
    out.lhs = lhs.mean;
    out.lhs_se = lhs.se;

    auto rhs_of = [&](const std::vector<bool>& keep) {
        double prod = 1.0;
        for (const auto& samples : site_samples) {
            double m = 0;
            long cnt = 0;
            for (std::size_t i = 0; i < samples.size(); ++i)
                if (keep[i]) {
                    m += samples[i];
                    ++cnt;
                }
            prod *= m / double(cnt);
        }
        return prod;
    };
    std::vector<bool> all(std::size_t(replicas), true);
    out.rhs = rhs_of(all);
    out.rhs_se = jackknife_se(std::size_t(replicas), rhs_of);

    // Exact enumeration on small grids.
    const int cells = w * h;
    if (cells <= 22) {
        out.exact_available = true;
        double elhs = 0.0;
        std::vector<double> esite(lambda.size(), 0.0);
        LatticeField f{w, h, std::vector<uint8_t>(std::size_t(cells), 0)};
        for (long mask = 0; mask < (1L << cells); ++mask) {
            int ones = 0;
            for (int c = 0; c < cells; ++c) {
                const int bit = int((mask >> c) & 1);
                f.bad[std::size_t(c)] = uint8_t(bit);
                ones += bit;
            }
            const double weight_cfg = std::pow(p, ones) * std::pow(1 - p, cells - ones);
            if (weight_cfg == 0.0) continue;
            const LatticeClusters cl = lattice_clusters(f);
            const SampleValues vals = evaluate(f, cl, weight, lambda);
            elhs += weight_cfg * vals.lhs;
            for (std::size_t i = 0; i < lambda.size(); ++i)
                esite[i] += weight_cfg * vals.per_site[i];
        }
        out.exact_lhs = elhs;
        out.exact_rhs = 1.0;
        for (double e : esite) out.exact_rhs *= e;
    }
    return out;
}

} // namespace pdlab
