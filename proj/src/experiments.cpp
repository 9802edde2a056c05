#include "pdlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "pdlab/boxes.hpp"
#include "pdlab/confinement.hpp"
#include "pdlab/errors.hpp"
#include "pdlab/fpp.hpp"
#include "pdlab/gamma.hpp"
#include "pdlab/percolation.hpp"
#include "pdlab/polyomino.hpp"
#include "pdlab/reimer.hpp"
#include "pdlab/sapaths.hpp"
#include "pdlab/stabbing.hpp"
#include "pdlab/stats.hpp"

namespace pdlab {

namespace {

std::string cell_n(int n) { return "n=" + std::to_string(n); }

std::shared_ptr<const Triangulation> build_instance(const ExperimentConfig& cfg, uint64_t seed) {
    const PointSet ps = sample_poisson(cfg.window, cfg.intensity, seed);
    if (ps.size() < 3) throw DegenerateInput("window too sparse for a triangulation");
    return std::make_shared<const Triangulation>(build_delaunay(ps));
}

int origin_root(const Triangulation& tri) { return locate(*tri.points, {0, 0}); }

// Uniform random self-avoiding path of exactly n edges from root, avoiding
// hull vertices so every edge is interior.
std::vector<int> random_interior_path(const Triangulation& tri, int root, int n, Rng& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<int> path{root};
        std::vector<int> used{root};
        bool ok = true;
        for (int step = 0; step < n && ok; ++step) {
            std::vector<int> cands;
            for (int u : tri.graph.adjacency[std::size_t(path.back())]) {
                if (tri.is_hull_vertex(u)) continue;
                if (std::find(used.begin(), used.end(), u) != used.end()) continue;
                cands.push_back(u);
            }
            if (cands.empty()) {
                ok = false;
                break;
            }
            const int pick = cands[rng.next_below(cands.size())];
            path.push_back(pick);
            used.push_back(pick);
        }
        if (ok) return path;
    }
    return {};
}

// ---- fn-scaling ------------------------------------------------------------

std::vector<RawRow> fn_scaling_replica(const ExperimentConfig& cfg, long rep, uint64_t seed) {
    std::vector<RawRow> rows;
    const auto tri = build_instance(cfg, seed);
    const int root = origin_root(*tri);
    for (int n : cfg.n_list) {
        try {
            const auto r = f_n_exact(tri->graph, cfg.f, root, n, cfg.budget);
            rows.push_back({rep, cell_n(n), "Fn_over_n", r.value / n, "exact"});
        } catch (const BudgetExceeded&) {
            const auto r = f_n_beam(tri->graph, cfg.f, root, n, cfg.beam_width);
            rows.push_back({rep, cell_n(n), "Fn_over_n", r.value / n, "beam"});
        }
    }
    return rows;
}

// ---- kappa ----------------------------------------------------------------

std::vector<RawRow> kappa_replica(const ExperimentConfig& cfg, long rep, uint64_t seed) {
    std::vector<RawRow> rows;
    const auto tri = build_instance(cfg, seed);
    const int root = origin_root(*tri);
    for (int r : cfg.r_list) {
        const long count = count_sa_paths(tri->graph, root, r, {}, cfg.budget);
        rows.push_back({rep, "r=" + std::to_string(r), "N_r", double(count), "exact"});
        if (count > 0)
            rows.push_back({rep, "r=" + std::to_string(r), "kappa_over_r",
                            std::log(double(count)) / double(r), "exact"});
    }
    return rows;
}

// ---- gamma-area -------------------------------------------------------------

std::vector<RawRow> gamma_area_replica(const ExperimentConfig& cfg, long rep, uint64_t seed) {
    std::vector<RawRow> rows;
    const auto tri = build_instance(cfg, seed);
    const int root = origin_root(*tri);
    Rng rng(derive_seed(seed, "path-pick", 0));
    for (int n : cfg.n_list) {
        const auto path = random_interior_path(*tri, root, n, rng);
        if (path.empty()) continue; // stuck walk; replica contributes nothing here
        const auto area = gamma_path_area(*tri, path, cfg.mc_samples, derive_seed(seed, "mc", n));
        rows.push_back({rep, cell_n(n), "area", area.area, "mc"});
        rows.push_back({rep, cell_n(n), "area_over_n", area.area / n, "mc"});
        rows.push_back({rep, cell_n(n), "hull_flagged", double(area.hull_edges_flagged), "exact"});
    }
    return rows;
}

// ---- fpp-variance -----------------------------------------------------------

std::vector<RawRow> fpp_variance_replica(const ExperimentConfig& cfg, long rep, uint64_t seed) {
    std::vector<RawRow> rows;
    const auto tri = build_instance(cfg, seed);
    const int source = origin_root(*tri);
    std::vector<int> targets;
    std::vector<std::vector<int>> walks;
    for (int n : cfg.n_list) {
        targets.push_back(locate(*tri->points, {double(n), 0}));
        walks.push_back(segment_walk(*tri, {0, 0}, {double(n), 0}));
    }
    for (long j = 0; j < cfg.inner; ++j) {
        const TimedGraph tg{tri, cfg.nu, derive_seed(seed, "times", uint64_t(j))};
        const ShortestPaths sp = dijkstra(tg, source);
        for (std::size_t k = 0; k < cfg.n_list.size(); ++k) {
            const std::string cell = cell_n(cfg.n_list[k]) + ";j=" + std::to_string(j);
            rows.push_back({rep, cell, "T", sp.dist[std::size_t(targets[k])], "exact"});
            double z = 0;
            for (std::size_t i = 0; i + 1 < walks[k].size(); ++i)
                z += tg.tau(walks[k][i], walks[k][i + 1]);
            rows.push_back({rep, cell, "Z", z, "exact"});
        }
    }
    return rows;
}

void fpp_variance_finalize(const ExperimentConfig& cfg, const std::vector<RawRow>& raw,
                           std::vector<SummaryRow>& summary, std::vector<std::string>& notes) {
    // Gather T and Z per (n, outer, inner).
    std::map<int, std::map<long, std::vector<double>>> T; // n -> outer -> samples
    long z_lt_t = 0;
    std::map<std::pair<long, std::string>, double> t_of; // (replica, cell) -> T
    for (const RawRow& row : raw)
        if (row.metric == "T") t_of[{row.replica, row.cell}] = row.value;
    std::map<int, std::vector<double>> z_over_n;
    for (const RawRow& row : raw) {
        const auto semi = row.cell.find(';');
        const int n = std::stoi(row.cell.substr(2, semi - 2));
        if (row.metric == "T") {
            T[n][row.replica].push_back(row.value);
        } else if (row.metric == "Z") {
            const double t = t_of.at({row.replica, row.cell});
            if (row.value < t - 1e-9) ++z_lt_t;
            z_over_n[n].push_back(row.value / n);
        }
    }

    std::vector<double> log_n, log_var;
    for (const auto& [n, groups] : T) {
        std::vector<std::vector<double>> mat;
        mat.reserve(groups.size());
        for (const auto& [i, xs] : groups) mat.push_back(xs);
        const std::size_t R = mat.size();
        const std::size_t S = mat.empty() ? 0 : mat[0].size();

        auto stats_of = [&](const std::vector<bool>& keep) {
            // pooled variance, within, corrected between
            std::vector<double> all, means;
            double within = 0;
            long kept = 0;
            for (std::size_t i = 0; i < R; ++i) {
                if (!keep[i]) continue;
                ++kept;
                double m = 0;
                for (double x : mat[i]) m += x;
                m /= double(S);
                means.push_back(m);
                within += sample_variance(mat[i]);
                for (double x : mat[i]) all.push_back(x);
            }
            within /= double(kept);
            const double pooled = sample_variance(all);
            const double between = sample_variance(means) - within / double(S);
            struct Out {
                double pooled, within, between;
            };
            return Out{pooled, within, between};
        };
        std::vector<bool> keep(R, true);
        const auto full = stats_of(keep);

        auto jack = [&](auto pick) {
            std::vector<double> leave(R);
            for (std::size_t i = 0; i < R; ++i) {
                keep[i] = false;
                leave[i] = pick(stats_of(keep));
                keep[i] = true;
            }
            double m = 0;
            for (double v : leave) m += v;
            m /= double(R);
            double ss = 0;
            for (double v : leave) ss += (v - m) * (v - m);
            return std::sqrt(ss * double(R - 1) / double(R));
        };
        const double se_pooled = jack([](const auto& s) { return s.pooled; });
        const double se_within = jack([](const auto& s) { return s.within; });
        const double se_between = jack([](const auto& s) { return s.between; });
        const double residual = full.pooled - full.within - full.between;
        const double se_residual =
            jack([](const auto& s) { return s.pooled - s.within - s.between; });

        const std::string cell = cell_n(n);
        summary.push_back({cell, "var_total", "mc", full.pooled, se_pooled, long(R * S)});
        summary.push_back({cell, "var_within", "mc", full.within, se_within, long(R)});
        summary.push_back({cell, "var_between", "mc", full.between, se_between, long(R)});
        summary.push_back({cell, "decomp_residual", "mc", residual, se_residual, long(R)});
        const auto zn = mean_se(z_over_n[n]);
        summary.push_back({cell, "Z_over_n", "mc", zn.mean, zn.se, long(zn.count)});
        log_n.push_back(std::log(double(n)));
        log_var.push_back(std::log(std::max(full.pooled, 1e-300)));
    }
    summary.push_back({"all", "Z_lt_T_count", "exact", double(z_lt_t), 0.0, 1});
    if (log_n.size() >= 2)
        summary.push_back({"fit", "var_loglog_slope", "mc", ols_slope(log_n, log_var), 0.0,
                           long(log_n.size())});
    if (z_lt_t > 0) notes.push_back("segment-walk dominance violated on " + std::to_string(z_lt_t) +
                                    " samples");
    (void)cfg;
}

// ---- segment-walk -----------------------------------------------------------

std::vector<RawRow> segment_walk_replica(const ExperimentConfig& cfg, long rep, uint64_t seed) {
    std::vector<RawRow> rows;
    const auto tri = build_instance(cfg, seed);
    const TimedGraph tg{tri, cfg.nu, derive_seed(seed, "times", 0)};
    for (int n : cfg.n_list) {
        const auto walk = segment_walk(*tri, {0, 0}, {double(n), 0});
        rows.push_back({rep, cell_n(n), "len_over_n", double(walk.size()) / n, "exact"});
        double z = 0;
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) z += tg.tau(walk[i], walk[i + 1]);
        rows.push_back({rep, cell_n(n), "Z_over_n", z / n, "exact"});
        const auto direct = passage_time(tg, {0, 0}, {double(n), 0});
        rows.push_back({rep, cell_n(n), "T_over_n", direct.time / n, "exact"});
        rows.push_back({rep, cell_n(n), "Z_minus_T", z - direct.time, "exact"});
    }
    return rows;
}

// ---- cluster-tail -----------------------------------------------------------

std::vector<RawRow> cluster_tail_replica(const ExperimentConfig& cfg, long rep, uint64_t seed) {
    const auto tri = build_instance(cfg, seed);
    const BondField bf = make_bond_field(tri, cfg.p, derive_seed(seed, "bond", 0));
    const auto cluster = open_cluster(bf);
    return {{rep, "all", "size", double(cluster.size()), "exact"}};
}

void cluster_tail_finalize(const ExperimentConfig& cfg, const std::vector<RawRow>& raw,
                           std::vector<SummaryRow>& summary, std::vector<std::string>& notes) {
    std::vector<double> sizes;
    for (const RawRow& row : raw)
        if (row.metric == "size") sizes.push_back(row.value);
    const long R = long(sizes.size());
    const auto sz = mean_se(sizes);
    summary.push_back({"all", "size", "mc", sz.mean, sz.se, long(sz.count)});
    std::vector<double> ns, logs;
    for (int n : cfg.n_list) {
        long hits = 0;
        for (double s : sizes) hits += (s >= n) ? 1 : 0;
        const double p = double(hits) / double(R);
        const auto ci = wilson(std::size_t(hits), std::size_t(R));
        const std::string cell = cell_n(n);
        summary.push_back({cell, "P_ge", "mc", p, std::sqrt(p * (1 - p) / double(R)), R});
        summary.push_back({cell, "wilson_lo", "mc", ci.lo, 0, R});
        summary.push_back({cell, "wilson_hi", "mc", ci.hi, 0, R});
        if (p > 0) {
            ns.push_back(double(n));
            logs.push_back(std::log(p));
        }
    }
    if (ns.size() >= 2)
        summary.push_back({"fit", "log_tail_slope", "mc", ols_slope(ns, logs), 0, long(ns.size())});
    else
        notes.push_back("tail too short for a rate fit");
}

// ---- good-box ---------------------------------------------------------------

std::vector<RawRow> good_box_replica(const ExperimentConfig& cfg, long rep, uint64_t seed) {
    std::vector<RawRow> rows;
    const auto tri = build_instance(cfg, seed);
    const BondField bf = make_bond_field(tri, cfg.p, derive_seed(seed, "bond", 0));
    for (int L : cfg.L_list) {
        const bool y = good_box_Y(bf, double(L), {0, 0});
        rows.push_back({rep, "L=" + std::to_string(L), "Y", y ? 1.0 : 0.0, "exact"});
    }
    return rows;
}

// ---- path-density -----------------------------------------------------------

std::vector<RawRow> path_density_replica(const ExperimentConfig& cfg, long rep, uint64_t seed) {
    std::vector<RawRow> rows;
    const auto tri = build_instance(cfg, seed);
    const BondField bf = make_bond_field(tri, cfg.p, derive_seed(seed, "bond", 0));
    for (double a : cfg.a_list)
        for (int m : cfg.m_list) {
            const bool ex = sparse_open_path_exists(bf, m, a, cfg.budget);
            char cell[64];
            std::snprintf(cell, sizeof(cell), "a=%g;m=%d", a, m);
            rows.push_back({rep, cell, "exists", ex ? 1.0 : 0.0, "exact"});
        }
    return rows;
}

// ---- stabbing ---------------------------------------------------------------

std::vector<RawRow> stabbing_replica(const ExperimentConfig& cfg, long rep, uint64_t seed) {
    std::vector<RawRow> rows;
    const auto tri = build_instance(cfg, seed);
    for (int n : cfg.n_list) {
        const auto res = stabbing_number(*tri, n, cfg.pairs_per_side);
        rows.push_back({rep, cell_n(n), "stab", double(res.stab), "mc-lower-bound"});
        rows.push_back({rep, cell_n(n), "stab_over_n", double(res.stab) / n, "mc-lower-bound"});
    }
    return rows;
}

// ---- confinement ------------------------------------------------------------

std::vector<RawRow> confinement_replica(const ExperimentConfig& cfg, long rep, uint64_t seed) {
    const double r = cfg.r_scale;
    PointSet ps = sample_poisson(cfg.window, cfg.intensity, seed);
    // Thin the center box to force a bad cluster there: the confinement
    // statement is deterministic, so a biased ensemble only makes the test
    // stronger and non-vacuous.
    Rng rng(derive_seed(seed, "thin", 0));
    const double keep = rng.uniform(0.0, 0.4);
    const BoxGrid grid{r, cfg.shift_index};
    const Rect center = grid.box_rect({0, 0});
    std::vector<Vec2> kept;
    kept.reserve(ps.points.size());
    for (const Vec2& p : ps.points) {
        const bool inside =
            p.x >= center.x0 && p.x < center.x1 && p.y >= center.y0 && p.y < center.y1;
        if (inside && rng.next_unit() > keep) continue;
        kept.push_back(p);
    }
    ps.points = std::move(kept);
    const auto tri = build_delaunay(ps);
    const SiteField field = site_field(ps, r, cfg.shift_index, SiteRect{-1, 1, -1, 1});
    const auto bad = check_cell_confinement(tri, bad_clusters(field, Label::Bad));
    const auto ugly = check_cell_confinement(tri, bad_clusters(field, Label::Ugly));
    std::vector<RawRow> rows;
    rows.push_back({rep, "all", "violations", double(bad.violations.size() + ugly.violations.size()),
                    "exact"});
    rows.push_back({rep, "all", "clusters_checked",
                    double(bad.clusters_checked + ugly.clusters_checked), "exact"});
    rows.push_back({rep, "all", "cells_meeting_im",
                    double(bad.cells_meeting_im + ugly.cells_meeting_im), "exact"});
    rows.push_back({rep, "all", "skipped_boundary",
                    double(bad.clusters_skipped_boundary + ugly.clusters_skipped_boundary),
                    "exact"});
    return rows;
}

// ---- reimer -----------------------------------------------------------------

std::vector<GridSite> reimer_lambda(const ExperimentConfig& cfg) {
    const int w = cfg.n_list.at(0);
    const int h = cfg.n_list.at(1);
    const int k = cfg.n_list.size() > 2 ? cfg.n_list[2] : 1;
    std::vector<GridSite> lambda;
    const int x0 = (w - k) / 2, y0 = (h - k) / 2;
    for (int y = y0; y < y0 + k; ++y)
        for (int x = x0; x < x0 + k; ++x) lambda.push_back({x, y});
    return lambda;
}

std::vector<RawRow> reimer_replica(const ExperimentConfig& cfg, long rep, uint64_t seed) {
    const int w = cfg.n_list.at(0);
    const int h = cfg.n_list.at(1);
    const auto lambda = reimer_lambda(cfg);
    const LatticeField f = random_lattice_field(w, h, cfg.p, derive_seed(seed, "field", 0));
    const LatticeClusters cl = lattice_clusters(f);
    std::set<int> distinct;
    std::vector<RawRow> rows;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const int id = cl.id(f, lambda[i].x, lambda[i].y);
        if (id >= 0) distinct.insert(id);
        rows.push_back({rep, "all", "site" + std::to_string(i),
                        cfg.f.at_size(id >= 0 ? cl.sizes[std::size_t(id)] : 0), "mc"});
    }
    double lhs = 1.0;
    for (int id : distinct) lhs *= cfg.f.at_size(cl.sizes[std::size_t(id)]);
    rows.push_back({rep, "all", "lhs", lhs, "mc"});
    return rows;
}

void reimer_finalize(const ExperimentConfig& cfg, const std::vector<RawRow>& raw,
                     std::vector<SummaryRow>& summary, std::vector<std::string>& notes) {
    const auto lambda = reimer_lambda(cfg);
    const std::size_t K = lambda.size();
    std::vector<std::vector<double>> site(K);
    std::vector<double> lhs_samples;
    for (const RawRow& row : raw) {
        if (row.metric == "lhs") lhs_samples.push_back(row.value);
        if (row.metric.rfind("site", 0) == 0)
            site[std::size_t(std::stoi(row.metric.substr(4)))].push_back(row.value);
    }
    const auto lhs = mean_se(lhs_samples);
    summary.push_back({"all", "lhs", "mc", lhs.mean, lhs.se, long(lhs.count)});
    const std::size_t R = site.empty() ? 0 : site[0].size();
    std::vector<double> sums(K, 0.0);
    for (std::size_t k = 0; k < K; ++k)
        for (double v : site[k]) sums[k] += v;
    double rhs = 1.0;
    for (std::size_t k = 0; k < K; ++k) rhs *= sums[k] / double(R);
    // Delete-one jackknife of the product of means.
    std::vector<double> leave(R);
    for (std::size_t i = 0; i < R; ++i) {
        double prod = 1.0;
        for (std::size_t k = 0; k < K; ++k) prod *= (sums[k] - site[k][i]) / double(R - 1);
        leave[i] = prod;
    }
    double lm = 0;
    for (double v : leave) lm += v;
    lm /= double(R);
    double ss = 0;
    for (double v : leave) ss += (v - lm) * (v - lm);
    const double rhs_se = std::sqrt(ss * double(R - 1) / double(R));
    summary.push_back({"all", "rhs", "mc", rhs, rhs_se, long(R)});

    const int w = cfg.n_list.at(0), h = cfg.n_list.at(1);
    if (w * h <= 22) {
        const auto probe = reimer_probe(w, h, cfg.p, cfg.f, lambda, 2, cfg.seed);
        summary.push_back({"all", "exact_lhs", "exact", probe.exact_lhs, 0, 1});
        summary.push_back({"all", "exact_rhs", "exact", probe.exact_rhs, 0, 1});
    } else {
        notes.push_back("grid too large for exact enumeration");
    }
}

// ---- cover-animal -----------------------------------------------------------

GridAnimal random_animal(Rng& rng, int m) {
    std::set<GridSite> sites{{0, 0}};
    std::vector<GridSite> list{{0, 0}};
    while (int(sites.size()) < m) {
        const GridSite base = list[rng.next_below(list.size())];
        const int dx = int(rng.next_below(3)) - 1;
        const int dy = int(rng.next_below(3)) - 1;
        if (dx == 0 && dy == 0) continue;
        const GridSite nb{base.x + dx, base.y + dy};
        if (sites.insert(nb).second) list.push_back(nb);
    }
    GridAnimal a;
    a.sites.assign(sites.begin(), sites.end());
    a.root = {0, 0};
    return a;
}

std::vector<RawRow> cover_animal_replica(const ExperimentConfig& cfg, long rep, uint64_t seed) {
    Rng rng(seed);
    const int m_max = cfg.m_list.at(0);
    const int m = 1 + int(rng.next_below(uint64_t(m_max)));
    const GridAnimal a = random_animal(rng, m);
    std::vector<RawRow> rows;
    for (int l : cfg.l_list) {
        const auto xs = cover_animal(a, l);
        const bool bound_ok = double(xs.size()) <= 1.0 + double(2 * m - 2) / double(l) + 1e-9;
        bool adjacency_ok = xs[0] == GridSite{0, 0};
        for (std::size_t i = 0; i + 1 < xs.size(); ++i)
            adjacency_ok = adjacency_ok && std::abs(xs[i + 1].x - xs[i].x) <= 1 &&
                           std::abs(xs[i + 1].y - xs[i].y) <= 1;
        bool cover_ok = true;
        for (const GridSite& s : a.sites) {
            const GridSite t{s.x - a.root.x, s.y - a.root.y};
            bool covered = false;
            for (const GridSite& x : xs)
                if (std::abs(t.x - l * x.x) <= 2 * l && std::abs(t.y - l * x.y) <= 2 * l) {
                    covered = true;
                    break;
                }
            cover_ok = cover_ok && covered;
        }
        const std::string cell = "l=" + std::to_string(l);
        rows.push_back({rep, cell, "bound_ok", bound_ok ? 1.0 : 0.0, "exact"});
        rows.push_back({rep, cell, "cover_ok", cover_ok ? 1.0 : 0.0, "exact"});
        rows.push_back({rep, cell, "adjacency_ok", adjacency_ok ? 1.0 : 0.0, "exact"});
    }
    return rows;
}

} // namespace

std::vector<SummaryRow> summarize_rows(const std::vector<RawRow>& raw) {
    // Group by (cell, metric, method) in first-appearance order.
    std::vector<SummaryRow> out;
    std::map<std::tuple<std::string, std::string, std::string>, std::size_t> index;
    std::vector<std::vector<double>> samples;
    for (const RawRow& row : raw) {
        const auto key = std::make_tuple(row.cell, row.metric, row.method);
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, out.size());
            out.push_back({row.cell, row.metric, row.method, 0, 0, 0});
            samples.emplace_back();
            it = index.find(key);
        }
        samples[it->second].push_back(row.value);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto ms = mean_se(samples[i]);
        out[i].mean = ms.mean;
        out[i].se = ms.se;
        out[i].count = long(ms.count);
    }
    return out;
}

const ExperimentDef& experiment_def(const std::string& name) {
    static const std::map<std::string, ExperimentDef> defs = {
        {"fn-scaling", {fn_scaling_replica, nullptr}},
        {"kappa", {kappa_replica, nullptr}},
        {"gamma-area", {gamma_area_replica, nullptr}},
        {"fpp-variance", {fpp_variance_replica, fpp_variance_finalize}},
        {"segment-walk", {segment_walk_replica, nullptr}},
        {"cluster-tail", {cluster_tail_replica, cluster_tail_finalize}},
        {"good-box", {good_box_replica, nullptr}},
        {"path-density", {path_density_replica, nullptr}},
        {"stabbing", {stabbing_replica, nullptr}},
        {"confinement", {confinement_replica, nullptr}},
        {"reimer", {reimer_replica, reimer_finalize}},
        {"cover-animal", {cover_animal_replica, nullptr}},
    };
    const auto it = defs.find(name);
    if (it == defs.end()) throw ConfigError("unknown experiment '" + name + "'");
    return it->second;
}

} // namespace pdlab
