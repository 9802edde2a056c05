#include "pdlab/boxes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "pdlab/errors.hpp"

namespace pdlab {

int alpha_d(int d) {
    if (d < 1) throw InvalidParameter("dimension must be >= 1");
    int s = 0;
    while (s * s < d) ++s; // ceil(sqrt(d)) for integer d
    return 2 * (4 * s + 1);
}

GridSite BoxGrid::shift_vector(int i) {
    static constexpr GridSite f[kShifts] = {{0, 0},  {-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                            {1, 0},  {-1, 1},  {0, 1},  {1, 1}};
    if (i < 1 || i > kShifts) throw InvalidParameter("shift index must be in 1..9");
    return f[i - 1];
}

void BoxGrid::validate() const {
    if (!(r > 0)) throw InvalidParameter("grid scale r must be > 0");
    shift_vector(shift_index);
}

namespace {

void require_box_in_window(const PointSet& ps, const BoxGrid& grid, GridSite z) {
    const Rect b = grid.box_rect(z);
    const Window& w = ps.window;
    if (b.x0 < w.x0 || b.x1 > w.x1 || b.y0 < w.y0 || b.y1 > w.y1)
        throw OutOfWindow("box exceeds the sampled window; occupancy would be undefined");
}

// Sub-cell index of p within box z at k divisions per axis, or -1 if p is
// outside the half-open box.
int subcell_of(const BoxGrid& grid, GridSite z, int k, Vec2 p) {
    const Rect b = grid.box_rect(z);
    if (p.x < b.x0 || p.x >= b.x1 || p.y < b.y0 || p.y >= b.y1) return -1;
    int cx = int((p.x - b.x0) / grid.r * k);
    int cy = int((p.y - b.y0) / grid.r * k);
    cx = std::clamp(cx, 0, k - 1);
    cy = std::clamp(cy, 0, k - 1);
    return cy * k + cx;
}

} // namespace

bool classify_box(const PointSet& ps, const BoxGrid& grid, GridSite z, BoxMode mode, int d) {
    grid.validate();
    require_box_in_window(ps, grid, z);
    const int alpha = alpha_d(d);
    const int k = mode == BoxMode::Nice ? alpha : 3 * alpha;
    std::vector<uint8_t> occupied(std::size_t(k) * std::size_t(k), 0);
    long remaining = long(k) * long(k);
    for (const Vec2& p : ps.points) {
        const int c = subcell_of(grid, z, k, p);
        if (c < 0) continue;
        if (!occupied[std::size_t(c)]) {
            occupied[std::size_t(c)] = 1;
            if (--remaining == 0) return true;
        }
    }
    return remaining == 0;
}

SiteField site_field(const PointSet& ps, double r, int shift_index, const SiteRect& rect, int d) {
    SiteField f;
    f.grid = BoxGrid{r, shift_index};
    f.grid.validate();
    f.rect = rect;
    if (rect.width() <= 0 || rect.height() <= 0) throw InvalidParameter("empty site rectangle");
    require_box_in_window(ps, f.grid, {rect.x0, rect.y0});
    require_box_in_window(ps, f.grid, {rect.x1, rect.y1});
    require_box_in_window(ps, f.grid, {rect.x0, rect.y1});
    require_box_in_window(ps, f.grid, {rect.x1, rect.y0});

    const int alpha = alpha_d(d);
    const int kg = 3 * alpha; // good-resolution divisions per axis
    const long cells_per_site = long(kg) * long(kg);
    const long sites = rect.count();
    // One bit per good-resolution sub-cell.
    const std::size_t words_per_site = std::size_t((cells_per_site + 63) / 64);
    std::vector<uint64_t> occ(std::size_t(sites) * words_per_site, 0);

    for (const Vec2& p : ps.points) {
        const GridSite z = f.grid.site_of(p);
        if (!rect.contains(z)) continue;
        const int c = subcell_of(f.grid, z, kg, p);
        if (c < 0) continue; // boundary rounding disagreement; skip
        const std::size_t base = f.index(z) * words_per_site;
        occ[base + std::size_t(c / 64)] |= uint64_t(1) << (c % 64);
    }

    f.nice_flags.assign(std::size_t(sites), 0);
    f.good_flags.assign(std::size_t(sites), 0);
    for (long s = 0; s < sites; ++s) {
        const std::size_t base = std::size_t(s) * words_per_site;
        bool good = true;
        for (long c = 0; c < cells_per_site && good; ++c)
            good = (occ[base + std::size_t(c / 64)] >> (c % 64)) & 1;
        f.good_flags[std::size_t(s)] = good ? 1 : 0;
        // Nice derives from the same occupancy: a coarse alpha-cell is
        // occupied iff any of its 3x3 fine cells is.
        bool nice = true;
        for (int cy = 0; cy < alpha && nice; ++cy) {
            for (int cx = 0; cx < alpha && nice; ++cx) {
                bool any = false;
                for (int fy = 0; fy < 3 && !any; ++fy)
                    for (int fx = 0; fx < 3 && !any; ++fx) {
                        const int c = (cy * 3 + fy) * kg + (cx * 3 + fx);
                        any = (occ[base + std::size_t(c / 64)] >> (c % 64)) & 1;
                    }
                nice = any;
            }
        }
        f.nice_flags[std::size_t(s)] = nice ? 1 : 0;
    }
    return f;
}

BadClusterSet bad_clusters(const SiteField& field, Label which) {
    BadClusterSet out;
    out.grid = field.grid;
    out.label = which;

    const int w = field.rect.width();
    const int h = field.rect.height();
    std::vector<int> comp(std::size_t(w) * std::size_t(h), -1);
    std::vector<GridSite> stack;
    int next_comp = 0;
    std::vector<std::vector<GridSite>> comps;
    for (int y = field.rect.y0; y <= field.rect.y1; ++y) {
        for (int x = field.rect.x0; x <= field.rect.x1; ++x) {
            const GridSite z{x, y};
            if (!field.marked(z, which) || comp[field.index(z)] >= 0) continue;
            comps.emplace_back();
            stack.assign(1, z);
            comp[field.index(z)] = next_comp;
            while (!stack.empty()) {
                const GridSite s = stack.back();
                stack.pop_back();
                comps.back().push_back(s);
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        const GridSite nb{s.x + dx, s.y + dy};
                        if (!field.rect.contains(nb)) continue;
                        if (!field.marked(nb, which) || comp[field.index(nb)] >= 0) continue;
                        comp[field.index(nb)] = next_comp;
                        stack.push_back(nb);
                    }
            }
            ++next_comp;
        }
    }
    for (auto& sites : comps) {
        BadCluster c;
        std::sort(sites.begin(), sites.end());
        c.touches_rect_boundary = false;
        for (const GridSite& s : sites)
            if (field.rect.on_boundary(s)) c.touches_rect_boundary = true;
        c.sites = std::move(sites);
        out.clusters.push_back(std::move(c));
    }
    std::sort(out.clusters.begin(), out.clusters.end(),
              [](const BadCluster& a, const BadCluster& b) { return a.sites[0] < b.sites[0]; });
    return out;
}

bool im_contains(const BoxGrid& grid, const BadCluster& c, Vec2 p) {
    for (const GridSite& z : c.sites) {
        const Rect b = grid.box_rect(z);
        if (p.x >= b.x0 && p.x < b.x1 && p.y >= b.y0 && p.y < b.y1) return true;
    }
    return false;
}

bool ad_contains(const BoxGrid& grid, const BadCluster& c, Vec2 p) {
    for (const GridSite& z : c.sites) {
        const Vec2 ctr = grid.box_center(z);
        if (std::fabs(p.x - ctr.x) < grid.r && std::fabs(p.y - ctr.y) < grid.r) return true;
    }
    return false;
}

bool animal_connected(const GridAnimal& a) {
    if (a.sites.empty()) return false;
    std::set<GridSite> todo(a.sites.begin(), a.sites.end());
    std::vector<GridSite> stack{*todo.begin()};
    todo.erase(todo.begin());
    while (!stack.empty()) {
        const GridSite s = stack.back();
        stack.pop_back();
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                const GridSite nb{s.x + dx, s.y + dy};
                auto it = todo.find(nb);
                if (it != todo.end()) {
                    todo.erase(it);
                    stack.push_back(nb);
                }
            }
    }
    return todo.empty();
}

GridAnimal animal_of(const std::vector<Vec2>& points,
                     const std::vector<std::pair<Vec2, Vec2>>& segments, double r,
                     int shift_index) {
    if (points.empty() && segments.empty()) throw InvalidParameter("empty shape");
    BoxGrid grid{r, shift_index};
    grid.validate();
    std::set<GridSite> sites;
    for (const Vec2& p : points) sites.insert(grid.site_of(p));
    for (const auto& [a, b] : segments) {
        sites.insert(grid.site_of(a));
        sites.insert(grid.site_of(b));
        // Split the segment at every grid line it crosses and classify the
        // midpoint of each piece.
        std::vector<double> ts{0.0, 1.0};
        const Vec2 o = grid.offset();
        auto add_axis_crossings = [&](double pa, double pb, double shift) {
            if (pa == pb) return;
            const double lo = std::min(pa, pb), hi = std::max(pa, pb);
            // Grid lines at shift + r*(k + 1/2).
            const long k0 = long(std::ceil((lo - shift) / r - 0.5));
            for (long k = k0;; ++k) {
                const double line = shift + r * (double(k) + 0.5);
                if (line >= hi) break;
                if (line > lo) ts.push_back((line - pa) / (pb - pa));
            }
        };
        add_axis_crossings(a.x, b.x, o.x);
        add_axis_crossings(a.y, b.y, o.y);
        std::sort(ts.begin(), ts.end());
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
            const double tm = 0.5 * (ts[i] + ts[i + 1]);
            sites.insert(grid.site_of(a + tm * (b - a)));
        }
    }
    GridAnimal out;
    out.sites.assign(sites.begin(), sites.end());
    out.root = out.sites.front();
    return out;
}

std::vector<GridSite> cover_animal(const GridAnimal& a, int l) {
    if (l < 1) throw InvalidParameter("cover scale l must be >= 1");
    if (a.sites.empty()) throw InvalidParameter("empty animal");
    if (!animal_connected(a)) throw InvalidParameter("animal is not connected");

    // Translate so the root sits at the origin.
    std::set<GridSite> sites;
    for (const GridSite& s : a.sites) sites.insert({s.x - a.root.x, s.y - a.root.y});
    if (!sites.count({0, 0})) throw InvalidParameter("animal does not contain its root");

    // DFS spanning tree Euler tour from the root: every tree edge is walked
    // down and back up, so the tour has 2(m-1) steps.
    std::map<GridSite, std::vector<GridSite>> tree;
    std::set<GridSite> seen{{0, 0}};
    std::vector<GridSite> tour{{0, 0}};
    struct Frame {
        GridSite site;
        int next_dir = 0;
    };
    std::vector<Frame> stack{{GridSite{0, 0}, 0}};
    static constexpr int kDx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
    static constexpr int kDy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
    while (!stack.empty()) {
        Frame& f = stack.back();
        bool descended = false;
        while (f.next_dir < 8) {
            const int dir = f.next_dir++;
            const GridSite nb{f.site.x + kDx[dir], f.site.y + kDy[dir]};
            if (!sites.count(nb) || seen.count(nb)) continue;
            seen.insert(nb);
            tour.push_back(nb);
            stack.push_back({nb, 0});
            descended = true;
            break;
        }
        if (!descended) {
            stack.pop_back();
            if (!stack.empty()) tour.push_back(stack.back().site);
        }
    }

    auto floor_div = [](int v, int q) { return v >= 0 ? v / q : -((-v + q - 1) / q); };
    std::vector<GridSite> xs;
    for (std::size_t i = 0; i < tour.size(); i += std::size_t(l))
        xs.push_back({floor_div(tour[i].x, l), floor_div(tour[i].y, l)});
    return xs;
}

} // namespace pdlab
