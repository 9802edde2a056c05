#pragma once

#include <cstdint>
#include <vector>

#include "pdlab/geom_util.hpp"
#include "pdlab/pointset.hpp"
#include "pdlab/vec.hpp"

namespace pdlab {

// alpha_d = 2 (4 ceil(sqrt(d)) + 1); the sub-box granularity of the nice/good
// box classification. Kept d-general even though the geometry here is planar.
int alpha_d(int d);

struct GridSite {
    int x = 0;
    int y = 0;
    friend bool operator==(GridSite, GridSite) = default;
    friend auto operator<=>(GridSite, GridSite) = default;
};

inline bool linf_adjacent(GridSite a, GridSite b) {
    const int dx = std::abs(a.x - b.x), dy = std::abs(a.y - b.y);
    return std::max(dx, dy) == 1;
}

// The shifted renormalization grid at scale r: box(z) = r z + [-r/2, r/2)^2
// shifted by r f_i / 3, with f_1 = 0 and f_2..f_9 the Linf neighbors of 0.
struct BoxGrid {
    double r = 1.0;
    int shift_index = 1; // 1..9

    static constexpr int kShifts = 9;
    static GridSite shift_vector(int i); // integer f_i
    Vec2 offset() const {
        const GridSite f = shift_vector(shift_index);
        return {r * f.x / 3.0, r * f.y / 3.0};
    }
    Vec2 box_center(GridSite z) const { return {r * z.x + offset().x, r * z.y + offset().y}; }
    Rect box_rect(GridSite z) const {
        const Vec2 c = box_center(z);
        return {c.x - r / 2, c.x + r / 2, c.y - r / 2, c.y + r / 2};
    }
    // Site whose half-open box contains p.
    GridSite site_of(Vec2 p) const {
        const Vec2 o = offset();
        return {int(std::floor((p.x - o.x) / r + 0.5)), int(std::floor((p.y - o.y) / r + 0.5))};
    }
    void validate() const;
};

enum class BoxMode { Nice, Good };
enum class Label { Ugly, Bad };

// True iff every sub-box of the regular alpha^2 (Nice) or (3 alpha)^2 (Good)
// partition of box z contains at least one point. Boxes that are not fully
// inside the point-set window raise OutOfWindow rather than being classified
// from unseen area.
bool classify_box(const PointSet& ps, const BoxGrid& grid, GridSite z, BoxMode mode, int d = 2);

// Inclusive site rectangle.
struct SiteRect {
    int x0 = 0, x1 = -1, y0 = 0, y1 = -1;
    int width() const { return x1 - x0 + 1; }
    int height() const { return y1 - y0 + 1; }
    long count() const { return long(width()) * long(height()); }
    bool contains(GridSite z) const { return z.x >= x0 && z.x <= x1 && z.y >= y0 && z.y <= y1; }
    bool on_boundary(GridSite z) const {
        return z.x == x0 || z.x == x1 || z.y == y0 || z.y == y1;
    }
};

// Per-site nice/good labels over a rectangle of boxes (single pass over the
// point set). bad = !good, ugly = !nice.
struct SiteField {
    BoxGrid grid;
    SiteRect rect;
    std::vector<uint8_t> nice_flags;
    std::vector<uint8_t> good_flags;

    std::size_t index(GridSite z) const {
        return std::size_t(z.y - rect.y0) * std::size_t(rect.width()) + std::size_t(z.x - rect.x0);
    }
    bool nice(GridSite z) const { return nice_flags[index(z)] != 0; }
    bool good(GridSite z) const { return good_flags[index(z)] != 0; }
    bool marked(GridSite z, Label which) const { return which == Label::Bad ? !good(z) : !nice(z); }
};

SiteField site_field(const PointSet& ps, double r, int shift_index, const SiteRect& rect, int d = 2);

// Maximal Linf-connected components of marked (bad or ugly) sites.
struct BadCluster {
    std::vector<GridSite> sites; // sorted
    bool touches_rect_boundary = false;
};

struct BadClusterSet {
    BoxGrid grid;
    Label label = Label::Bad;
    std::vector<BadCluster> clusters; // ordered by minimal site
};

BadClusterSet bad_clusters(const SiteField& field, Label which = Label::Bad);

// Im(C): union of the cluster's boxes. Ad(C): open r/2 Linf-neighborhood of
// Im(C), i.e. the union of open squares of side 2r centered on the boxes.
bool im_contains(const BoxGrid& grid, const BadCluster& c, Vec2 p);
bool ad_contains(const BoxGrid& grid, const BadCluster& c, Vec2 p);

// Lattice animals.
struct GridAnimal {
    std::vector<GridSite> sites; // sorted, deduplicated
    GridSite root{0, 0};
};

bool animal_connected(const GridAnimal& a);

// Sites whose shifted box meets the shape (points plus polyline segments).
GridAnimal animal_of(const std::vector<Vec2>& points,
                     const std::vector<std::pair<Vec2, Vec2>>& segments, double r,
                     int shift_index);

// Covering sequence x_0 = 0, ..., x_h (in the frame translated so the root is
// the origin): the animal is covered by boxes Lambda(l x_i, 2l), consecutive
// x_i are Linf-adjacent or equal, and h+1 <= 1 + (2m-2)/l.
std::vector<GridSite> cover_animal(const GridAnimal& a, int l);

} // namespace pdlab
