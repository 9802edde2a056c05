#pragma once

#include <array>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pdlab/pointset.hpp"
#include "pdlab/vec.hpp"

namespace pdlab {

struct DelaunayGraph {
    std::vector<std::vector<int>> adjacency; // sorted neighbor lists
    std::vector<int> degree;

    int num_vertices() const { return int(adjacency.size()); }
    bool has_edge(int u, int v) const;
    std::size_t num_edges() const;
};

struct Circumdisk {
    Vec2 center;
    double r2 = 0.0; // squared radius
};

// Planar Delaunay triangulation of a point set. Immutable after construction;
// triangles are CCW, rotated so the smallest vertex index is first, and sorted
// lexicographically, so equal triangulations compare equal element-wise.
struct Triangulation {
    std::shared_ptr<const PointSet> points;
    std::vector<std::array<int, 3>> triangles;
    std::vector<Circumdisk> circumdisks;
    // neighbor[t][k] = triangle across the edge opposite vertex k, or -1 on the hull.
    std::vector<std::array<int, 3>> neighbors;
    std::vector<std::pair<int, int>> hull_edges; // CCW along the hull
    DelaunayGraph graph;

    std::size_t num_vertices() const { return points->size(); }
    std::size_t num_triangles() const { return triangles.size(); }
    std::size_t num_edges() const { return graph.num_edges(); }
    Vec2 point(int v) const { return points->points[std::size_t(v)]; }
    bool is_hull_vertex(int v) const;
    // Indices of the 1 or 2 triangles incident to edge {u,v}; empty if not an edge.
    std::vector<int> edge_triangles(int u, int v) const;
};

// Builds the Delaunay triangulation. Requires >= 3 points not all collinear
// (DegenerateInput otherwise); for 1-2 points use delaunay_graph_small.
Triangulation build_delaunay(std::shared_ptr<const PointSet> ps);
Triangulation build_delaunay(const PointSet& ps);

// Voronoi adjacency for configurations of 1 or 2 points.
DelaunayGraph delaunay_graph_small(const PointSet& ps);

// Incremental insertion of one point (appended with the next index).
// The result equals a full rebuild on the augmented set.
Triangulation insert_point(const Triangulation& tri, Vec2 x);

// Removal by full rebuild; indices above v shift down by one.
Triangulation remove_point(const Triangulation& tri, int v);

// Average degree over vertices inside the analysis region of the point set's
// window (or the given sub-rectangle).
double mean_degree(const Triangulation& tri);
double mean_degree(const Triangulation& tri, const Window& region);

// Walk-based point location: triangle whose closed region contains x, or
// nullopt if x lies outside the hull.
std::optional<int> find_triangle(const Triangulation& tri, Vec2 x);

} // namespace pdlab
