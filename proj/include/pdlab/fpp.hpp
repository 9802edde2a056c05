#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pdlab/delaunay.hpp"

namespace pdlab {

// Edge passage-time law with analytic moments.
struct EdgeTimeDist {
    enum class Kind { Exponential, Uniform, Deterministic, BernoulliMix };
    Kind kind = Kind::Exponential;
    double rate = 1.0; // exponential
    double lo = 0.0, hi = 1.0; // uniform
    double value = 1.0; // deterministic
    double p0 = 0.0; // bernoulli mix: mass at 0, rest at 1

    void validate() const;
    double quantile(double u) const; // inverse CDF
    double m1() const;
    double m2() const;
    double atom_at_zero() const;
    std::string name() const;
    friend bool operator==(const EdgeTimeDist&, const EdgeTimeDist&) = default;
};

// Canonical edge id from endpoint coordinates: stable under insertion and
// removal of unrelated points, so surviving edges keep their marks.
uint64_t edge_coord_key(Vec2 a, Vec2 b);

// Delaunay graph with i.i.d. edge times keyed by (seed, edge id).
struct TimedGraph {
    std::shared_ptr<const Triangulation> tri;
    EdgeTimeDist nu;
    uint64_t seed = 0;

    double tau(int u, int v) const;
};

TimedGraph assign_times(std::shared_ptr<const Triangulation> tri, const EdgeTimeDist& nu,
                        uint64_t seed);

struct Geodesic {
    std::vector<int> vertices; // source .. target; empty path = single vertex
    double time = 0.0;
    int hops() const { return int(vertices.size()) - 1; }
};

// Single-source shortest paths with the deterministic tie rule
// (time, hop count, lexicographic predecessor).
struct ShortestPaths {
    std::vector<double> dist;
    std::vector<int> hops;
    std::vector<int> pred;

    Geodesic extract(int target) const;
};

ShortestPaths dijkstra(const TimedGraph& tg, int source);

// First-passage time between two locations: T(x, y) = T(v(x), v(y)).
struct PassageResult {
    double time = 0.0;
    Geodesic geodesic;
    int source = -1;
    int target = -1;
};

PassageResult passage_time(const TimedGraph& tg, Vec2 x, Vec2 y);

// Ordered vertices of the Voronoi cells crossed by segment [a, b]; consecutive
// vertices are Delaunay neighbors. Requires both endpoints in the analysis
// region.
std::vector<int> segment_walk(const Triangulation& tri, Vec2 a, Vec2 b);

// Passage time along the segment walk from the origin to (n, 0); an upper
// bound for the first-passage time between the same points.
struct SegmentTime {
    double z = 0.0;
    long edges = 0;
    std::vector<int> walk;
};

SegmentTime z_n(const TimedGraph& tg, double n);

// Deterministic surgery checks behind the variance bound: removing a vertex
// off the geodesic, or inserting a point outside the geodesic's perturbation
// region, can only lower the passage time.
struct SurgeryOutcome {
    double before = 0.0;
    double after = 0.0;
    bool touched_geodesic = false;  // v on rho, or x inside Gamma(rho)
    bool endpoint_changed = false;  // insertion captured the cell of 0 or n
};

SurgeryOutcome surgery_remove(const TimedGraph& tg, double n, int v);
SurgeryOutcome surgery_insert(const TimedGraph& tg, double n, Vec2 x);

} // namespace pdlab
