#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pdlab/errors.hpp"
#include "pdlab/rng.hpp"
#include "pdlab/vec.hpp"

namespace pdlab {

// Rectangular simulation window with a buffer; statistics are restricted to
// the analysis region (the window shrunk by the buffer on all sides) to keep
// boundary artifacts out of the numbers.
struct Window {
    double x0 = 0.0, x1 = 1.0;
    double y0 = 0.0, y1 = 1.0;
    double buffer = 0.0;

    void validate() const {
        if (!(x0 < x1) || !(y0 < y1)) throw InvalidParameter("degenerate window");
        if (buffer < 0) throw InvalidParameter("window buffer must be >= 0");
        if (x1 - x0 <= 2 * buffer || y1 - y0 <= 2 * buffer)
            throw InvalidParameter("analysis region is empty");
    }
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
    bool contains(Vec2 p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
    bool in_analysis_region(Vec2 p) const {
        return p.x >= x0 + buffer && p.x <= x1 - buffer && p.y >= y0 + buffer && p.y <= y1 - buffer;
    }
    friend bool operator==(const Window&, const Window&) = default;
};

// Homogeneous rate lambda, or a bounded modulated density
//   lambda(x,y) = lambda * (1 + amp * sin(freq*x) * sin(freq*y)),  0 <= amp < 1,
// which is squeezed between lambda/c and lambda*c for c = 1/(1-amp).
struct IntensityModel {
    enum class Kind { Homogeneous, Modulated };
    Kind kind = Kind::Homogeneous;
    double lambda = 1.0;
    double amp = 0.0;
    double freq = 1.0;

    void validate() const {
        if (!(lambda > 0)) throw InvalidParameter("intensity lambda must be > 0");
        if (kind == Kind::Modulated && !(amp >= 0 && amp < 1))
            throw InvalidParameter("modulated amplitude must be in [0,1)");
    }
    double c_mu() const { return kind == Kind::Homogeneous ? 1.0 : 1.0 / (1.0 - amp); }
    double density(Vec2 p) const {
        if (kind == Kind::Homogeneous) return lambda;
        return lambda * (1.0 + amp * std::sin(freq * p.x) * std::sin(freq * p.y));
    }
    friend bool operator==(const IntensityModel&, const IntensityModel&) = default;
};

// A sampled Poisson configuration. Immutable after construction; point order
// is the sampling order and is the tie-breaking order everywhere.
struct PointSet {
    std::vector<Vec2> points;
    Window window;
    uint64_t seed = 0;
    IntensityModel intensity;

    std::size_t size() const { return points.size(); }
    Vec2 operator[](std::size_t i) const { return points[i]; }
};

// Poisson sampling on the window. The modulated model is sampled by thinning
// the dominating homogeneous process at rate c_mu * lambda.
PointSet sample_poisson(const Window& window, const IntensityModel& intensity, uint64_t seed);

// Nearest point of ps to x; ties go to the lowest point index.
int locate(const PointSet& ps, Vec2 x);

// Plain-text persistence: header line "# window x0 x1 y0 y1 buffer b seed s",
// then one "x y" pair per line.
void write_pointset(std::ostream& os, const PointSet& ps);
PointSet read_pointset(std::istream& is);
void write_pointset_file(const std::string& path, const PointSet& ps);
PointSet read_pointset_file(const std::string& path);

} // namespace pdlab
