#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "pdlab/errors.hpp"

namespace pdlab {

// Preset nondecreasing weight functions on [1, inf) with f >= 1. Evaluated at
// integer degrees in the greedy experiments; extended to the reals by the same
// formulas for the rate calculus.
struct WeightFn {
    enum class Kind { Identity, Square, Logarithmic, Constant };
    Kind kind = Kind::Identity;
    double c = 1.0; // constant value for Kind::Constant

    double operator()(double x) const {
        switch (kind) {
            case Kind::Identity: return x;
            case Kind::Square: return x * x;
            case Kind::Logarithmic: return std::log1p(x) + 1.0;
            case Kind::Constant: return c;
        }
        return x;
    }
    // Value at integer cluster sizes with the empty-cluster convention f(0)=1.
    double at_size(long k) const { return k <= 0 ? 1.0 : (*this)(double(k)); }
    std::string name() const {
        switch (kind) {
            case Kind::Identity: return "identity";
            case Kind::Square: return "square";
            case Kind::Logarithmic: return "log";
            case Kind::Constant: return "const";
        }
        return "?";
    }
    void validate() const {
        if (kind == Kind::Constant && !(c >= 1.0))
            throw InvalidParameter("constant weight must be >= 1");
    }
    friend bool operator==(const WeightFn&, const WeightFn&) = default;
};

struct PseudoInverseResult {
    double value = 0.0;
    bool clamped = false; // u <= g(lo): result pinned at the bracket's low end
};

// sup{ u' : g(u') < u } on [lo, hi] for nondecreasing g, by bisection to
// absolute tolerance 1e-10. u above g(hi) is a bracket error.
PseudoInverseResult pseudo_inverse(const std::function<double(double)>& g, double u, double lo,
                                   double hi);

// The derived calculus of a weight function:
//   g_f(x) = x f(x),  l_f = g_f^{-1},  h_f(y) = y l_f(y),  q_f = h_f^{-1},
// with pseudo-inverses computed by bracket-doubling bisection from x = 1.
class NiceCalc {
  public:
    explicit NiceCalc(WeightFn f) : f_(f) { f.validate(); }

    double g(double x) const { return x * f_(x); }
    double l(double y) const;
    double h(double y) const { return y * l(y); }
    double q(double x) const;
    // Composite tail-rate exponent l_f(q_f(u)).
    double rate(double u) const { return l(q(u)); }
    const WeightFn& f() const { return f_; }

  private:
    WeightFn f_;
};

struct ExponentProbeRow {
    double u = 0.0;
    double rate = 0.0;
};

// Evaluates l_f(q_f(u)) over a grid. For the identity preset the exact
// exponent is u^(1/3); callers assert that to 1e-6 relative.
std::vector<ExponentProbeRow> nice_exponent_probe(const WeightFn& f, const std::vector<double>& us);

} // namespace pdlab
