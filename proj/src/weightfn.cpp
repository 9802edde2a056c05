#include "pdlab/weightfn.hpp"

#include <cmath>

namespace pdlab {

PseudoInverseResult pseudo_inverse(const std::function<double(double)>& g, double u, double lo,
                                   double hi) {
    if (!(lo <= hi)) throw InvalidParameter("pseudo_inverse: empty bracket");
    if (u <= g(lo)) return {lo, true};
    if (u > g(hi)) throw BracketTooSmall("pseudo_inverse: u exceeds g(hi)");
    // Invariant: g(a) < u <= g(b); sup{u' : g(u') < u} lies in [a, b].
    double a = lo, b = hi;
    while (b - a > 1e-10) {
        const double m = 0.5 * (a + b);
        if (g(m) < u)
            a = m;
        else
            b = m;
    }
    return {a, false};
}

namespace {

// Bracket-doubling pseudo-inverse from x = lo.
double pinv_grow(const std::function<double(double)>& g, double u, double lo) {
    if (u <= g(lo)) return lo;
    double hi = lo < 1.0 ? 2.0 : lo * 2.0;
    int guard = 0;
    while (g(hi) < u) {
        hi *= 2.0;
        if (++guard > 2000) throw BracketTooSmall("pseudo_inverse bracket exploded");
    }
    return pseudo_inverse(g, u, lo, hi).value;
}

} // namespace

double NiceCalc::l(double y) const {
    return pinv_grow([this](double x) { return g(x); }, y, 1.0);
}

double NiceCalc::q(double x) const {
    // h is defined on [g(1), inf); below that the pseudo-inverse clamps.
    const double y0 = g(1.0);
    return pinv_grow([this](double y) { return h(y); }, x, y0);
}

std::vector<ExponentProbeRow> nice_exponent_probe(const WeightFn& f, const std::vector<double>& us) {
    NiceCalc calc(f);
    std::vector<ExponentProbeRow> rows;
    rows.reserve(us.size());
    for (double u : us) rows.push_back({u, calc.rate(u)});
    return rows;
}

} // namespace pdlab
