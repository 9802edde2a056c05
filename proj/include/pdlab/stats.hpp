#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "pdlab/errors.hpp"

namespace pdlab {

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
    std::size_t count = 0;
};

inline MeanSe mean_se(const std::vector<double>& xs) {
    MeanSe r;
    r.count = xs.size();
    if (xs.empty()) return r;
    double s = 0;
    for (double x : xs) s += x;
    r.mean = s / double(xs.size());
    if (xs.size() < 2) return r;
    double ss = 0;
    for (double x : xs) ss += (x - r.mean) * (x - r.mean);
    const double var = ss / double(xs.size() - 1);
    r.se = std::sqrt(var / double(xs.size()));
    return r;
}

inline double sample_variance(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    double m = 0;
    for (double x : xs) m += x;
    m /= double(xs.size());
    double ss = 0;
    for (double x : xs) ss += (x - m) * (x - m);
    return ss / double(xs.size() - 1);
}

// Wilson score interval for a binomial proportion.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

inline Interval wilson(std::size_t hits, std::size_t n, double z = 3.0) {
    if (n == 0) return {0.0, 1.0};
    const double p = double(hits) / double(n);
    const double z2 = z * z;
    const double denom = 1.0 + z2 / double(n);
    const double center = p + z2 / (2.0 * double(n));
    const double half = z * std::sqrt(p * (1.0 - p) / double(n) + z2 / (4.0 * double(n) * double(n)));
    return {(center - half) / denom, (center + half) / denom};
}

// Ordinary least squares slope of y against x.
inline double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw InvalidParameter("ols_slope needs >= 2 paired points");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= double(x.size());
    my /= double(x.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0) throw InvalidParameter("ols_slope: degenerate x values");
    return sxy / sxx;
}

// Delete-one jackknife standard error of an arbitrary statistic of groups.
// `stat` maps a set of group indices (true = keep) to the statistic value.
inline double jackknife_se(std::size_t groups, const std::function<double(const std::vector<bool>&)>& stat) {
    if (groups < 2) return 0.0;
    std::vector<bool> keep(groups, true);
    const double full = stat(keep);
    (void)full;
    std::vector<double> leave_one(groups);
    for (std::size_t i = 0; i < groups; ++i) {
        keep[i] = false;
        leave_one[i] = stat(keep);
        keep[i] = true;
    }
    double m = 0;
    for (double v : leave_one) m += v;
    m /= double(groups);
    double ss = 0;
    for (double v : leave_one) ss += (v - m) * (v - m);
    return std::sqrt(ss * double(groups - 1) / double(groups));
}

} // namespace pdlab
