#include "pdlab/predicates.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>

namespace pdlab {

namespace {

// Static filter constants after Shewchuk. epsilon is half an ulp of 1.
constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBound = (10.0 + 96.0 * kEps) * kEps;

long g_exact_fallbacks = 0;

using Rational = boost::multiprecision::cpp_rational;

int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

int orient2d_exact(Vec2 a, Vec2 b, Vec2 c) {
    ++g_exact_fallbacks;
    const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    const Rational det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
    return sign_of(det);
}

int incircle_exact(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    ++g_exact_fallbacks;
    const Rational adx = Rational(a.x) - Rational(d.x);
    const Rational ady = Rational(a.y) - Rational(d.y);
    const Rational bdx = Rational(b.x) - Rational(d.x);
    const Rational bdy = Rational(b.y) - Rational(d.y);
    const Rational cdx = Rational(c.x) - Rational(d.x);
    const Rational cdy = Rational(c.y) - Rational(d.y);
    const Rational alift = adx * adx + ady * ady;
    const Rational blift = bdx * bdx + bdy * bdy;
    const Rational clift = cdx * cdx + cdy * cdy;
    const Rational det = alift * (bdx * cdy - bdy * cdx) + blift * (cdx * ady - cdy * adx) +
                         clift * (adx * bdy - ady * bdx);
    return sign_of(det);
}

} // namespace

int orient2d(Vec2 a, Vec2 b, Vec2 c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;

    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return det > 0 ? 1 : (det < 0 ? -1 : 0);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return det > 0 ? 1 : (det < 0 ? -1 : 0);
        detsum = -detleft - detright;
    } else {
        return det > 0 ? 1 : (det < 0 ? -1 : 0);
    }
    const double errbound = kCcwErrBound * detsum;
    if (det > errbound) return 1;
    if (-det > errbound) return -1;
    return orient2d_exact(a, b, c);
}

int incircle(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const double adx = a.x - d.x;
    const double ady = a.y - d.y;
    const double bdx = b.x - d.x;
    const double bdy = b.y - d.y;
    const double cdx = c.x - d.x;
    const double cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy;
    const double cdxbdy = cdx * bdy;
    const double alift = adx * adx + ady * ady;

    const double cdxady = cdx * ady;
    const double adxcdy = adx * cdy;
    const double blift = bdx * bdx + bdy * bdy;

    const double adxbdy = adx * bdy;
    const double bdxady = bdx * ady;
    const double clift = cdx * cdx + cdy * cdy;

    const double det =
        alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);

    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    const double errbound = kIccErrBound * permanent;
    if (det > errbound) return 1;
    if (-det > errbound) return -1;
    return incircle_exact(a, b, c, d);
}

long predicate_exact_fallbacks() { return g_exact_fallbacks; }

} // namespace pdlab
