#pragma once

#include <cmath>

namespace pdlab {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Vec2 a, Vec2 b) { return !(a == b); }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }
inline double norm(Vec2 a) { return std::sqrt(norm2(a)); }
inline double dist2(Vec2 a, Vec2 b) { return norm2(a - b); }
inline double dist(Vec2 a, Vec2 b) { return std::sqrt(dist2(a, b)); }
inline double dist_inf(Vec2 a, Vec2 b) {
    return std::max(std::fabs(a.x - b.x), std::fabs(a.y - b.y));
}

// Lexicographic (x, then y); used for canonical edge ids and tie-breaking.
inline bool lex_less(Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

} // namespace pdlab
