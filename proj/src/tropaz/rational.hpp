#ifndef TROPAZ_RATIONAL_HPP
#define TROPAZ_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tropaz/errors.hpp"

namespace tropaz {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Parses "p", "-p" or "p/q" with q > 0 after normalization.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rational_string(const Rational& value);

// Integer 2-vector (slopes, primitive directions).
struct Vec2I {
    long x = 0;
    long y = 0;

    friend auto operator<=>(const Vec2I&, const Vec2I&) = default;
    Vec2I operator+(const Vec2I& o) const { return {x + o.x, y + o.y}; }
    Vec2I operator-(const Vec2I& o) const { return {x - o.x, y - o.y}; }
    Vec2I operator-() const { return {-x, -y}; }
    Vec2I operator*(long s) const { return {x * s, y * s}; }
};

inline long cross(const Vec2I& a, const Vec2I& b) { return a.x * b.y - a.y * b.x; }
inline long dot(const Vec2I& a, const Vec2I& b) { return a.x * b.x + a.y * b.y; }

// Counterclockwise and clockwise quarter turns.
inline Vec2I rot_ccw(const Vec2I& v) { return {-v.y, v.x}; }
inline Vec2I rot_cw(const Vec2I& v) { return {v.y, -v.x}; }

long gcd_long(long a, long b);

// v / gcd(|v.x|, |v.y|); v must be nonzero.
Vec2I primitive(const Vec2I& v);

// Rational 2-vector (positions in the curve plane and in D_Az).
struct Vec2Q {
    Rational x;
    Rational y;

    Vec2Q() = default;
    Vec2Q(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    Vec2Q(const Vec2I& v) : x(v.x), y(v.y) {}

    friend bool operator==(const Vec2Q& a, const Vec2Q& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2Q& a, const Vec2Q& b) { return !(a == b); }
    Vec2Q operator+(const Vec2Q& o) const { return {x + o.x, y + o.y}; }
    Vec2Q operator-(const Vec2Q& o) const { return {x - o.x, y - o.y}; }
    Vec2Q operator*(const Rational& s) const { return {x * s, y * s}; }
};

inline Rational cross(const Vec2Q& a, const Vec2Q& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2Q& a, const Vec2Q& b) { return a.x * b.x + a.y * b.y; }
inline Rational dot(const Vec2Q& a, const Vec2I& b) { return a.x * b.x + a.y * b.y; }

inline Vec2Q rot_ccw(const Vec2Q& v) { return {-v.y, v.x}; }
inline Vec2Q rot_cw(const Vec2Q& v) { return {v.y, -v.x}; }

// Primitive integer direction of a nonzero rational vector.
Vec2I primitive_direction(const Vec2Q& v);

// Exact angular comparator: orders nonzero vectors counterclockwise starting
// from the positive x-axis. Ties (parallel same-direction vectors) compare equal.
bool angle_less(const Vec2I& a, const Vec2I& b);

} // namespace tropaz

#endif
