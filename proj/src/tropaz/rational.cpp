#include "tropaz/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace tropaz {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t p = start; p < s.size(); ++p)
        if (!std::isdigit(static_cast<unsigned char>(s[p]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ValidationError("MalformedRational", "empty rational literal");
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(s))
            throw ValidationError("MalformedRational", "not an integer or p/q: '" + text + "'");
        return Rational(BigInt(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ValidationError("MalformedRational", "not an integer or p/q: '" + text + "'");
    BigInt d(den);
    if (d == 0) throw ValidationError("MalformedRational", "zero denominator: '" + text + "'");
    return Rational(BigInt(num), d);
}

std::string rational_string(const Rational& value) {
    BigInt num = numerator(value);
    BigInt den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Vec2I primitive(const Vec2I& v) {
    if (v.x == 0 && v.y == 0) throw InternalError("ZeroVector", "primitive() of zero vector");
    long g = gcd_long(v.x, v.y);
    return {v.x / g, v.y / g};
}

Vec2I primitive_direction(const Vec2Q& v) {
    if (v.x == 0 && v.y == 0) throw InternalError("ZeroVector", "primitive_direction of zero");
    // v = (a/b, c/d); multiply by lcm(b, d) to clear denominators, then reduce.
    BigInt a = numerator(v.x), b = denominator(v.x);
    BigInt c = numerator(v.y), d = denominator(v.y);
    BigInt nx = a * d;
    BigInt ny = c * b;
    BigInt g = gcd(abs(nx), abs(ny));
    nx /= g;
    ny /= g;
    return {static_cast<long>(nx), static_cast<long>(ny)};
}

bool angle_less(const Vec2I& a, const Vec2I& b) {
    auto half = [](const Vec2I& v) {
        // 0: angle in [0, pi), 1: angle in [pi, 2pi)
        if (v.y != 0) return v.y > 0 ? 0 : 1;
        return v.x > 0 ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

} // namespace tropaz
