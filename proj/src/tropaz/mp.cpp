#include "tropaz/mp.hpp"

#include <cmath>

namespace tropaz {

namespace {
unsigned g_bits = 256;
}

void set_precision_bits(unsigned bits) {
    if (bits < 24) bits = 24;
    g_bits = bits;
    // boost mpfr_float precision is tracked in decimal digits.
    unsigned digits10 = static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2;
    Real::default_precision(digits10);
}

unsigned precision_bits() { return g_bits; }

Cplx cpow(const Cplx& z, long e) {
    if (e == 0) return Cplx(Real(1));
    long n = e < 0 ? -e : e;
    Cplx base = z;
    Cplx acc(Real(1));
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    if (e < 0) return Cplx(Real(1)) / acc;
    return acc;
}

} // namespace tropaz
