#ifndef TROPAZ_MP_HPP
#define TROPAZ_MP_HPP

#include <boost/multiprecision/mpfr.hpp>

#include "tropaz/rational.hpp"

namespace tropaz {

using Real = boost::multiprecision::mpfr_float; // dynamic precision

// Sets the working precision (in bits) for subsequently created Reals.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

inline Real to_real(const Rational& q) { return Real(q); }

// Minimal complex arithmetic over Real; std::complex is only specified for
// the builtin floating types.
struct Cplx {
    Real re, im;

    Cplx() : re(0), im(0) {}
    Cplx(Real r) : re(std::move(r)), im(0) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Cplx operator+(const Cplx& o) const { return {re + o.re, im + o.im}; }
    Cplx operator-(const Cplx& o) const { return {re - o.re, im - o.im}; }
    Cplx operator*(const Cplx& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Cplx operator*(const Real& s) const { return {re * s, im * s}; }
    Cplx operator/(const Cplx& o) const {
        Real d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Cplx conj() const { return {re, -im}; }
    Real abs2() const { return re * re + im * im; }

    Cplx& operator+=(const Cplx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cplx& operator-=(const Cplx& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
};

inline Cplx unit_phase(const Real& angle) { return {cos(angle), sin(angle)}; }

// z^e for integer e.
Cplx cpow(const Cplx& z, long e);

} // namespace tropaz

#endif
