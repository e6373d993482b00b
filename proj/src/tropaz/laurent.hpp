#ifndef TROPAZ_LAURENT_HPP
#define TROPAZ_LAURENT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropaz/rational.hpp"

namespace tropaz {

// Exact two-variable Laurent polynomial in z and w; zero coefficients are
// dropped on the fly.
class LaurentPoly {
public:
    using Exp = std::pair<int, int>; // (z exponent, w exponent)

    LaurentPoly() = default;
    static LaurentPoly monomial(const Rational& coeff, int ze, int we);

    bool zero() const { return terms_.empty(); }
    const std::map<Exp, Rational>& terms() const { return terms_; }
    Rational coefficient(int ze, int we) const;
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const Rational& coeff, int ze, int we);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rational& s) const;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string str() const;

private:
    std::map<Exp, Rational> terms_;
};

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

// Determinant by signed expansion over systems of distinct representatives
// (equivalently, over the matchings of the support graph).
LaurentPoly laurent_det(const LaurentMatrix& m);

} // namespace tropaz

#endif
