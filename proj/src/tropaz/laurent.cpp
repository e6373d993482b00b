#include "tropaz/laurent.hpp"

#include <sstream>

namespace tropaz {

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int ze, int we) {
    LaurentPoly p;
    p.add_term(coeff, ze, we);
    return p;
}

Rational LaurentPoly::coefficient(int ze, int we) const {
    auto it = terms_.find({ze, we});
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Rational& coeff, int ze, int we) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(Exp{ze, we}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(c, e.first, e.second);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(-c, e.first, e.second);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            out.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
    return out;
}

LaurentPoly LaurentPoly::operator*(const Rational& s) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term(c * s, e.first, e.second);
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << rational_string(c) << ")";
        if (e.first != 0) os << " z^" << e.first;
        if (e.second != 0) os << " w^" << e.second;
    }
    return os.str();
}

LaurentPoly laurent_det(const LaurentMatrix& m) {
    std::size_t n = m.size();
    LaurentPoly det;
    if (n == 0) {
        det.add_term(Rational(1), 0, 0);
        return det;
    }
    std::vector<char> used(n, 0);
    std::vector<std::size_t> perm(n);

    auto rec = [&](auto&& self, std::size_t row, int sign) -> void {
        if (row == n) {
            LaurentPoly prod = LaurentPoly::monomial(Rational(sign), 0, 0);
            for (std::size_t r = 0; r < n; ++r) prod = prod * m[r][perm[r]];
            det = det + prod;
            return;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || m[row][c].zero()) continue;
            used[c] = 1;
            perm[row] = c;
            // Parity of the transposition count: inversions added by placing c.
            int inversions = 0;
            for (std::size_t r = 0; r < row; ++r)
                if (perm[r] > c) ++inversions;
            self(self, row + 1, (inversions % 2 == 0) ? sign : -sign);
            used[c] = 0;
        }
    };
    rec(rec, 0, 1);
    return det;
}

} // namespace tropaz
