#include "tropaz/linsolve.hpp"

namespace tropaz {

std::vector<Rational> solve_rational_system(std::vector<std::vector<Rational>> a,
                                            std::vector<Rational> b) {
    std::size_t n = a.size();
    if (n == 0) return {};
    for (std::size_t r = 0; r < n; ++r)
        if (a[r].size() != n)
            throw InternalError("BadSystem", "non-square system");

    // Clear denominators per row: integer augmented matrix [M | v].
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        BigInt lcm = 1;
        for (std::size_t c = 0; c < n; ++c) lcm = lcm / gcd(lcm, denominator(a[r][c])) * denominator(a[r][c]);
        lcm = lcm / gcd(lcm, denominator(b[r])) * denominator(b[r]);
        for (std::size_t c = 0; c < n; ++c)
            m[r][c] = numerator(a[r][c]) * (lcm / denominator(a[r][c]));
        m[r][n] = numerator(b[r]) * (lcm / denominator(b[r]));
    }

    // One-step Bareiss elimination with row pivoting.
    BigInt prev = 1;
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t piv = p;
        while (piv < n && m[piv][p] == 0) ++piv;
        if (piv == n) throw ValidationError("SingularSystem", "matrix is singular");
        if (piv != p) std::swap(m[piv], m[p]);
        for (std::size_t r = p + 1; r < n; ++r) {
            for (std::size_t c = p + 1; c <= n; ++c)
                m[r][c] = (m[p][p] * m[r][c] - m[r][p] * m[p][c]) / prev;
            m[r][p] = 0;
        }
        prev = m[p][p];
    }

    std::vector<Rational> x(n);
    for (std::size_t p = n; p-- > 0;) {
        Rational rhs = m[p][n];
        for (std::size_t c = p + 1; c < n; ++c) rhs -= Rational(m[p][c]) * x[c];
        x[p] = rhs / Rational(m[p][p]);
    }
    return x;
}

} // namespace tropaz
