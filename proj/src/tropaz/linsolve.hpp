#ifndef TROPAZ_LINSOLVE_HPP
#define TROPAZ_LINSOLVE_HPP

#include <vector>

#include "tropaz/rational.hpp"

namespace tropaz {

// Solves A x = b exactly for square rational A via fraction-free (Bareiss)
// elimination on the integer matrix obtained by clearing denominators
// row by row. Throws ValidationError("SingularSystem") when A is singular.
std::vector<Rational> solve_rational_system(std::vector<std::vector<Rational>> a,
                                            std::vector<Rational> b);

} // namespace tropaz

#endif
