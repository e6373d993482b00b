#ifndef TROPAZ_CHECKS_HPP
#define TROPAZ_CHECKS_HPP

#include <string>
#include <vector>

#include "tropaz/pipeline.hpp"

namespace tropaz {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The exact invariant battery: balancing, leaf lines, Laplacian residuals,
// exactness, zero counting, Psi placement, segment directions, limit-shape
// formula agreement and continuity, angle geometry, zero-temperature Gibbs
// consistency. Non-smooth inputs run the reduced battery.
std::vector<CheckResult> run_invariant_checks(const Pipeline& pipeline,
                                              int random_points = 200,
                                              std::uint64_t seed = 20240501);

} // namespace tropaz

#endif
