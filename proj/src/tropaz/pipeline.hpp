#ifndef TROPAZ_PIPELINE_HPP
#define TROPAZ_PIPELINE_HPP

#include <memory>

#include "tropaz/action.hpp"

namespace tropaz {

// Builds the full tropical chain from a weight file. The curve-dependent
// parts are only populated when the subdivision is smooth.
struct Pipeline {
    FundamentalDomain domain;
    TorusGraph graph;
    SurfaceTensionTable table;
    Subdivision sub;
    GenericityReport generic;
    std::unique_ptr<TropicalCurve> curve;
    std::unique_ptr<DualActionFunction> fstar;
    std::unique_ptr<PrimalGradients> primal;

    bool smooth() const { return generic.smooth; }
    ActionContext action() const; // requires smooth()
};

Pipeline build_pipeline(const FundamentalDomain& domain);

} // namespace tropaz

#endif
