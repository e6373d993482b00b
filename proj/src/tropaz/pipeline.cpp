#include "tropaz/pipeline.hpp"

namespace tropaz {

ActionContext Pipeline::action() const {
    if (!smooth())
        throw ValidationError("NotSmooth", "action context requires a smooth tropical curve");
    ActionContext ctx;
    ctx.sub = &sub;
    ctx.curve = curve.get();
    ctx.fstar = fstar.get();
    ctx.primal = primal.get();
    return ctx;
}

Pipeline build_pipeline(const FundamentalDomain& domain) {
    Pipeline p;
    p.domain = domain;
    p.graph = build_torus_graph(p.domain);
    p.table = surface_tension_table(p.graph);
    p.sub = build_subdivision(p.table);
    p.generic = classify_genericity(p.sub);
    if (p.generic.smooth) {
        p.curve = std::make_unique<TropicalCurve>(build_curve(p.sub, p.table));
        p.fstar = std::make_unique<DualActionFunction>(solve_dual(p.sub, *p.curve));
        p.primal = std::make_unique<PrimalGradients>(derive_primal(*p.fstar, p.sub, *p.curve));
    }
    return p;
}

} // namespace tropaz
