#include "ptel/telescope.hpp"

#include "ptel/errors.hpp"
#include "ptel/rde.hpp"

namespace ptel {

TelescopeResult min_telescoper(const HElement& f, int z, int max_order) {
    if (f.is_zero()) throw InputError("min_telescoper needs a nonzero element");
    if (f.parts().size() > 1) throw MultiPartElement("min_telescoper needs a single-part element");
    if (z == kVarT) throw InputError("telescoping variable must be a parameter x_i");
    const HPart& part = f.parts().front();
    const RatFun& c = part.coeff;
    const TermRef& h = part.term;
    if (z >= h->nvars()) throw UnknownVariable("telescoping variable out of range");

    ParamRdeProblem pb{z, derive(c, z) / c + h->r(z), {RatFun(1)}};
    // power = T^i(c) with T(c) = derive_t(c) + c * r_t.
    RatFun power = c;
    for (int order = 0; order <= max_order; ++order) {
        if (order > 0) {
            power = derive(power, kVarT) + power * h->r(kVarT);
            pb.rhs.push_back(power / c);
        }
        ParamRdeSolutionSpace space = param_rde(pb);
        const RdeSolution* best = nullptr;
        int best_support = 0;
        for (const auto& s : space.basis) {
            int support = 0;
            for (const auto& e : s.e) support += !e.is_zero();
            if (support == 0) continue;
            if (!best || support < best_support) {
                best = &s;
                best_support = support;
            }
        }
        if (!best) continue;
        OreOp l(best->e);
        RatFun scale = l.normalizer();
        TelescopeResult r{l.scaled(scale), HElement(scale * best->u * c, h)};
        if (!verify_telescoper(f, z, r)) throw InvariantBreach("telescoper certificate identity fails");
        return r;
    }
    throw MaxOrderExceeded("no telescoper up to order " + std::to_string(max_order));
}

bool verify_telescoper(const HElement& f, int z, const TelescopeResult& r) {
    return !r.l.is_zero() && r.l.free_of(z) && op_apply(r.l, f) == d_apply(r.g, z);
}

}  // namespace ptel
