#include "ptel/ppv.hpp"

#include "ptel/errors.hpp"
#include "ptel/paratele.hpp"
#include "ptel/text.hpp"

namespace ptel {

PpvResult ppv_defining_operator(const std::vector<RatFun>& f, const Variables& vars, int max_order) {
    if (f.empty()) throw InputError("ppv needs at least one right-hand side");
    if (int(f.size()) > vars.n()) throw InputError("more right-hand sides than parameters");
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (!(derive(f[j], int(i) + 1) == derive(f[i], int(j) + 1)))
                throw IncompatibleSystem("system is not compatible");

    TermRef one = trivial_term(vars.count());
    std::vector<HElement> wrapped;
    for (const auto& c : f) wrapped.emplace_back(c, one);
    ParallelTelescoperResult r = paratele_compatible(wrapped, max_order);
    if (!r.l.in_kt()) throw XFreenessViolated("defining operator involves parameters");
    auto g = r.g.coefficient_over(one);
    if (!g) throw InvariantBreach("certificate of a rational system is not rational");

    PpvResult out{r.l, r.l.monic(), *g, {}};
    out.group_description = group_text(out.monic, vars);
    return out;
}

std::string group_text(const OreOp& monic, const Variables& vars) {
    return "{ a ∈ F : (" + render(monic, vars) + ")(a) = 0 }";
}

}  // namespace ptel
