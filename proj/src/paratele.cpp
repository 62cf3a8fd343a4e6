#include "ptel/paratele.hpp"

#include <algorithm>
#include <numeric>

#include "ptel/errors.hpp"

namespace ptel {

namespace {

int var_of(std::size_t i) { return int(i) + 1; }

int family_nvars(const std::vector<HElement>& f) {
    for (const auto& e : f)
        if (!e.is_zero()) return e.parts().front().term->nvars();
    return 0;
}

void check_arity(std::size_t n, int nvars) {
    if (nvars != 0 && int(n) >= nvars) throw InputError("more inputs than parameters");
}

// Rescales L to polynomial coefficients and the certificate with it.
ParallelTelescoperResult cleared(const OreOp& l, const HElement& g, bool minimal) {
    RatFun s = l.clearing_factor();
    return {l.scaled(s), s * g, minimal};
}

ParallelTelescoperResult checked(const std::vector<HElement>& f, ParallelTelescoperResult r) {
    if (!r.l.in_kt()) throw XFreenessViolated("parallel telescoper has coefficients involving parameters");
    if (!verify_parallel(f, r)) throw InvariantBreach("parallel telescoper certificate identity fails");
    return r;
}

// ParaTele on coeffs[k] * h with respect to vars[k]: telescope the first
// input, push the rest through that telescoper and recurse on the parameters
// that remain.  Eliminating x1 first reproduces the factorizations of the
// worked examples, e.g. Dt * (t*Dt - 1) = t*Dt^2.
ParallelTelescoperResult similar_rec(const std::vector<RatFun>& coeffs, const TermRef& h, const std::vector<int>& vars,
                                     int max_order) {
    const std::size_t m = coeffs.size();
    const int z = vars.front();
    OreOp l1(1);
    HElement g1;
    if (!coeffs.front().is_zero()) {
        TelescopeResult tr = min_telescoper(HElement(coeffs.front(), h), z, max_order);
        if (!tr.l.in_kt()) throw XFreenessViolated("minimal telescoper with respect to a parameter involves parameters");
        l1 = tr.l;
        g1 = tr.g;
    }
    if (m == 1) return {l1, g1, true};

    std::vector<RatFun> rest(m - 1);
    std::size_t base = m;
    for (std::size_t i = 1; i < m; ++i) {
        HElement fi = d_apply(g1, vars[i]) - op_apply(l1, HElement(coeffs[i], h));
        auto c = fi.coefficient_over(h);
        if (!c) throw InvariantBreach("recursion left the similarity class");
        if (!d_apply(fi, z).is_zero()) throw InvariantBreach("recursion input depends on the eliminated parameter");
        rest[i - 1] = *c;
        if (base == m && !c->is_zero()) base = i - 1;
    }
    if (base == m) return {l1, g1, true};

    // Re-present on H = rest[base] * h, which is constant in z, so the
    // subproblem and its certificate never involve z.
    const RatFun scale = rest[base];
    std::vector<RatFun> logd = h->logd();
    for (int v = 0; v < int(logd.size()); ++v) logd[std::size_t(v)] += derive(scale, v) / scale;
    if (!logd[std::size_t(z)].is_zero()) throw InvariantBreach("re-presented term depends on the eliminated parameter");
    TermRef big_h = make_term(h->label(), std::move(logd));
    for (auto& c : rest) c /= scale;

    std::vector<int> sub_vars(vars.begin() + 1, vars.end());
    ParallelTelescoperResult sub = similar_rec(rest, big_h, sub_vars, max_order);
    auto sub_coeff = sub.g.coefficient_over(big_h);
    if (!sub_coeff) throw InvariantBreach("subproblem certificate left the similarity class");
    HElement g_tilde(*sub_coeff * scale, h);
    return {sub.l * l1, op_apply(sub.l, g1) - g_tilde, true};
}

}  // namespace

bool is_compatible(const std::vector<HElement>& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (!(d_apply(f[j], var_of(i)) == d_apply(f[i], var_of(j)))) return false;
    return true;
}

ParallelTelescoperResult paratele_similar(const std::vector<RatFun>& coeffs, const TermRef& h, int max_order) {
    if (coeffs.empty()) throw InputError("paratele needs at least one input");
    check_arity(coeffs.size(), h->nvars());
    std::vector<HElement> f;
    for (const auto& c : coeffs) f.emplace_back(c, h);
    if (!is_compatible(f)) throw NotCompatible("inputs are not compatible");
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const RatFun& c) { return c.is_zero(); }))
        return {OreOp(1), HElement(), true};
    std::vector<int> vars(coeffs.size());
    std::iota(vars.begin(), vars.end(), 1);
    ParallelTelescoperResult r = similar_rec(coeffs, h, vars, max_order);
    return checked(f, cleared(r.l, r.g, true));
}

ParallelTelescoperResult paratele_compatible(const std::vector<HElement>& f, int max_order) {
    if (f.empty()) throw InputError("paratele needs at least one input");
    check_arity(f.size(), family_nvars(f));
    if (!is_compatible(f)) throw NotCompatible("inputs are not compatible");
    auto classes = similarity_classes(f);
    if (classes.empty()) return {OreOp(1), HElement(), true};

    std::vector<ParallelTelescoperResult> per_class;
    for (const auto& cls : classes) {
        const TermRef& rep = cls.front();
        std::vector<RatFun> coeffs(f.size());
        std::vector<HElement> restricted;
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (const auto& part : f[i].parts())
                if (auto q = is_similar(*part.term, *rep)) coeffs[i] += part.coeff * *q;
            restricted.emplace_back(coeffs[i], rep);
        }
        if (!is_compatible(restricted)) throw CrossClassNonzero("compatibility fails within a similarity class");
        per_class.push_back(paratele_similar(coeffs, rep, max_order));
    }
    if (per_class.size() == 1) return per_class.front();

    OreOp l = per_class.front().l;
    HElement g = per_class.front().g;
    for (std::size_t k = 1; k < per_class.size(); ++k) {
        Lclm m = lclm_with_cofactors(l, per_class[k].l);
        g = op_apply(m.u, g) + op_apply(m.v, per_class[k].g);
        l = m.l;
    }
    return checked(f, cleared(l, g, true));
}

std::optional<OreOp> existence_check(const std::vector<HElement>& f) {
    OreOp p(1);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            HElement delta = d_apply(f[j], var_of(i)) - d_apply(f[i], var_of(j));
            for (const auto& part : delta.parts()) {
                auto a = kt_annihilator(HElement(part.coeff, part.term));
                if (!a) return std::nullopt;
                p = lclm(p, *a);
            }
        }
    p = p.normalized();
    return p;
}

ParallelTelescoperResult paratele_general(const std::vector<HElement>& f, int max_order) {
    if (is_compatible(f)) return paratele_compatible(f, max_order);
    auto p = existence_check(f);
    if (!p) throw NoParallelTelescoperExists("no parallel telescoper exists");
    std::vector<HElement> images;
    for (const auto& e : f) images.push_back(op_apply(*p, e));
    if (!is_compatible(images)) throw InvariantBreach("images under the existence operator are not compatible");
    ParallelTelescoperResult r = paratele_compatible(images, max_order);
    return checked(f, cleared(r.l * *p, r.g, false));
}

bool verify_parallel(const std::vector<HElement>& f, const ParallelTelescoperResult& r) {
    if (r.l.is_zero() || !r.l.in_kt()) return false;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!(op_apply(r.l, f[i]) == d_apply(r.g, var_of(i)))) return false;
    return true;
}

}  // namespace ptel
