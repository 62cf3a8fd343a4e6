#pragma once

// Shared helpers for the test suites: expression shorthands and seeded
// random generators for polynomials, rational functions and terms.

#include <random>
#include <string_view>

#include "ptel/hyperexp.hpp"
#include "ptel/ore.hpp"
#include "ptel/ratfun.hpp"
#include "ptel/text.hpp"
#include "ptel/variables.hpp"

namespace ptel::test {

inline const Variables& vars2() {
    static const Variables v = Variables::standard(2);
    return v;
}

inline const Variables& vars3() {
    static const Variables v = Variables::standard(3);
    return v;
}

/// Parses over t, x1, x2.
inline RatFun R(std::string_view s) { return parse_ratfun(s, vars2()); }
inline MPoly P(std::string_view s) {
    RatFun f = R(s);
    return f.num() * (1 / f.den().constant_value());
}
inline std::string S(const RatFun& f) { return render(f, vars2()); }
inline OreOp O(std::string_view s) { return parse_operator(s, vars2()); }

/// Canonical n/d; mpq_class(n, d) alone does not reduce.
inline Rat frac(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// The pair h1 = kC1 * h, h2 = kC2 * h with h = 1/sqrt(t), a non-compatible
// input whose difference D_2(h1) - D_1(h2) is -h.
inline const char* kC1 = "t*(x1+t+t^2*(t+x1+x2))/((t+x1+x2)*(t+x1))";
inline const char* kC2 = "(((t+1)^2+x1*x2+t*(x1-1))*(t+x1+x2)-t*x1)/((t+x1+x2)*(t+x2))";

inline TermRef sqrt_term() { return make_term("h", {R("-1/(2*t)"), RatFun(), RatFun()}); }

class Random {
public:
    explicit Random(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rat small_rat(int bound = 5) {
        int num = 0;
        while (num == 0) num = uniform(-bound, bound);
        return frac(num, uniform(1, 3));
    }

    /// Sparse polynomial in the variables 0..nvars-1 with total degree <= deg.
    MPoly poly(int nvars, int deg, int max_terms) {
        std::vector<Term> terms;
        int count = uniform(1, max_terms);
        for (int k = 0; k < count; ++k) {
            Term t{Monomial{}, small_rat()};
            int budget = uniform(0, deg);
            for (int e = 0; e < budget; ++e) t.mono.exps[std::size_t(uniform(0, nvars - 1))] += 1;
            terms.push_back(t);
        }
        MPoly p = MPoly::from_terms(std::move(terms));
        return p.is_zero() ? MPoly(Rat(1)) : p;
    }

    /// Nonconstant polynomial.
    MPoly nonconstant_poly(int nvars, int deg, int max_terms) {
        while (true) {
            MPoly p = poly(nvars, deg, max_terms);
            if (!p.is_constant()) return p;
        }
    }

    RatFun ratfun(int nvars, int deg, int max_terms) {
        return RatFun(poly(nvars, deg, max_terms), poly(nvars, deg, max_terms));
    }

    /// Integrable log-derivative vector of q * exp(phi) * (t - b)^a over
    /// t, x1..x_{nvars-1}, with q rational, phi polynomial and a, b rational.
    std::vector<RatFun> logd(int nvars, bool with_exp = true) {
        RatFun q(poly(nvars, 2, 2), poly(nvars, 2, 2));
        RatFun phi = with_exp && uniform(0, 1) ? RatFun(poly(nvars, 2, 2)) : RatFun();
        RatFun radical = uniform(0, 1) ? RatFun(small_rat(3)) / RatFun(MPoly::variable(0) - MPoly(small_rat(3)))
                                       : RatFun();
        std::vector<RatFun> out;
        for (int v = 0; v < nvars; ++v) out.push_back(derive(q, v) / q + derive(phi, v) + (v == 0 ? radical : RatFun()));
        return out;
    }

    TermRef term(int nvars, const std::string& label = "h", bool with_exp = true) {
        return make_term(label, logd(nvars, with_exp));
    }

    /// Compatible family f_i = D_{x_i}((u + log p + w * t * log q) * h) with
    /// h free of the parameters and w in {0, 1}, so the potential is not
    /// hyperexponential when p involves them.  Inputs are given as
    /// coefficients over h.
    std::vector<RatFun> log_family(int nvars, const TermRef& h) {
        RatFun u(poly(nvars, 3, 3), poly(nvars, 2, 2));
        MPoly p = nonconstant_poly(nvars, 2, 3);
        while (!p.depends_on(1)) p = nonconstant_poly(nvars, 2, 3);
        MPoly q = uniform(0, 1) ? nonconstant_poly(nvars, 1, 2) : MPoly(Rat(1));
        const RatFun t(MPoly::variable(0));
        std::vector<RatFun> out;
        for (int v = 1; v < nvars; ++v)
            out.push_back(derive(u, v) + u * h->r(v) + RatFun(p.derivative(v), p) + t * RatFun(q.derivative(v), q));
        return out;
    }

    /// Term whose log-derivative vector is zero in every parameter.
    TermRef t_term(int nvars, const std::string& label = "h") {
        std::vector<RatFun> l = logd(1);
        l.resize(std::size_t(nvars));
        return make_term(label, l);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace ptel::test
