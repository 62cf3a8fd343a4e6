#include "ptel/ratfun.hpp"

#include <map>

#include "ptel/errors.hpp"
#include "ptel/upoly.hpp"

namespace ptel {

RatFun::RatFun(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = MPoly(Rat(1));
        return;
    }
    MPoly g = gcd(num, den);
    MPoly n = g.is_one() ? num : divide_exact(num, g);
    MPoly d = g.is_one() ? den : divide_exact(den, g);
    Rat u = d.unit();
    if (u != 1) {
        Rat inv = 1 / u;
        n *= inv;
        d *= inv;
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Canonical{}); }

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ + b.num_, a.den_, RatFun::Canonical{});
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    MPoly g = gcd(a.den_, b.den_);
    if (g.is_one()) {
        // gcd(a.num*b.den + b.num*a.den, a.den*b.den) = 1 already.
        MPoly num = a.num_ * b.den_ + b.num_ * a.den_;
        if (num.is_zero()) return RatFun();
        MPoly den = a.den_ * b.den_;
        Rat u = den.unit();
        if (u != 1) {
            num *= 1 / u;
            den *= 1 / u;
        }
        return RatFun(std::move(num), std::move(den), RatFun::Canonical{});
    }
    MPoly ad = divide_exact(a.den_, g), bd = divide_exact(b.den_, g);
    MPoly num = a.num_ * bd + b.num_ * ad;
    if (num.is_zero()) return RatFun();
    MPoly g2 = gcd(num, g);
    MPoly den = ad * divide_exact(b.den_, g2);
    if (!g2.is_one()) num = divide_exact(num, g2);
    Rat u = den.unit();
    if (u != 1) {
        num *= 1 / u;
        den *= 1 / u;
    }
    return RatFun(std::move(num), std::move(den), RatFun::Canonical{});
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ * b.num_, a.den_, RatFun::Canonical{});
    if (a.is_constant()) return RatFun(b.num_ * a.num_.constant_value(), b.den_, RatFun::Canonical{});
    if (b.is_constant()) return RatFun(a.num_ * b.num_.constant_value(), a.den_, RatFun::Canonical{});
    MPoly g1 = gcd(a.num_, b.den_);
    MPoly g2 = gcd(b.num_, a.den_);
    MPoly an = g1.is_one() ? a.num_ : divide_exact(a.num_, g1);
    MPoly bd = g1.is_one() ? b.den_ : divide_exact(b.den_, g1);
    MPoly bn = g2.is_one() ? b.num_ : divide_exact(b.num_, g2);
    MPoly ad = g2.is_one() ? a.den_ : divide_exact(a.den_, g2);
    MPoly num = an * bn;
    MPoly den = ad * bd;
    Rat u = den.unit();
    if (u != 1) {
        num *= 1 / u;
        den *= 1 / u;
    }
    return RatFun(std::move(num), std::move(den), RatFun::Canonical{});
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    if (a.is_zero()) return RatFun();
    // b^{-1} = b.den / b.num, re-normalized on the numerator's unit.
    MPoly bn = b.num_, bd = b.den_;
    Rat u = bn.unit();
    RatFun inv(bd * (1 / u), bn * (1 / u), RatFun::Canonical{});
    return a * inv;
}

RatFun RatFun::pow(int e) const {
    if (e < 0) return RatFun(Rat(1)) / pow(-e);
    return RatFun(num_.pow(unsigned(e)), den_.pow(unsigned(e)), Canonical{});
}

RatFun RatFun::substitute(int v, const Rat& value) const {
    return RatFun(num_.substitute(v, value), den_.substitute(v, value));
}

RatFun RatFun::substitute(int v, const RatFun& value) const {
    // Horner over the coefficient lists of num and den.
    auto eval = [&](const MPoly& p) {
        auto cs = p.coefficients(v);
        RatFun r;
        for (std::size_t k = cs.size(); k-- > 0;) r = r * value + RatFun(cs[k]);
        return r;
    };
    return eval(num_) / eval(den_);
}

RatFun derive(const RatFun& f, int v) {
    if (!f.depends_on(v)) return RatFun();
    const MPoly& n = f.num();
    const MPoly& d = f.den();
    if (d.is_one()) return RatFun(n.derivative(v));
    // (n' d - n d') / d^2, with the common factor gcd(d, d') removed early.
    MPoly dd = d.derivative(v);
    MPoly g = gcd(d, dd);
    MPoly dg = divide_exact(d, g);
    MPoly num = n.derivative(v) * dg - n * divide_exact(dd, g);
    return RatFun(num, d * dg);
}

bool is_in_kt(const RatFun& f) { return (f.var_mask() & ~1u) == 0; }

// ---------------------------------------------------------------------------

PartialFractionDecomposition partial_fractions(const RatFun& f, int v) {
    PartialFractionDecomposition out;
    if (f.is_zero()) return out;
    const MPoly& den = f.den();
    MPoly c = content(den, v);
    MPoly dp = divide_exact(den, c);
    if (dp.degree(v) <= 0) {
        out.polynomial_part = f;
        return out;
    }
    auto factors = squarefree(dp, v);
    MPoly prod(Rat(1));
    for (const auto& sf : factors) prod *= sf.factor.pow(unsigned(sf.multiplicity));
    MPoly unit = divide_exact(dp, prod);  // a rational constant
    RatFun scaled_num(f.num(), c * unit);

    KPoly numk = KPoly::from_ratfun(scaled_num, v);
    KPoly denk = KPoly::from_mpoly(prod, v);
    auto [quot, rem] = divmod(numk, denk);
    out.polynomial_part = quot.to_ratfun();

    for (const auto& sf : factors) {
        KPoly s = KPoly::from_mpoly(sf.factor, v);
        KPoly piece = KPoly::from_mpoly(sf.factor.pow(unsigned(sf.multiplicity)), v);
        KPoly cof = KPoly::from_mpoly(divide_exact(prod, sf.factor.pow(unsigned(sf.multiplicity))), v);
        KPoly a = mod(rem * inverse_mod(mod(cof, piece), piece), piece);
        for (int j = sf.multiplicity; j >= 1; --j) {
            auto [q, r] = divmod(a, s);
            if (!r.is_zero()) out.fractions.push_back({sf.factor, j, r.to_ratfun()});
            a = q;
        }
    }
    return out;
}

RatFun recombine(const PartialFractionDecomposition& pf) {
    RatFun sum = pf.polynomial_part;
    for (const auto& fr : pf.fractions)
        sum += fr.numerator / RatFun(fr.factor.pow(unsigned(fr.power)));
    return sum;
}

KSplit split_k_factors(const MPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("split_k_factors of the zero polynomial");
    MPoly q = primitive_part(p, kVarT);
    if (q.degree(kVarT) <= 0) return {MPoly(Rat(1)), MPoly(Rat(1))};
    // The Q[t]-part is the content of q viewed as a polynomial in x over Q[t].
    std::map<std::vector<std::uint16_t>, std::vector<Term>> groups;
    for (const auto& t : q.terms()) {
        std::vector<std::uint16_t> key(t.mono.exps.begin() + 1, t.mono.exps.end());
        Term only_t{Monomial{}, t.coeff};
        only_t.mono.exps[kVarT] = t.mono.exps[kVarT];
        groups[key].push_back(only_t);
    }
    MPoly kp;
    for (auto& [key, terms] : groups) {
        kp = gcd(kp, MPoly::from_terms(std::move(terms)));
        if (kp.is_one()) break;
    }
    return {kp, divide_exact(q, kp).normalized()};
}

}  // namespace ptel
