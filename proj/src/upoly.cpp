#include "ptel/upoly.hpp"

#include <algorithm>

#include "ptel/errors.hpp"

namespace ptel {

KPoly::KPoly(int var, std::vector<RatFun> coeffs) : var_(var), c_(std::move(coeffs)) { trim(); }

void KPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

KPoly KPoly::from_mpoly(const MPoly& p, int var) {
    std::vector<RatFun> cs;
    for (auto& c : p.coefficients(var)) cs.emplace_back(std::move(c));
    return KPoly(var, std::move(cs));
}

KPoly KPoly::from_ratfun(const RatFun& f, int var) {
    if (f.den().depends_on(var)) throw InvariantBreach("KPoly::from_ratfun: denominator depends on the main variable");
    RatFun inv_den = RatFun(Rat(1)) / RatFun(f.den());
    std::vector<RatFun> cs;
    for (auto& c : f.num().coefficients(var)) cs.push_back(RatFun(std::move(c)) * inv_den);
    return KPoly(var, std::move(cs));
}

RatFun KPoly::to_ratfun() const {
    RatFun x = RatFun::variable(var_);
    RatFun r;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

KPoly operator+(const KPoly& a, const KPoly& b) {
    std::vector<RatFun> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
    return KPoly(a.is_zero() ? b.var_ : a.var_, std::move(c));
}

KPoly operator-(const KPoly& a, const KPoly& b) {
    std::vector<RatFun> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) - b.coeff(int(i));
    return KPoly(a.is_zero() ? b.var_ : a.var_, std::move(c));
}

KPoly operator*(const KPoly& a, const KPoly& b) {
    if (a.is_zero() || b.is_zero()) return KPoly(a.var_, {});
    std::vector<RatFun> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return KPoly(a.var_, std::move(c));
}

KPoly operator*(const RatFun& s, const KPoly& a) {
    std::vector<RatFun> c;
    c.reserve(a.c_.size());
    for (const auto& x : a.c_) c.push_back(s * x);
    return KPoly(a.var_, std::move(c));
}

std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b) {
    if (b.is_zero()) throw DivisionByZero("univariate division by zero");
    std::vector<RatFun> r = a.coeffs();
    const int db = b.degree();
    std::vector<RatFun> q(std::max(0, a.degree() - db + 1));
    RatFun inv_lc = RatFun(Rat(1)) / b.lc();
    for (int k = int(r.size()) - 1; k >= db; --k) {
        if (r[k].is_zero()) continue;
        RatFun f = r[k] * inv_lc;
        for (int i = 0; i <= db; ++i) r[k - db + i] -= f * b.coeffs()[i];
        q[k - db] = f;
    }
    r.resize(std::min<std::size_t>(r.size(), std::size_t(std::max(0, db))));
    return {KPoly(b.var(), std::move(q)), KPoly(b.var(), std::move(r))};
}

KPoly mod(const KPoly& a, const KPoly& b) { return divmod(a, b).second; }

KPoly inverse_mod(const KPoly& a, const KPoly& m) {
    // Extended Euclid tracking only the cofactor of a.
    KPoly r0 = m, r1 = mod(a, m);
    KPoly s0(m.var(), {}), s1(m.var(), {RatFun(Rat(1))});
    while (!r1.is_zero() && r1.degree() > 0) {
        auto [q, r] = divmod(r0, r1);
        KPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.is_zero()) throw InvariantBreach("inverse_mod: arguments are not coprime");
    return mod((RatFun(Rat(1)) / r1.lc()) * s1, m);
}

}  // namespace ptel
