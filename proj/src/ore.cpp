#include "ptel/ore.hpp"

#include "ptel/errors.hpp"
#include "ptel/linalg.hpp"

namespace ptel {

namespace {

// Integer content and sign of a list of polynomials: the scalar u > 0 or < 0
// such that dividing by u leaves integer coefficients with content 1 and a
// positive leading coefficient in the last polynomial.
Rat polynomial_unit(const std::vector<MPoly>& ps) {
    BigInt num = 0, den = 1;
    for (const auto& p : ps)
        for (const auto& t : p.terms()) {
            num = gcd(num, BigInt(t.coeff.get_num()));
            den = lcm(den, BigInt(t.coeff.get_den()));
        }
    Rat u(num, den);
    u.canonicalize();
    if (ps.back().leading_coefficient() < 0) u = -u;
    return u;
}

MPoly denominator_lcm(const std::vector<RatFun>& cs) {
    MPoly l(Rat(1));
    for (const auto& c : cs)
        if (!c.den().is_one()) l = lcm(l, c.den());
    return l;
}

}  // namespace

OreOp::OreOp(const RatFun& c) {
    if (!c.is_zero()) c_.push_back(c);
}

OreOp::OreOp(std::vector<RatFun> coeffs) : c_(std::move(coeffs)) { trim(); }

OreOp OreOp::D(int k) {
    std::vector<RatFun> c(std::size_t(k + 1));
    c.back() = RatFun(1);
    return OreOp(std::move(c));
}

void OreOp::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool OreOp::free_of(int v) const {
    for (const auto& c : c_)
        if (c.depends_on(v)) return false;
    return true;
}

bool OreOp::in_kt() const {
    for (const auto& c : c_)
        if (!is_in_kt(c)) return false;
    return true;
}

OreOp OreOp::operator-() const {
    OreOp r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

OreOp operator+(const OreOp& a, const OreOp& b) {
    std::vector<RatFun> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
    return OreOp(std::move(c));
}

OreOp operator-(const OreOp& a, const OreOp& b) { return a + (-b); }

OreOp operator*(const OreOp& a, const OreOp& b) {
    if (a.is_zero() || b.is_zero()) return OreOp();
    const int na = a.order(), nb = b.order();
    std::vector<RatFun> out(std::size_t(na + nb + 1));
    // derivs[j][k] = k-th t-derivative of b_j.
    std::vector<std::vector<RatFun>> derivs(std::size_t(nb + 1));
    for (int j = 0; j <= nb; ++j) {
        derivs[std::size_t(j)].push_back(b.c_[std::size_t(j)]);
        for (int k = 1; k <= na; ++k) derivs[std::size_t(j)].push_back(derive(derivs[std::size_t(j)].back(), kVarT));
    }
    // Dt^i * b_j = sum_k binom(i, k) b_j^(k) Dt^(i-k).
    for (int i = 0; i <= na; ++i) {
        const RatFun& ai = a.c_[std::size_t(i)];
        if (ai.is_zero()) continue;
        BigInt binom = 1;
        for (int k = 0; k <= i; ++k) {
            if (k > 0) binom = binom * (i - k + 1) / k;
            RatFun s = ai * Rat(binom);
            for (int j = 0; j <= nb; ++j) {
                const RatFun& d = derivs[std::size_t(j)][std::size_t(k)];
                if (!d.is_zero()) out[std::size_t(i - k + j)] += s * d;
            }
        }
    }
    return OreOp(std::move(out));
}

OreOp OreOp::scaled(const RatFun& s) const {
    if (s.is_zero()) return OreOp();
    OreOp r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

RatFun OreOp::clearing_factor() const {
    if (is_zero()) return RatFun(1);
    MPoly l = denominator_lcm(c_);
    std::vector<MPoly> ps;
    for (const auto& c : c_) ps.push_back(divide_exact(c.num() * l, c.den()));
    return RatFun(l) * RatFun(1 / polynomial_unit(ps));
}

RatFun OreOp::normalizer() const {
    if (is_zero()) return RatFun(1);
    MPoly l = denominator_lcm(c_);
    std::vector<MPoly> ps;
    MPoly g;
    for (const auto& c : c_) {
        ps.push_back(divide_exact(c.num() * l, c.den()));
        g = gcd(g, ps.back());
    }
    for (auto& p : ps) p = divide_exact(p, g);
    return RatFun(l, g) * RatFun(1 / polynomial_unit(ps));
}

OreOp OreOp::normalized() const { return scaled(normalizer()); }
OreOp OreOp::cleared() const { return scaled(clearing_factor()); }

OreOp OreOp::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / lc());
}

OreDivision right_divmod(const OreOp& a, const OreOp& b) {
    if (b.is_zero()) throw DivisorZero("right division by the zero operator");
    const int nb = b.order();
    OreOp r = a;
    std::vector<RatFun> q(std::size_t(std::max(0, a.order() - nb + 1)));
    // shifted[k] = Dt^k * b.
    std::vector<OreOp> shifted{b};
    while (!r.is_zero() && r.order() >= nb) {
        const int k = r.order() - nb;
        while (int(shifted.size()) <= k) shifted.push_back(OreOp::D() * shifted.back());
        RatFun c = r.lc() / b.lc();
        q[std::size_t(k)] += c;
        OreOp next = r - shifted[std::size_t(k)].scaled(c);
        if (!next.is_zero() && next.order() >= r.order())
            throw InvariantBreach("right division failed to lower the order");
        r = std::move(next);
    }
    return {OreOp(std::move(q)), r};
}

namespace {

// Remainders of Dt^j modulo a on the right, as coefficient vectors of length
// order(a), for j = 0..count-1.
std::vector<std::vector<RatFun>> power_remainders(const OreOp& a, int count) {
    const int n = a.order();
    std::vector<std::vector<RatFun>> out;
    OreOp r(1);
    for (int j = 0; j < count; ++j) {
        if (n == 0) {
            out.emplace_back();
            continue;
        }
        r = right_divmod(r, a).remainder;
        std::vector<RatFun> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[std::size_t(i)] = r.coeff(i);
        out.push_back(std::move(v));
        r = OreOp::D() * r;
    }
    return out;
}

}  // namespace

Lclm lclm_with_cofactors(const OreOp& a, const OreOp& b) {
    if (a.is_zero() || b.is_zero()) throw OperandZero("lclm with a zero operand");
    const int na = a.order(), nb = b.order();
    const int top = na + nb;
    auto ra = power_remainders(a, top + 1), rb = power_remainders(b, top + 1);
    for (int n = std::max(na, nb); n <= top; ++n) {
        // Columns j = 0..n; rows are the stacked remainder coordinates.
        Matrix m(std::size_t(na + nb), Vector(std::size_t(n + 1)));
        for (int j = 0; j <= n; ++j) {
            for (int i = 0; i < na; ++i) m[std::size_t(i)][std::size_t(j)] = ra[std::size_t(j)][std::size_t(i)];
            for (int i = 0; i < nb; ++i) m[std::size_t(na + i)][std::size_t(j)] = rb[std::size_t(j)][std::size_t(i)];
        }
        auto basis = nullspace(m, n + 1);
        if (basis.empty()) continue;
        OreOp l(basis.back());
        RatFun s = l.normalizer();
        l = l.scaled(s);
        OreDivision da = right_divmod(l, a), db = right_divmod(l, b);
        if (!da.remainder.is_zero() || !db.remainder.is_zero())
            throw InvariantBreach("lclm candidate is not a common left multiple");
        return {l, da.quotient, db.quotient};
    }
    throw InvariantBreach("no common left multiple up to order(a) + order(b)");
}

OreOp lclm(const OreOp& a, const OreOp& b) { return lclm_with_cofactors(a, b).l; }

OreOp twist(const OreOp& a, const RatFun& r) {
    if (a.is_zero()) return a;
    const OreOp shift = OreOp::D() - OreOp(r);
    OreOp power(1), out;
    for (int i = 0; i <= a.order(); ++i) {
        if (i > 0) power = shift * power;
        out = out + power.scaled(a.coeff(i));
    }
    return out.normalized();
}

}  // namespace ptel
