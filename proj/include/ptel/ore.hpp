#pragma once

// Linear differential operators sum a_i Dt^i with rational-function
// coefficients, Dt * a = a * Dt + d/dt(a).

#include <utility>
#include <vector>

#include "ptel/ratfun.hpp"

namespace ptel {

class OreOp {
public:
    OreOp() = default;
    OreOp(const RatFun& c);  // NOLINT(google-explicit-constructor)
    OreOp(long c) : OreOp(RatFun(c)) {}  // NOLINT(google-explicit-constructor)
    /// coeffs[i] multiplies Dt^i; trailing zeros are dropped.
    explicit OreOp(std::vector<RatFun> coeffs);

    /// Dt^k.
    static OreOp D(int k = 1);

    bool is_zero() const { return c_.empty(); }
    int order() const { return int(c_.size()) - 1; }
    const std::vector<RatFun>& coeffs() const { return c_; }
    RatFun coeff(int i) const { return i >= 0 && i < int(c_.size()) ? c_[std::size_t(i)] : RatFun(); }
    const RatFun& lc() const { return c_.back(); }

    /// True when no coefficient depends on v.
    bool free_of(int v) const;
    /// True when every coefficient lies in Q(t).
    bool in_kt() const;

    OreOp operator-() const;
    friend OreOp operator+(const OreOp& a, const OreOp& b);
    friend OreOp operator-(const OreOp& a, const OreOp& b);
    friend OreOp operator*(const OreOp& a, const OreOp& b);
    bool operator==(const OreOp& o) const { return c_ == o.c_; }

    /// Left multiple s * A for a scalar s.
    OreOp scaled(const RatFun& s) const;

    /// Canonical representative of K* . A: polynomial coefficients without a
    /// common polynomial factor, positive leading value.
    OreOp normalized() const;
    /// The scalar s with normalized() == s * (*this).
    RatFun normalizer() const;
    /// Polynomial coefficients with integer content 1 and positive leading
    /// value, keeping any common polynomial factor.
    OreOp cleared() const;
    RatFun clearing_factor() const;
    /// Leading coefficient 1.
    OreOp monic() const;

private:
    void trim();
    std::vector<RatFun> c_;
};

struct OreDivision {
    OreOp quotient;
    OreOp remainder;
};

/// A = Q * B + R with order(R) < order(B).  Throws DivisorZero.
OreDivision right_divmod(const OreOp& a, const OreOp& b);

struct Lclm {
    OreOp l;  // normalized
    OreOp u;  // l == u * a
    OreOp v;  // l == v * b
};

/// Least common left multiple with cofactors.  Throws OperandZero.
Lclm lclm_with_cofactors(const OreOp& a, const OreOp& b);
OreOp lclm(const OreOp& a, const OreOp& b);

/// A with Dt replaced by Dt - r, normalized.
OreOp twist(const OreOp& a, const RatFun& r);

}  // namespace ptel
