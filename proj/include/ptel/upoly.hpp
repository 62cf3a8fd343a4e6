#pragma once

// Dense univariate polynomials in one chosen variable with coefficients in
// the field of rational functions in the remaining variables.

#include <utility>
#include <vector>

#include "ptel/ratfun.hpp"

namespace ptel {

class KPoly {
public:
    KPoly() = default;
    KPoly(int var, std::vector<RatFun> coeffs);

    /// Splits num/den of a rational function whose denominator is free of var.
    static KPoly from_ratfun(const RatFun& f, int var);
    static KPoly from_mpoly(const MPoly& p, int var);

    int var() const { return var_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<RatFun>& coeffs() const { return c_; }
    const RatFun& lc() const { return c_.back(); }
    RatFun coeff(int k) const { return k < int(c_.size()) ? c_[k] : RatFun(); }

    RatFun to_ratfun() const;

    friend KPoly operator+(const KPoly& a, const KPoly& b);
    friend KPoly operator-(const KPoly& a, const KPoly& b);
    friend KPoly operator*(const KPoly& a, const KPoly& b);
    friend KPoly operator*(const RatFun& c, const KPoly& a);

private:
    void trim();
    int var_ = 0;
    std::vector<RatFun> c_;
};

/// Euclidean division over the coefficient field.
std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b);
KPoly mod(const KPoly& a, const KPoly& b);
/// Inverse of a modulo m; requires gcd(a, m) = 1 (throws InvariantBreach otherwise).
KPoly inverse_mod(const KPoly& a, const KPoly& m);

}  // namespace ptel
