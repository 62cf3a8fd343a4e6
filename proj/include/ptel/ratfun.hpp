#pragma once

// Rational functions in t, x1, ..., xn over Q in canonical form.

#include <optional>
#include <vector>

#include "ptel/mpoly.hpp"

namespace ptel {

/// Variable indices: 0 is t, i is x_i.
inline constexpr int kVarT = 0;

class RatFun {
public:
    RatFun() : den_(Rat(1)) {}
    RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
    RatFun(long c) : RatFun(Rat(c)) {}               // NOLINT(google-explicit-constructor)
    explicit RatFun(MPoly p) : num_(std::move(p)), den_(Rat(1)) {}
    /// Canonicalizes num/den.  Throws DivisionByZero when den == 0.
    RatFun(const MPoly& num, const MPoly& den);

    static RatFun variable(int v) { return RatFun(MPoly::variable(v)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rat constant_value() const { return num_.constant_value(); }
    bool depends_on(int v) const { return num_.depends_on(v) || den_.depends_on(v); }
    std::uint32_t var_mask() const { return num_.var_mask() | den_.var_mask(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    /// Throws DivisionByZero when b == 0.
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFun pow(int e) const;
    RatFun substitute(int v, const Rat& value) const;
    RatFun substitute(int v, const RatFun& value) const;

private:
    struct Canonical {};
    RatFun(MPoly num, MPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    MPoly num_;
    MPoly den_;
};

/// Partial derivative with respect to variable v.
RatFun derive(const RatFun& f, int v);

struct PartialFraction {
    MPoly factor;     // squarefree factor of the denominator (positive degree in v)
    int power;        // 1 <= power <= multiplicity of factor
    RatFun numerator; // polynomial in v over Q(other variables), degree < deg_v(factor)
};

struct PartialFractionDecomposition {
    RatFun polynomial_part;                // polynomial in v over Q(other variables)
    std::vector<PartialFraction> fractions;
};

/// Squarefree partial fraction decomposition of f with respect to v.
PartialFractionDecomposition partial_fractions(const RatFun& f, int v);
RatFun recombine(const PartialFractionDecomposition& pf);

struct KSplit {
    MPoly k_part;  // all irreducible factors lying in Q[t]
    MPoly x_part;  // no nonconstant factor in Q[t]
};

/// Separates the Q[t] factors of p (viewed in Q(x)[t]) from the genuinely
/// x-dependent ones.  Factors free of t are units and dropped.
KSplit split_k_factors(const MPoly& p);

/// True when f involves no variable other than t.
bool is_in_kt(const RatFun& f);

}  // namespace ptel
