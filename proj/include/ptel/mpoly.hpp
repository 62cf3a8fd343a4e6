#pragma once

// Sparse multivariate polynomials over Q in the variables t, x1, ..., xn.
//
// Variable 0 is t, variable i is x_i.  Terms are kept sorted in decreasing
// graded-lexicographic order with t > x1 > ... > xn, so terms()[0] is the
// leading term used by every normalization in the library.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ptel {

using Rat = mpq_class;
using BigInt = mpz_class;

/// Largest supported number of variables (t plus up to seven parameters).
inline constexpr int kMaxVars = 8;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> exps{};

    unsigned total() const;
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Requires divides(other).
    Monomial quotient_of(const Monomial& other) const;
    bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic comparison: negative, zero or positive.
int grlex_compare(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    Rat coeff;
};

class MPoly {
public:
    MPoly() = default;
    explicit MPoly(const Rat& c);
    explicit MPoly(long c) : MPoly(Rat(c)) {}

    static MPoly variable(int v);
    static MPoly monomial(const Rat& c, const Monomial& m);
    /// Builds from unsorted terms; combines duplicates and drops zeros.
    static MPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Constant term value; only meaningful when is_constant().
    Rat constant_value() const;

    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    const Term& leading() const { return terms_.front(); }
    const Rat& leading_coefficient() const { return terms_.front().coeff; }

    int degree(int v) const;          // -1 for the zero polynomial
    int total_degree() const;         // -1 for the zero polynomial
    bool depends_on(int v) const;
    std::uint32_t var_mask() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rat& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
    friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
    bool operator==(const MPoly& o) const;

    MPoly pow(unsigned e) const;
    MPoly derivative(int v) const;

    /// coefficients(v)[k] is the coefficient of v^k; entries are free of v.
    std::vector<MPoly> coefficients(int v) const;
    static MPoly from_coefficients(int v, std::span<const MPoly> coeffs);
    /// Coefficient of v^k.
    MPoly coefficient(int v, int k) const;

    MPoly substitute(int v, const Rat& value) const;
    MPoly substitute(int v, const MPoly& value) const;

    /// Scalar u with *this == u * normalized().
    Rat unit() const;
    /// Integer coefficients, integer content 1, positive leading coefficient.
    MPoly normalized() const;

private:
    std::vector<Term> terms_;
    friend struct MPolyAccess;
};

/// Quotient if q divides p exactly in Q[t, x].
std::optional<MPoly> try_divide(const MPoly& p, const MPoly& q);
/// Exact quotient; throws ptel::InvariantBreach when the division is not exact.
MPoly divide_exact(const MPoly& p, const MPoly& q);

/// Normalized greatest common divisor; gcd(0, q) = normalized q.
MPoly gcd(const MPoly& p, const MPoly& q);
MPoly lcm(const MPoly& p, const MPoly& q);

/// Normalized gcd of the coefficients of p with respect to v (free of v).
MPoly content(const MPoly& p, int v);
MPoly primitive_part(const MPoly& p, int v);

struct SquarefreeFactor {
    MPoly factor;
    int multiplicity;
};

/// Squarefree decomposition in v.  Factors are normalized, pairwise coprime,
/// squarefree and of positive degree in v; the v-free content is the unit.
/// Throws ZeroPolynomial on p == 0.
std::vector<SquarefreeFactor> squarefree(const MPoly& p, int v);

/// Pairwise coprime normalized polynomials of positive v-degree such that
/// each input is, up to a v-free factor, a product of their powers.
std::vector<MPoly> coprime_base(const std::vector<MPoly>& polys, int v);

/// Largest k with f^k | p (f of positive degree, p nonzero).
int multiplicity(const MPoly& p, const MPoly& f);

}  // namespace ptel
