#pragma once

// Rational solutions of the parametrized first-order equation
//   derive_z(u) + w * u = sum_i e_i * phi_i
// with unknowns u in Q(t, x) and constants e_i with respect to z.

#include <vector>

#include "ptel/ratfun.hpp"

namespace ptel {

struct ParamRdeProblem {
    int z;                     // index of the main variable
    RatFun w;
    std::vector<RatFun> rhs;   // phi_0, ..., phi_rho
};

struct RdeSolution {
    std::vector<RatFun> e;  // free of z
    RatFun u;
};

struct ParamRdeSolutionSpace {
    /// Basis over the field of z-constants, from the reduced echelon form of
    /// the coefficient system with unknowns ordered e_0..e_rho, then the
    /// numerator coefficients of u by descending degree.
    std::vector<RdeSolution> basis;
    MPoly denominator;       // every solution u has a denominator dividing this
    int degree_bound = -1;   // bound on the z-degree of the numerator of u
    /// Set when the leading terms at infinity could cancel for a value that
    /// is not a rational constant; the degree bound then comes from degree
    /// comparison alone.
    bool indicial_fallback = false;
};

ParamRdeSolutionSpace param_rde(const ParamRdeProblem& problem);

/// True when (e, u) satisfies the equation exactly.
bool satisfies(const ParamRdeProblem& problem, const RdeSolution& s);

}  // namespace ptel
