#pragma once

// Minimal creative telescoping of one hyperexponential element with respect
// to one parameter.

#include "ptel/hyperexp.hpp"
#include "ptel/ore.hpp"

namespace ptel {

inline constexpr int kDefaultMaxOrder = 12;

struct TelescopeResult {
    OreOp l;     // normalized, coefficients free of z
    HElement g;  // op_apply(l, f) == d_apply(g, z)
};

/// Minimal-order L with L(f) = D_z(g) for a nonzero single-part f.
/// Throws MaxOrderExceeded beyond max_order, MultiPartElement or InputError
/// on invalid input.
TelescopeResult min_telescoper(const HElement& f, int z, int max_order = kDefaultMaxOrder);

/// True when op_apply(l, f) == d_apply(g, z).
bool verify_telescoper(const HElement& f, int z, const TelescopeResult& r);

}  // namespace ptel
