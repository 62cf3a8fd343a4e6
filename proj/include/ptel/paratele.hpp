#pragma once

// Parallel telescopers: one operator L in Q(t)<Dt> and one certificate g with
// L(f_i) = D_{x_i}(g) for every input f_i.  Input i belongs to parameter x_i,
// i.e. variable index i + 1.

#include <optional>
#include <vector>

#include "ptel/hyperexp.hpp"
#include "ptel/ore.hpp"
#include "ptel/telescope.hpp"

namespace ptel {

struct ParallelTelescoperResult {
    OreOp l;  // coefficients in Q(t)
    HElement g;
    bool minimal = true;
};

/// D_{x_i}(f_j) == D_{x_j}(f_i) for all i < j.
bool is_compatible(const std::vector<HElement>& f);

/// Minimal parallel telescoper of the compatible family r_i * h.  Zero
/// coefficients are allowed.  Throws NotCompatible, XFreenessViolated.
ParallelTelescoperResult paratele_similar(const std::vector<RatFun>& coeffs, const TermRef& h,
                                          int max_order = kDefaultMaxOrder);

/// Minimal parallel telescoper of a compatible family with parts in any
/// number of similarity classes, merged by lclm.
/// Throws NotCompatible, CrossClassNonzero.
ParallelTelescoperResult paratele_compatible(const std::vector<HElement>& f, int max_order = kDefaultMaxOrder);

/// Some nonzero P in Q(t)<Dt> killing every D_{x_i}(f_j) - D_{x_j}(f_i), or
/// nullopt when none exists (and then no parallel telescoper exists).
std::optional<OreOp> existence_check(const std::vector<HElement>& f);

/// Compatible inputs go to paratele_compatible.  Otherwise returns L * P with
/// P from existence_check, flagged not minimal.
/// Throws NoParallelTelescoperExists.
ParallelTelescoperResult paratele_general(const std::vector<HElement>& f, int max_order = kDefaultMaxOrder);

/// Direct check of L(f_i) == D_{x_i}(g) for all i and L free of the x_i.
bool verify_parallel(const std::vector<HElement>& f, const ParallelTelescoperResult& r);

}  // namespace ptel
