#pragma once

// Defining operator of the parameterized Picard-Vessiot group of the system
// D_{x_i}(Y) = f_i with rational f_i: the minimal parallel telescoper of the
// f_i viewed over the trivial term.

#include <string>
#include <vector>

#include "ptel/ore.hpp"
#include "ptel/telescope.hpp"
#include "ptel/variables.hpp"

namespace ptel {

struct PpvResult {
    OreOp l;      // polynomial coefficients in t, as produced by paratele
    OreOp monic;  // l with leading coefficient 1, used in the group display
    RatFun g;     // l(f_i) == derive(g, x_i)
    std::string group_description;
};

/// Throws IncompatibleSystem when derive(f_j, x_i) != derive(f_i, x_j).
PpvResult ppv_defining_operator(const std::vector<RatFun>& f, const Variables& vars, int max_order = kDefaultMaxOrder);

/// "{ a ∈ F : (L)(a) = 0 }" with L rendered over vars.
std::string group_text(const OreOp& monic, const Variables& vars);

}  // namespace ptel
