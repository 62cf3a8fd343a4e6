#pragma once

// Integer residues of rational functions at simple poles, and the rational
// functions whose logarithmic derivative is a given one.

#include <optional>
#include <string>
#include <vector>

#include "ptel/ratfun.hpp"

namespace ptel {

struct ResiduePiece {
    MPoly factor;  // normalized, positive degree in v
    BigInt residue;
};

/// Let s be squarefree of positive degree in v and coprime to cofactor.
/// Considers f = num / (cofactor * s) at the roots of s and splits s into
/// the pieces on which the residue of f is a constant integer.  Returns
/// nullopt when some residue is not an integer constant; when notes is
/// given, a line is added if the residue function was non-constant.
std::optional<std::vector<ResiduePiece>> integer_residues(const MPoly& num, const MPoly& cofactor, const MPoly& s, int v,
                                                          std::vector<std::string>* notes = nullptr);

/// The pieces of s on which the residue is a constant integer, whether or
/// not they cover s; *complete tells whether they do.
std::vector<ResiduePiece> integer_residue_pieces(const MPoly& num, const MPoly& cofactor, const MPoly& s, int v,
                                                 bool* complete, std::vector<std::string>* notes = nullptr);

/// A rational function q with derive(q, v) / q == f, if one exists, taken
/// as a product of normalized polynomials (constant factor 1).  Factors of q
/// free of v are not determined and are omitted.
std::optional<RatFun> log_derivative_preimage(const RatFun& f, int v, std::vector<std::string>* notes = nullptr);

}  // namespace ptel
