#pragma once

// Dense linear algebra over the field of rational functions.

#include <vector>

#include "ptel/ratfun.hpp"

namespace ptel {

using Vector = std::vector<RatFun>;
using Matrix = std::vector<Vector>;

struct Echelon {
    Matrix rows;              // reduced row echelon form, zero rows removed
    std::vector<int> pivots;  // pivot column of each row
};

/// Reduced row echelon form of an m x n matrix (all rows of equal length).
Echelon rref(Matrix m, int ncols);

/// Basis of {v : m v = 0}, one vector per free column in increasing column
/// order, with a 1 in that free column and 0 in every other free column.
std::vector<Vector> nullspace(const Matrix& m, int ncols);

RatFun determinant(Matrix m);

}  // namespace ptel
