#include "ptel/linalg.hpp"

#include "ptel/errors.hpp"

namespace ptel {

namespace {

std::size_t weight(const RatFun& f) { return f.num().size() + f.den().size(); }

}  // namespace

Echelon rref(Matrix m, int ncols) {
    Echelon out;
    std::size_t top = 0;
    for (int col = 0; col < ncols && top < m.size(); ++col) {
        // The reduced form does not depend on the pivot; pick the lightest.
        std::size_t best = m.size();
        for (std::size_t r = top; r < m.size(); ++r)
            if (!m[r][col].is_zero() && (best == m.size() || weight(m[r][col]) < weight(m[best][col]))) best = r;
        if (best == m.size()) continue;
        std::swap(m[top], m[best]);
        RatFun inv = 1 / m[top][col];
        for (int c = col; c < ncols; ++c)
            if (!m[top][c].is_zero()) m[top][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == top || m[r][col].is_zero()) continue;
            RatFun f = m[r][col];
            for (int c = col; c < ncols; ++c)
                if (!m[top][c].is_zero()) m[r][c] -= f * m[top][c];
        }
        out.pivots.push_back(col);
        ++top;
    }
    m.resize(top);
    out.rows = std::move(m);
    return out;
}

std::vector<Vector> nullspace(const Matrix& m, int ncols) {
    Echelon e = rref(m, ncols);
    std::vector<bool> is_pivot(std::size_t(ncols), false);
    for (int p : e.pivots) is_pivot[std::size_t(p)] = true;
    std::vector<Vector> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[std::size_t(free)]) continue;
        Vector v(static_cast<std::size_t>(ncols));
        v[std::size_t(free)] = RatFun(1);
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[std::size_t(e.pivots[i])] = -e.rows[i][std::size_t(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

RatFun determinant(Matrix m) {
    const std::size_t n = m.size();
    RatFun det(1);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[col].size() != n) throw InvariantBreach("determinant of a non-square matrix");
        std::size_t best = n;
        for (std::size_t r = col; r < n; ++r)
            if (!m[r][col].is_zero() && (best == n || weight(m[r][col]) < weight(m[best][col]))) best = r;
        if (best == n) return RatFun();
        if (best != col) {
            std::swap(m[col], m[best]);
            det = -det;
        }
        det *= m[col][col];
        RatFun inv = 1 / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            RatFun f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c)
                if (!m[col][c].is_zero()) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace ptel
