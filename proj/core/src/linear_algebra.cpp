#include "hypsum/linear_algebra.hpp"

#include <cassert>

namespace hypsum {

namespace {

// Reduced row echelon form; returns pivot column per row (-1 past rank).
// Pivot choice favours entries with few terms to limit expression growth.
std::vector<int> rref(RFMatrix& m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::vector<int> pivot_col(rows, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_size = ~std::size_t(0);
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            std::size_t sz = m[i][c].num().term_count() + m[i][c].den().term_count();
            if (sz < best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best == rows) continue;
        std::swap(m[r], m[best]);
        RationalFunction inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            RationalFunction f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col[r] = int(c);
        ++r;
    }
    return pivot_col;
}

} // namespace

std::optional<RFVector> linear_solve(RFMatrix a, RFVector b) {
    std::size_t rows = a.size();
    assert(b.size() == rows);
    std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref(a);
    RFVector x(cols, RationalFunction());
    for (std::size_t i = 0; i < rows; ++i) {
        if (pivots[i] >= 0) {
            if (pivots[i] == int(cols)) return std::nullopt; // 0 = nonzero
            x[pivots[i]] = a[i][cols];
        } else if (!a[i][cols].is_zero()) {
            return std::nullopt;
        }
    }
    // Rows past the last pivot may still be inconsistent.
    for (std::size_t i = 0; i < rows; ++i) {
        if (pivots[i] == int(cols)) return std::nullopt;
    }
    return x;
}

std::vector<RFVector> kernel_basis(RFMatrix a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int pc : pivots)
        if (pc >= 0) is_pivot[pc] = true;
    std::vector<RFVector> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        RFVector v(cols, RationalFunction());
        v[free_col] = RationalFunction(Rational(1));
        for (std::size_t i = 0; i < rows; ++i) {
            if (pivots[i] < 0) continue;
            v[pivots[i]] = -a[i][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace hypsum
