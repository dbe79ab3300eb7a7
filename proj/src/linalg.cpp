#include "lsca/linalg.hpp"

#include <algorithm>

namespace lsca {

CycMatrix CycMatrix::identity(std::size_t n) {
    CycMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycScalar(1);
    return m;
}

bool CycMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const CycScalar& x) { return x.is_zero(); });
}

CycMatrix matmul(const CycMatrix& x, const CycMatrix& y) {
    if (x.cols != y.rows) throw error("matmul: dimension mismatch");
    CycMatrix out(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const CycScalar& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols; ++j) {
                const CycScalar& ykj = y.at(k, j);
                if (!ykj.is_zero()) out.at(i, j) += xik * ykj;
            }
        }
    return out;
}

CycVector matvec(const CycMatrix& x, const CycVector& v) {
    if (x.cols != v.size()) throw error("matvec: dimension mismatch");
    CycVector out(x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j)
            if (!x.at(i, j).is_zero() && !v[j].is_zero()) out[i] += x.at(i, j) * v[j];
    return out;
}

namespace {

// In-place reduced row echelon form over the first `lead_cols` columns
// (trailing columns ride along, for augmented systems). Pivot choice: the
// entry of largest support in the column, ties to the lowest row index.
// Returns the pivot column of each pivot row, in order.
std::vector<std::size_t> rref(CycMatrix& m, std::size_t lead_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < lead_cols && row < m.rows; ++col) {
        std::size_t best = m.rows;
        std::size_t best_support = 0;
        for (std::size_t r = row; r < m.rows; ++r) {
            std::size_t s = m.at(r, col).support();
            if (s > best_support) {
                best_support = s;
                best = r;
            }
        }
        if (best == m.rows) continue;  // column is zero below `row`
        if (best != row)
            for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(best, c));
        CycScalar inv = m.at(row, col).inverse();
        for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            CycScalar f = m.at(r, col);
            if (f.is_zero()) continue;
            for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<CycVector> kernel_from_rref(const CycMatrix& r,
                                        const std::vector<std::size_t>& pivots,
                                        std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<CycVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        CycVector v(cols);
        v[free] = CycScalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::size_t rank(CycMatrix m) { return rref(m, m.cols).size(); }

std::vector<CycVector> kernel_basis(const CycMatrix& m) {
    CycMatrix r = m;
    std::vector<std::size_t> pivots = rref(r, r.cols);
    return kernel_from_rref(r, pivots, m.cols);
}

std::optional<LinearSolution> solve_linear(const CycMatrix& m, const CycVector& b) {
    if (m.rows != b.size()) throw error("solve_linear: dimension mismatch");
    CycMatrix aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug, m.cols);
    for (std::size_t r = pivots.size(); r < m.rows; ++r)
        if (!aug.at(r, m.cols).is_zero()) return std::nullopt;
    LinearSolution sol;
    sol.particular.assign(m.cols, CycScalar(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug.at(i, m.cols);
    sol.kernel = kernel_from_rref(aug, pivots, m.cols);
    return sol;
}

}  // namespace lsca
