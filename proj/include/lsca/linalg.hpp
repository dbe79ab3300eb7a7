// Dense exact linear algebra over cyclotomic scalars.
//
// Everything reduces to one row-echelon routine; reduced row echelon form is
// unique, so kernel bases and particular solutions are canonical regardless
// of the pivot-selection heuristic (which only affects intermediate cost).

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lsca/cyclotomic.hpp"

namespace lsca {

using CycVector = std::vector<CycScalar>;

struct CycMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<CycScalar> a;  // row-major, rows*cols entries

    CycMatrix() = default;
    CycMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    CycScalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const CycScalar& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static CycMatrix identity(std::size_t n);
    bool is_zero() const;

    friend bool operator==(const CycMatrix& x, const CycMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const CycMatrix& x, const CycMatrix& y) { return !(x == y); }
};

CycMatrix matmul(const CycMatrix& x, const CycMatrix& y);
CycVector matvec(const CycMatrix& x, const CycVector& v);

std::size_t rank(CycMatrix m);

// Basis of { v : M v = 0 }, one vector per free column (ascending), with the
// free coordinate set to 1; canonical because RREF is unique.
std::vector<CycVector> kernel_basis(const CycMatrix& m);

struct LinearSolution {
    CycVector particular;           // free variables set to 0
    std::vector<CycVector> kernel;  // kernel_basis of the matrix
};

// Full solution set of M x = b, or nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const CycMatrix& m, const CycVector& b);

}  // namespace lsca
