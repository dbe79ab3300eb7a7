// Hand-built fixture algebras shared across test binaries. These duplicate
// the catalog constructions on purpose, so catalog tests can compare against
// an independent encoding.

#pragma once

#include <tuple>
#include <vector>

#include "lsca/cochain.hpp"

namespace fixtures {

// Three-dimensional superalgebra: basis (x, y1, y2) = (e0, e1, e2) over Z_2
// with degrees (0, 1, 1) and the super sign; nonzero products
// xx = 2x, xy1 = y1, xy2 = y2, y1y2 = x, y2y1 = -x.
inline lsca::GradedAlgebra super3() {
    using namespace lsca;
    GradedAlgebra a;
    a.eps.group = AbelianGroup({2});
    a.eps.table = {{CycScalar(-1)}};
    a.degrees = {a.eps.group.reduce({0}), a.eps.group.reduce({1}), a.eps.group.reduce({1})};
    a.sc.assign(3, std::vector<CycVector>(3, CycVector(3)));
    a.sc[0][0][0] = CycScalar(2);
    a.sc[0][1][1] = CycScalar(1);
    a.sc[0][2][2] = CycScalar(1);
    a.sc[1][2][0] = CycScalar(1);
    a.sc[2][1][0] = CycScalar(-1);
    return a;
}

// Two-dimensional algebra with a single nonzero product x*x = alpha*y, graded
// over Z with |x| = 1, |y| = 2 and eps(1,1) = q (default -1).
inline lsca::GradedAlgebra dim2(const lsca::CycScalar& alpha,
                                const lsca::CycScalar& q = lsca::CycScalar(-1)) {
    using namespace lsca;
    GradedAlgebra a;
    a.eps.group = AbelianGroup({0});
    a.eps.table = {{q}};
    a.degrees = {a.eps.group.reduce({1}), a.eps.group.reduce({2})};
    a.sc.assign(2, std::vector<CycVector>(2, CycVector(2)));
    a.sc[0][0][1] = alpha;
    return a;
}

// Sparse 2-cochain over the standard bimodule: entries (i, j, k, coeff)
// meaning f(e_i, e_j) += coeff * e_k.
inline lsca::Cochain sparse2(
    const lsca::GradedAlgebra& a, const lsca::Bimodule& v, const lsca::GroupElement& deg,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, lsca::CycScalar>>&
        entries) {
    lsca::Cochain f = lsca::zero_cochain(a, v, 2, deg);
    for (const auto& [i, j, k, c] : entries) f.table[i][j][k] += c;
    return f;
}

// The three-parameter cocycle family of the super3 fixture: f(x,x) = r x,
// f(x,y1) = s y2, f(x,y2) = t y1 + r y2.
inline lsca::Cochain rst(const lsca::GradedAlgebra& a, const lsca::Bimodule& v,
                         const lsca::CycScalar& r, const lsca::CycScalar& s,
                         const lsca::CycScalar& t) {
    return sparse2(a, v, a.group().zero(),
                   {{0, 0, 0, r}, {0, 1, 2, s}, {0, 2, 1, t}, {0, 2, 2, r}});
}

}  // namespace fixtures
