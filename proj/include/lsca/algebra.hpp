// Finite-dimensional graded algebras given by structure constants, the
// left-symmetric color identity, the associated color bracket, bimodules,
// and homogeneous linear operators.
//
// Structural invariants (shapes, grading compatibility) are enforced by the
// validate_* functions, which throw lsca::error; mathematical verdicts (does
// the identity hold?) come back as reports.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lsca/grading.hpp"
#include "lsca/linalg.hpp"

namespace lsca {

struct GradedAlgebra {
    Bicharacter eps;
    std::vector<GroupElement> degrees;          // degree of each basis vector
    std::vector<std::vector<CycVector>> sc;     // sc[i][j] = coordinates of e_i * e_j

    std::size_t dim() const { return degrees.size(); }
    const AbelianGroup& group() const { return eps.group; }

    // eps(|e_i|, |e_j|).
    CycScalar eps_deg(std::size_t i, std::size_t j) const {
        return eps.eval(degrees[i], degrees[j]);
    }
};

// Shape, bicharacter, and grading-compatibility checks; throws on violation.
void validate_algebra(const GradedAlgebra& a);

// Bilinear extension of the structure constants.
CycVector multiply(const GradedAlgebra& a, const CycVector& x, const CycVector& y);

// Degree of a homogeneous vector; nullopt for the zero vector; throws when
// nonzero coordinates sit in different degrees.
std::optional<GroupElement> homogeneous_degree(const std::vector<GroupElement>& degrees,
                                               const CycVector& v);

struct LeftSymmetryReport {
    struct Failure {
        std::size_t i, j, k;
        CycVector residual;
    };
    bool ok = true;
    std::vector<Failure> failures;
    std::size_t triples_checked = 0;
};

// Checks (e_i e_j)e_k - e_i(e_j e_k) = eps(|e_i|,|e_j|)[(e_j e_i)e_k - e_j(e_i e_k)]
// on all basis triples; bilinearity extends the verdict to all elements.
LeftSymmetryReport verify_left_symmetric(const GradedAlgebra& a);

// [x, y] = xy - eps(|x|,|y|) yx for homogeneous x, y (zero vectors allowed).
CycVector color_bracket(const GradedAlgebra& a, const CycVector& x, const CycVector& y);
CycVector color_bracket_basis(const GradedAlgebra& a, std::size_t i, std::size_t j);

struct Bimodule {
    std::vector<GroupElement> degrees;        // degree of each carrier vector
    std::vector<std::vector<CycVector>> left;   // left[i][u] = e_i . m_u
    std::vector<std::vector<CycVector>> right;  // right[u][i] = m_u . e_i

    std::size_t dim() const { return degrees.size(); }
};

// Carrier = the algebra itself, acting by multiplication on both sides.
Bimodule standard_bimodule(const GradedAlgebra& a);

void validate_bimodule(const GradedAlgebra& a, const Bimodule& v);

CycVector left_act(const GradedAlgebra& a, const Bimodule& v, const CycVector& x,
                   const CycVector& m);
CycVector right_act(const GradedAlgebra& a, const Bimodule& v, const CycVector& m,
                    const CycVector& x);

// Homogeneous linear operator P : A -> A of degree |P|; column j holds the
// coordinates of P(e_j).
struct GradedLinOp {
    GroupElement degree;
    CycMatrix matrix;
};

// matrix[i][j] != 0 requires degrees[i] = degrees[j] + |P|; throws otherwise.
void validate_linop(const GradedAlgebra& a, const GradedLinOp& p);

GradedLinOp identity_op(const GradedAlgebra& a);
GradedLinOp compose(const GradedAlgebra& a, const GradedLinOp& p, const GradedLinOp& q);
GradedLinOp linop_power(const GradedAlgebra& a, const GradedLinOp& p, unsigned k);

inline CycVector apply_op(const GradedLinOp& p, const CycVector& x) { return matvec(p.matrix, x); }

}  // namespace lsca
