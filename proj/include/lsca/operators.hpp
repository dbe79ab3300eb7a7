// Nijenhuis and Rota-Baxter operators: residual computation on basis pairs,
// the power identity for Nijenhuis operators, and the biconditional checks
// tying the two operator families together on square-constrained operators.

#pragma once

#include <optional>
#include <string>

#include "lsca/algebra.hpp"

namespace lsca {

// Residual of a defining operator identity, evaluated on all basis pairs;
// bilinearity extends a zero verdict to all homogeneous elements.
struct OperatorResidual {
    struct Entry {
        std::size_t i, j;  // basis pair (e_i, e_j)
        CycVector value;
    };
    std::string kind;                 // "nijenhuis" or "rota-baxter"
    std::optional<CycScalar> weight;  // rota-baxter only
    std::size_t pairs_checked = 0;
    std::size_t max_support = 0;  // nonzero coordinates across all residual vectors
    std::vector<Entry> nonzero;   // pairs with a nonzero residual, row-major order

    bool zero() const { return nonzero.empty(); }
};

// residual(i,j) = P(e_i)P(e_j) - eps(|P|+|e_i|,|P|) P(P(e_i)e_j)
//               - P(e_i P(e_j)) + eps(|e_i|,|P|) P(P(e_i e_j)).
OperatorResidual nijenhuis_residual(const GradedAlgebra& a, const GradedLinOp& p);

// residual(i,j) = P(e_i)P(e_j) - eps(|P|+|e_i|,|P|) P(P(e_i)e_j)
//               - P(e_i P(e_j)) - weight * P(e_i e_j).
OperatorResidual rota_baxter_residual(const GradedAlgebra& a, const GradedLinOp& p,
                                      const CycScalar& weight);

struct PowerIdentityReport {
    bool hypothesis_ok = false;  // P Nijenhuis and eps(|P|,|P|) = 1
    std::string violation;       // which hypothesis failed, when any
    OperatorResidual residual;   // evaluated only when the hypothesis holds
};

// residual(x,y) = P^i(x)P^j(y) - eps(i|P|+|x|, j|P|) P^j(P^i(x)y)
//               - P^i(x P^j(y)) + eps(|x|, j|P|) P^{i+j}(xy);
// the powers are revalidated as homogeneous operators of degree k*|P|.
PowerIdentityReport nijenhuis_power_identity(const GradedAlgebra& a, const GradedLinOp& p,
                                             unsigned i, unsigned j);

// One verified biconditional between operator families.
struct CorrespondenceCase {
    std::string hypothesis;  // the structural condition that triggered the check
    std::string statement;   // the biconditional being compared
    bool lhs_zero = false;
    bool rhs_zero = false;
    bool agree = false;  // lhs_zero == rhs_zero
};

struct CorrespondenceReport {
    bool square_zero = false;              // P^2 = 0
    bool idempotent = false;               // P^2 = P
    bool involutive_degree0 = false;       // P^2 = I and |P| = 0
    bool nijenhuis = false;                // zero Nijenhuis residual
    bool square_zero_on_products = false;  // P^2 vanishes on the span of all e_i e_j
    std::vector<CorrespondenceCase> cases;
    bool all_agree = true;  // vacuously true when no hypothesis applies
};

// Detects which square conditions P satisfies and cross-checks each
// applicable equivalence: P^2 = 0 ties Nijenhuis to weight 0, P^2 = P to
// weight -1, P^2 = I (degree 0) ties it to P + I at weight -2 and P - I at
// weight 2, and for a Nijenhuis P weight 0 is equivalent to P^2 vanishing
// on products.
CorrespondenceReport correspondence_checks(const GradedAlgebra& a, const GradedLinOp& p);

}  // namespace lsca
