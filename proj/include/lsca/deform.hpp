// Formal deformations of the multiplication, the star product, order-by-order
// verification, obstruction/extension solving, and equivalence transport.
//
// A deformation is the finite list of 2-cochain terms f_1..f_p (f_0 = mu is
// implicit); all identities in the formal parameter are checked coefficient-
// wise, which is exact and avoids power-series arithmetic. All 2-cochains
// here live over the standard bimodule in degree 0.

#pragma once

#include <optional>

#include "lsca/cochain.hpp"

namespace lsca {

// The multiplication as a 2-cochain of degree 0 over the standard bimodule.
Cochain multiplication_cochain(const GradedAlgebra& a);

// (f*g)(x,y,z) = f(g(x,y),z) - f(x,g(y,z))
//              - eps(|x|,|y|) [ f(g(y,x),z) - f(y,g(x,z)) ]
// for arity-2 f, g; the result is an arity-3 cochain of degree |f| + |g|.
Cochain star(const GradedAlgebra& a, const Cochain& f, const Cochain& g);

struct Deformation {
    std::vector<Cochain> terms;  // f_1, ..., f_p (arity 2, degree 0)

    std::size_t order() const { return terms.size(); }
};

// Shape invariants of the term list; throws on violation.
void validate_deformation(const GradedAlgebra& a, const Deformation& d);

struct DeformationReport {
    bool ok = true;
    std::size_t degrees_checked = 0;  // formal-parameter degrees 0 .. 2*order
    // First failure, when any: the degree p with sum_{i+j=p} f_i*f_j != 0 and
    // the basis triple/coordinate where it is nonzero.
    std::optional<std::size_t> failing_degree;
    std::vector<std::size_t> failing_args;
    std::size_t failing_coordinate = 0;
};

// Checks sum_{i+j=p} f_i * f_j = 0 (f_0 = mu) for every p from 0 through
// 2*order; beyond that all summands vanish.
DeformationReport verify_deformation(const GradedAlgebra& a, const Deformation& d);

// d_2(f1) = 0: the first-order condition for extending mu by f1.
bool infinitesimal_cocycle_check(const GradedAlgebra& a, const Cochain& f1);

// Matrix of f |-> mu*f + f*mu on degree-0 coordinates (C^2_0 -> C^3_0): the
// linear operator acting on the unknown top term of an extension.
CycMatrix extension_matrix(const GradedAlgebra& a);

struct ObstructionReport {
    std::size_t order = 0;  // the order p being extended to
    Cochain obstruction;    // sum_{i=1}^{p-1} f_i * f_{p-i}
    bool obstruction_is_cocycle = false;
    bool extension_exists = false;
    Cochain particular;                  // an f_p solving the extension equation
    std::vector<Cochain> solution_kernel;  // all solutions = particular + span
    bool nontrivial = false;             // a nonzero f_p exists
};

// Extends a verified order-(p-1) deformation by one order: computes the
// obstruction, asserts it is a 3-cocycle, and solves the linear extension
// equation for f_p, returning the full affine solution set.
ObstructionReport obstruction_and_extend(const GradedAlgebra& a, const Deformation& d);

struct EquivalenceMap {
    std::vector<Cochain> terms;  // p_1, ..., p_q (arity 1, degree 0); p_0 = id

    std::size_t order() const { return terms.size(); }
};

void validate_equivalence_map(const GradedAlgebra& a, const EquivalenceMap& p);

// Solves sum_{i+j+s=p} f_s(p_i x, p_j y) = sum_{i+j=p} p_i(e_j(x,y)) for the
// transported terms e_1..e_order (e_0 = mu).
Deformation transport(const GradedAlgebra& a, const Deformation& d, const EquivalenceMap& p,
                      std::size_t order);

// A degree-0 map p1 with d_1(p1) = e1 - f1, when the difference is a
// coboundary; inputs must be cocycles. The particular solution has all free
// coordinates zero.
std::optional<Cochain> infinitesimal_equivalence(const GradedAlgebra& a, const Cochain& f1,
                                                 const Cochain& e1);

}  // namespace lsca
