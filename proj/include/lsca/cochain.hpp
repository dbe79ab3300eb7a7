// Graded cochain spaces, the coboundary operator as an exact matrix, and
// cohomology dimensions with representatives.
//
// C^n(A,V) = Hom((the (n-1)-th eps-exterior power of A) (x) A, V). A basis of
// the exterior power is indexed by non-decreasing tuples of basis indices,
// strictly increasing at repeats of an index whose self-pairing eps value is
// +1 (the relation x^x = 0 binds exactly there). Cochains are stored by
// their values on canonical tuples; evaluation on unsorted tuples reorders
// the first n-1 slots, accumulating a factor -eps(|u|,|v|) per adjacent
// transposition.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lsca/algebra.hpp"

namespace lsca {

using ExtTuple = std::vector<std::size_t>;

// Index tuples (length n-1) of the exterior-power basis underlying C^n,
// in lexicographic order. n = 1 yields the single empty tuple.
std::vector<ExtTuple> exterior_basis(const GradedAlgebra& a, std::size_t n);

struct Cochain {
    std::size_t arity = 1;
    GroupElement degree;  // |f|
    // table[ext][last] = value coordinates in V on the canonical tuple
    // (exterior_basis tuple #ext, last slot = basis index `last`).
    std::vector<std::vector<CycVector>> table;
};

Cochain zero_cochain(const GradedAlgebra& a, const Bimodule& v, std::size_t n,
                     const GroupElement& degree);
bool cochain_is_zero(const Cochain& f);
Cochain cochain_add(const Cochain& f, const Cochain& g);
Cochain cochain_scale(const CycScalar& c, const Cochain& f);

// Value on a basis-index tuple of length arity; the first arity-1 slots are
// brought to canonical order with the accumulated eps-sign (zero when a
// repeated index has self-pairing +1).
CycVector eval_cochain(const GradedAlgebra& a, const Bimodule& v, const Cochain& f,
                       const std::vector<std::size_t>& args);

// Multilinear extension to arbitrary coordinate-vector arguments.
CycVector eval_cochain_multi(const GradedAlgebra& a, const Bimodule& v, const Cochain& f,
                             const std::vector<CycVector>& args);

// The four-sum coboundary formula, evaluated on every canonical tuple of
// arity n+1; the result has the same degree as f.
Cochain apply_coboundary(const GradedAlgebra& a, const Bimodule& v, const Cochain& f);

// Coordinates of the degree-c component C^n_c: positions (ext, last, target)
// with deg_V(target) = c + sum of input degrees, ordered by exterior tuple,
// then last slot, then target coordinate.
struct CochainPosition {
    std::size_t ext, last, target;
};
std::vector<CochainPosition> cochain_basis(const GradedAlgebra& a, const Bimodule& v,
                                           std::size_t n, const GroupElement& c);

// Coordinate isomorphism between degree-c cochains and vectors over the
// canonical position list; to_coords throws when f has a nonzero value
// outside the degree-c component.
CycVector cochain_to_coords(const GradedAlgebra& a, const Bimodule& v, const Cochain& f,
                            const GroupElement& c);
Cochain cochain_from_coords(const GradedAlgebra& a, const Bimodule& v, std::size_t n,
                            const GroupElement& c, const CycVector& coords);

// Matrix of d_n restricted to degree c, w.r.t. the canonical bases of C^n_c
// (columns) and C^{n+1}_c (rows).
CycMatrix coboundary_matrix(const GradedAlgebra& a, const Bimodule& v, std::size_t n,
                            const GroupElement& c);

struct CohomologyReport {
    std::size_t arity = 0;
    GroupElement degree;
    std::size_t dim_cochains = 0;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    std::size_t dim_cohomology = 0;
    std::vector<Cochain> representatives;  // cocycles spanning a complement of B in Z
};

// Kernel/image dimensions of the coboundary at (n, c); B^1 := 0.
CohomologyReport cohomology(const GradedAlgebra& a, const Bimodule& v, std::size_t n,
                            const GroupElement& c);

// Degrees c with dim C^n_c > 0: all values deg_V(target) - sum of input
// degrees; every other graded component is zero.
std::vector<GroupElement> occurring_degrees(const GradedAlgebra& a, const Bimodule& v,
                                            std::size_t n);

struct ComplexReport {
    struct Violation {
        std::size_t n;
        GroupElement degree;
    };
    bool ok = true;
    std::vector<Violation> violations;
    std::size_t composites_checked = 0;
};

// Verifies d_{n+1} o d_n = 0 for 1 <= n < n_max over every occurring degree.
ComplexReport check_complex(const GradedAlgebra& a, const Bimodule& v, std::size_t n_max);

}  // namespace lsca
