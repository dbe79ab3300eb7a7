#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace lsca;

namespace {

CycVector basis(std::size_t n, std::size_t i) {
    CycVector v(n);
    v[i] = CycScalar(1);
    return v;
}

}  // namespace

TEST_CASE("validation accepts the fixtures and rejects broken variants") {
    GradedAlgebra a = fixtures::super3();
    CHECK_NOTHROW(validate_algebra(a));
    CHECK_NOTHROW(validate_algebra(fixtures::dim2(CycScalar(1))));

    // A product component outside the degree sum violates the grading.
    GradedAlgebra broken = a;
    broken.sc[0][0][1] = CycScalar(1);  // |x|+|x| = 0 but |y1| = 1
    CHECK_THROWS_AS(validate_algebra(broken), error);

    GradedAlgebra empty;
    empty.eps.group = AbelianGroup({2});
    empty.eps.table = {{CycScalar(-1)}};
    CHECK_THROWS_AS(validate_algebra(empty), error);

    GradedAlgebra badeps = a;
    badeps.eps.table = {{CycScalar::root_of_unity(4)}};
    CHECK_THROWS_AS(validate_algebra(badeps), error);
}

TEST_CASE("multiplication follows the structure constants bilinearly") {
    GradedAlgebra a = fixtures::super3();
    const std::size_t n = a.dim();
    CycVector x = basis(n, 0), y1 = basis(n, 1), y2 = basis(n, 2);

    CHECK(multiply(a, x, x) == CycVector{CycScalar(2), CycScalar(0), CycScalar(0)});
    CHECK(multiply(a, y1, y2) == CycVector{CycScalar(1), CycScalar(0), CycScalar(0)});
    CHECK(multiply(a, y2, y1) == CycVector{CycScalar(-1), CycScalar(0), CycScalar(0)});
    CHECK(multiply(a, CycVector(n), y1) == CycVector(n));

    GradedAlgebra b = fixtures::dim2(CycScalar(1));
    CHECK(multiply(b, basis(2, 0), basis(2, 0)) == CycVector{CycScalar(0), CycScalar(1)});

    CHECK_THROWS_AS(multiply(a, basis(2, 0), x), error);
}

TEST_CASE("left-symmetric color identity holds on the fixtures") {
    LeftSymmetryReport r = verify_left_symmetric(fixtures::super3());
    CHECK(r.ok);
    CHECK(r.triples_checked == 27);
    CHECK(r.failures.empty());

    for (CycScalar alpha : {CycScalar(1), CycScalar(2), CycScalar::root_of_unity(4)})
        CHECK(verify_left_symmetric(fixtures::dim2(alpha)).ok);
}

TEST_CASE("a perturbed product breaks the identity") {
    GradedAlgebra a = fixtures::super3();
    a.sc[0][1][1] = CycScalar(2);  // x y1 = 2 y1
    LeftSymmetryReport r = verify_left_symmetric(a);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.failures.empty());
}

TEST_CASE("identity extends to random homogeneous triples by bilinearity") {
    GradedAlgebra a = fixtures::super3();
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coef(-4, 4);
    // Homogeneous vectors: degree 0 = span{x}, degree 1 = span{y1,y2}.
    auto random_homog = [&](int parity) {
        CycVector v(3);
        if (parity == 0) {
            v[0] = CycScalar(coef(rng));
        } else {
            v[1] = CycScalar(coef(rng));
            v[2] = CycScalar(coef(rng));
        }
        return v;
    };
    std::uniform_int_distribution<int> par(0, 1);
    for (int t = 0; t < 50; ++t) {
        CycVector x = random_homog(par(rng)), y = random_homog(par(rng)),
                  z = random_homog(par(rng));
        std::optional<GroupElement> dx = homogeneous_degree(a.degrees, x);
        std::optional<GroupElement> dy = homogeneous_degree(a.degrees, y);
        if (!dx || !dy) continue;
        CycScalar e = a.eps.eval(*dx, *dy);
        CycVector lhs1 = multiply(a, multiply(a, x, y), z);
        CycVector lhs2 = multiply(a, x, multiply(a, y, z));
        CycVector rhs1 = multiply(a, multiply(a, y, x), z);
        CycVector rhs2 = multiply(a, y, multiply(a, x, z));
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(lhs1[k] - lhs2[k] == e * (rhs1[k] - rhs2[k]));
    }
}

TEST_CASE("color bracket") {
    GradedAlgebra a = fixtures::super3();
    // [y1, y2] = y1y2 - (-1) y2y1 = x + (-x) = 0.
    CHECK(color_bracket(a, basis(3, 1), basis(3, 2)) == CycVector(3));
    CHECK(color_bracket_basis(a, 1, 2) == CycVector(3));
    // [x, 0] = 0.
    CHECK(color_bracket(a, basis(3, 0), CycVector(3)) == CycVector(3));

    // dim2 with eps(|x|,|x|) = -1: [x,x] = x^2 - (-1) x^2 = 2 alpha y.
    GradedAlgebra b = fixtures::dim2(CycScalar(3));
    CHECK(color_bracket(b, basis(2, 0), basis(2, 0)) ==
          CycVector{CycScalar(0), CycScalar(6)});

    // eps-antisymmetry [x,y] = -eps(|x|,|y|)[y,x] on random homogeneous pairs.
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-3, 3), par(0, 1);
    for (int t = 0; t < 30; ++t) {
        CycVector x(3), y(3);
        if (par(rng)) {
            x[0] = CycScalar(coef(rng));
        } else {
            x[1] = CycScalar(coef(rng));
            x[2] = CycScalar(coef(rng));
        }
        if (par(rng)) {
            y[0] = CycScalar(coef(rng));
        } else {
            y[1] = CycScalar(coef(rng));
            y[2] = CycScalar(coef(rng));
        }
        std::optional<GroupElement> dx = homogeneous_degree(a.degrees, x);
        std::optional<GroupElement> dy = homogeneous_degree(a.degrees, y);
        if (!dx || !dy) continue;
        CycScalar e = a.eps.eval(*dx, *dy);
        CycVector xy = color_bracket(a, x, y), yx = color_bracket(a, y, x);
        for (std::size_t k = 0; k < 3; ++k) CHECK(xy[k] == -(e * yx[k]));
    }

    CycVector mixed{CycScalar(1), CycScalar(1), CycScalar(0)};
    CHECK_THROWS_AS(color_bracket(a, mixed, basis(3, 0)), error);
}

TEST_CASE("standard bimodule mirrors the multiplication") {
    GradedAlgebra a = fixtures::super3();
    Bimodule v = standard_bimodule(a);
    CHECK_NOTHROW(validate_bimodule(a, v));
    CHECK(v.dim() == 3);
    // Left action of x on (x, y1, y2) is diag(2, 1, 1).
    CHECK(left_act(a, v, basis(3, 0), basis(3, 0)) == multiply(a, basis(3, 0), basis(3, 0)));
    for (std::size_t u = 0; u < 3; ++u) {
        CHECK(left_act(a, v, basis(3, 0), basis(3, u)) == multiply(a, basis(3, 0), basis(3, u)));
        CHECK(right_act(a, v, basis(3, u), basis(3, 0)) == multiply(a, basis(3, u), basis(3, 0)));
    }

    GradedAlgebra b = fixtures::dim2(CycScalar(5));
    Bimodule w = standard_bimodule(b);
    CHECK(left_act(b, w, basis(2, 0), basis(2, 0)) == CycVector{CycScalar(0), CycScalar(5)});
    CHECK(left_act(b, w, basis(2, 0), basis(2, 1)) == CycVector(2));

    // Grading violations in a hand-edited action are caught.
    Bimodule bad = v;
    bad.left[1][1][1] = CycScalar(1);  // |y1|+|y1| = 0 but m_1 has degree 1
    CHECK_THROWS_AS(validate_bimodule(a, bad), error);
}

TEST_CASE("graded linear operators") {
    GradedAlgebra a = fixtures::super3();
    GradedLinOp id = identity_op(a);
    CHECK_NOTHROW(validate_linop(a, id));

    // Degree-0 diagonal operator.
    GradedLinOp d{a.group().zero(), CycMatrix::identity(3)};
    d.matrix.at(0, 0) = CycScalar(7);
    CHECK_NOTHROW(validate_linop(a, d));
    CHECK(apply_op(d, CycVector{CycScalar(1), CycScalar(1), CycScalar(0)}) ==
          CycVector{CycScalar(7), CycScalar(1), CycScalar(0)});

    // x |-> y1 is homogeneous of degree 1, not of degree 0.
    GradedLinOp shift{a.group().reduce({1}), CycMatrix(3, 3)};
    shift.matrix.at(1, 0) = CycScalar(1);
    CHECK_NOTHROW(validate_linop(a, shift));
    GradedLinOp mislabeled{a.group().zero(), shift.matrix};
    CHECK_THROWS_AS(validate_linop(a, mislabeled), error);

    // Powers compose degrees and matrices; squaring the shift lands in y1 x = 0.
    GradedLinOp sq = linop_power(a, shift, 2);
    CHECK(sq.degree == a.group().zero());
    CHECK(sq.matrix.is_zero());
    CHECK(linop_power(a, d, 0).matrix == CycMatrix::identity(3));
    GradedLinOp d2 = compose(a, d, d);
    CHECK(d2.matrix.at(0, 0) == CycScalar(49));
}
