#include "lsca/operators.hpp"

namespace lsca {

namespace {

CycVector unit_vector(std::size_t dim, std::size_t i) {
    CycVector u(dim);
    u[i] = CycScalar(1);
    return u;
}

void finish_residual(OperatorResidual& out, std::size_t i, std::size_t j, CycVector value) {
    std::size_t support = 0;
    for (const auto& c : value)
        if (!c.is_zero()) ++support;
    if (support > 0) {
        out.max_support += support;
        out.nonzero.push_back({i, j, std::move(value)});
    }
    ++out.pairs_checked;
}

}  // namespace

OperatorResidual nijenhuis_residual(const GradedAlgebra& a, const GradedLinOp& p) {
    validate_linop(a, p);
    const std::size_t dim = a.dim();
    OperatorResidual out;
    out.kind = "nijenhuis";

    for (std::size_t i = 0; i < dim; ++i) {
        const CycVector pi = apply_op(p, unit_vector(dim, i));
        const CycScalar c1 = a.eps.eval(a.group().add(p.degree, a.degrees[i]), p.degree);
        const CycScalar c2 = a.eps.eval(a.degrees[i], p.degree);
        for (std::size_t j = 0; j < dim; ++j) {
            const CycVector pj = apply_op(p, unit_vector(dim, j));
            CycVector res = multiply(a, pi, pj);
            const CycVector t1 = apply_op(p, multiply(a, pi, unit_vector(dim, j)));
            const CycVector t2 = apply_op(p, multiply(a, unit_vector(dim, i), pj));
            const CycVector t3 = apply_op(p, apply_op(p, a.sc[i][j]));
            for (std::size_t k = 0; k < dim; ++k) res[k] -= c1 * t1[k] + t2[k] - c2 * t3[k];
            finish_residual(out, i, j, std::move(res));
        }
    }
    return out;
}

OperatorResidual rota_baxter_residual(const GradedAlgebra& a, const GradedLinOp& p,
                                      const CycScalar& weight) {
    validate_linop(a, p);
    const std::size_t dim = a.dim();
    OperatorResidual out;
    out.kind = "rota-baxter";
    out.weight = weight;

    for (std::size_t i = 0; i < dim; ++i) {
        const CycVector pi = apply_op(p, unit_vector(dim, i));
        const CycScalar c1 = a.eps.eval(a.group().add(p.degree, a.degrees[i]), p.degree);
        for (std::size_t j = 0; j < dim; ++j) {
            const CycVector pj = apply_op(p, unit_vector(dim, j));
            CycVector res = multiply(a, pi, pj);
            const CycVector t1 = apply_op(p, multiply(a, pi, unit_vector(dim, j)));
            const CycVector t2 = apply_op(p, multiply(a, unit_vector(dim, i), pj));
            const CycVector t3 = apply_op(p, a.sc[i][j]);
            for (std::size_t k = 0; k < dim; ++k) res[k] -= c1 * t1[k] + t2[k] + weight * t3[k];
            finish_residual(out, i, j, std::move(res));
        }
    }
    return out;
}

PowerIdentityReport nijenhuis_power_identity(const GradedAlgebra& a, const GradedLinOp& p,
                                             unsigned i, unsigned j) {
    PowerIdentityReport rep;
    if (!nijenhuis_residual(a, p).zero()) {
        rep.violation = "P is not a Nijenhuis operator";
        return rep;
    }
    if (!(a.eps.eval(p.degree, p.degree) == CycScalar(1))) {
        rep.violation = "eps(|P|,|P|) != 1";
        return rep;
    }
    rep.hypothesis_ok = true;

    // linop_power revalidates homogeneity of every power it forms.
    const GradedLinOp pi = linop_power(a, p, i);
    const GradedLinOp pj = linop_power(a, p, j);
    const GradedLinOp pij = linop_power(a, p, i + j);
    const std::size_t dim = a.dim();
    rep.residual.kind = "nijenhuis";

    for (std::size_t x = 0; x < dim; ++x) {
        const CycVector pix = apply_op(pi, unit_vector(dim, x));
        const CycScalar c1 =
            a.eps.eval(a.group().add(pi.degree, a.degrees[x]), pj.degree);
        const CycScalar c2 = a.eps.eval(a.degrees[x], pj.degree);
        for (std::size_t y = 0; y < dim; ++y) {
            const CycVector pjy = apply_op(pj, unit_vector(dim, y));
            CycVector res = multiply(a, pix, pjy);
            const CycVector t1 = apply_op(pj, multiply(a, pix, unit_vector(dim, y)));
            const CycVector t2 = apply_op(pi, multiply(a, unit_vector(dim, x), pjy));
            const CycVector t3 = apply_op(pij, a.sc[x][y]);
            for (std::size_t k = 0; k < dim; ++k) res[k] -= c1 * t1[k] + t2[k] - c2 * t3[k];
            finish_residual(rep.residual, x, y, std::move(res));
        }
    }
    return rep;
}

CorrespondenceReport correspondence_checks(const GradedAlgebra& a, const GradedLinOp& p) {
    validate_linop(a, p);
    const std::size_t dim = a.dim();
    CorrespondenceReport rep;

    const GradedLinOp p2 = compose(a, p, p);
    const bool degree0 = p.degree == a.group().zero();
    rep.square_zero = p2.matrix.is_zero();
    rep.idempotent = p2.matrix == p.matrix && p2.degree == p.degree;
    rep.involutive_degree0 = degree0 && p2.matrix == CycMatrix::identity(dim);
    rep.nijenhuis = nijenhuis_residual(a, p).zero();

    rep.square_zero_on_products = true;
    for (std::size_t i = 0; i < dim && rep.square_zero_on_products; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (apply_op(p2, a.sc[i][j]) != CycVector(dim)) {
                rep.square_zero_on_products = false;
                break;
            }

    auto add_case = [&](const std::string& hypothesis, const std::string& statement,
                        bool lhs, bool rhs) {
        CorrespondenceCase c{hypothesis, statement, lhs, rhs, lhs == rhs};
        rep.all_agree = rep.all_agree && c.agree;
        rep.cases.push_back(std::move(c));
    };

    if (rep.square_zero)
        add_case("P^2 = 0", "nijenhuis <=> rota-baxter weight 0", rep.nijenhuis,
                 rota_baxter_residual(a, p, CycScalar(0)).zero());
    if (rep.idempotent)
        add_case("P^2 = P", "nijenhuis <=> rota-baxter weight -1", rep.nijenhuis,
                 rota_baxter_residual(a, p, CycScalar(-1)).zero());
    if (rep.involutive_degree0) {
        GradedLinOp plus = p, minus = p;
        for (std::size_t k = 0; k < dim; ++k) {
            plus.matrix.at(k, k) += CycScalar(1);
            minus.matrix.at(k, k) -= CycScalar(1);
        }
        add_case("P^2 = I, |P| = 0", "nijenhuis <=> P+I rota-baxter weight -2", rep.nijenhuis,
                 rota_baxter_residual(a, plus, CycScalar(-2)).zero());
        add_case("P^2 = I, |P| = 0", "nijenhuis <=> P-I rota-baxter weight 2", rep.nijenhuis,
                 rota_baxter_residual(a, minus, CycScalar(2)).zero());
    }
    if (rep.nijenhuis)
        add_case("P nijenhuis", "rota-baxter weight 0 <=> P^2 zero on products",
                 rota_baxter_residual(a, p, CycScalar(0)).zero(),
                 rep.square_zero_on_products);
    return rep;
}

}  // namespace lsca
