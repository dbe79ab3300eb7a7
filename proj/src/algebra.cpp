#include "lsca/algebra.hpp"

namespace lsca {

void validate_algebra(const GradedAlgebra& a) {
    const std::size_t n = a.dim();
    if (n == 0) throw error("algebra must have positive dimension");
    BicharacterReport br = validate_bicharacter(a.eps);
    if (!br.ok) {
        std::string msg = "invalid bicharacter:";
        for (const auto& v : br.violations)
            msg += " (" + std::to_string(v.i) + "," + std::to_string(v.j) + ") " + v.what + ";";
        throw error(msg);
    }
    for (const GroupElement& d : a.degrees)
        if (d.e.size() != a.group().rank())
            throw error("basis degree rank does not match grading group");
    if (a.sc.size() != n) throw error("structure tensor must have dim rows");
    for (std::size_t i = 0; i < n; ++i) {
        if (a.sc[i].size() != n) throw error("structure tensor must have dim columns");
        for (std::size_t j = 0; j < n; ++j) {
            if (a.sc[i][j].size() != n) throw error("structure tensor entries must have dim coordinates");
            GroupElement sum = a.group().add(a.degrees[i], a.degrees[j]);
            for (std::size_t k = 0; k < n; ++k)
                if (!a.sc[i][j][k].is_zero() && !(a.degrees[k] == sum))
                    throw error("grading violation: product e_" + std::to_string(i) + " e_" +
                                std::to_string(j) + " has a component on e_" + std::to_string(k) +
                                " outside degree |e_i|+|e_j|");
        }
    }
}

CycVector multiply(const GradedAlgebra& a, const CycVector& x, const CycVector& y) {
    const std::size_t n = a.dim();
    if (x.size() != n || y.size() != n) throw error("multiply: vector length must equal dim");
    CycVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            CycScalar c = x[i] * y[j];
            const CycVector& prod = a.sc[i][j];
            for (std::size_t k = 0; k < n; ++k)
                if (!prod[k].is_zero()) out[k] += c * prod[k];
        }
    }
    return out;
}

std::optional<GroupElement> homogeneous_degree(const std::vector<GroupElement>& degrees,
                                               const CycVector& v) {
    std::optional<GroupElement> deg;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!deg) {
            deg = degrees[i];
        } else if (!(*deg == degrees[i])) {
            throw error("vector is not homogeneous: nonzero coordinates in distinct degrees");
        }
    }
    return deg;
}

LeftSymmetryReport verify_left_symmetric(const GradedAlgebra& a) {
    const std::size_t n = a.dim();
    LeftSymmetryReport report;
    auto basis = [n](std::size_t i) {
        CycVector v(n);
        v[i] = CycScalar(1);
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CycScalar e_ij = a.eps_deg(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                CycVector ek = basis(k);
                CycVector lhs = multiply(a, a.sc[i][j], ek);
                CycVector tmp = multiply(a, basis(i), multiply(a, basis(j), ek));
                CycVector rhs1 = multiply(a, a.sc[j][i], ek);
                CycVector rhs2 = multiply(a, basis(j), multiply(a, basis(i), ek));
                CycVector residual(n);
                bool nonzero = false;
                for (std::size_t t = 0; t < n; ++t) {
                    residual[t] = lhs[t] - tmp[t] - e_ij * (rhs1[t] - rhs2[t]);
                    nonzero = nonzero || !residual[t].is_zero();
                }
                ++report.triples_checked;
                if (nonzero) {
                    report.ok = false;
                    report.failures.push_back({i, j, k, std::move(residual)});
                }
            }
        }
    return report;
}

CycVector color_bracket(const GradedAlgebra& a, const CycVector& x, const CycVector& y) {
    std::optional<GroupElement> dx = homogeneous_degree(a.degrees, x);
    std::optional<GroupElement> dy = homogeneous_degree(a.degrees, y);
    if (!dx || !dy) return CycVector(a.dim());
    CycScalar e = a.eps.eval(*dx, *dy);
    CycVector xy = multiply(a, x, y), yx = multiply(a, y, x);
    CycVector out(a.dim());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = xy[k] - e * yx[k];
    return out;
}

CycVector color_bracket_basis(const GradedAlgebra& a, std::size_t i, std::size_t j) {
    CycScalar e = a.eps_deg(i, j);
    CycVector out(a.dim());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.sc[i][j][k] - e * a.sc[j][i][k];
    return out;
}

Bimodule standard_bimodule(const GradedAlgebra& a) {
    Bimodule v;
    v.degrees = a.degrees;
    v.left = a.sc;
    v.right = a.sc;  // right[u][i] = e_u * e_i = sc[u][i]
    return v;
}

void validate_bimodule(const GradedAlgebra& a, const Bimodule& v) {
    const std::size_t n = a.dim(), m = v.dim();
    if (m == 0) throw error("bimodule carrier must have positive dimension");
    for (const GroupElement& d : v.degrees)
        if (d.e.size() != a.group().rank())
            throw error("bimodule degree rank does not match grading group");
    if (v.left.size() != n || v.right.size() != m)
        throw error("bimodule action tensors have wrong shape");
    for (std::size_t i = 0; i < n; ++i) {
        if (v.left[i].size() != m) throw error("bimodule left action has wrong shape");
        for (std::size_t u = 0; u < m; ++u) {
            if (v.left[i][u].size() != m) throw error("bimodule left action has wrong shape");
            GroupElement sum = a.group().add(a.degrees[i], v.degrees[u]);
            for (std::size_t w = 0; w < m; ++w)
                if (!v.left[i][u][w].is_zero() && !(v.degrees[w] == sum))
                    throw error("grading violation in left action at e_" + std::to_string(i) +
                                " . m_" + std::to_string(u));
        }
    }
    for (std::size_t u = 0; u < m; ++u) {
        if (v.right[u].size() != n) throw error("bimodule right action has wrong shape");
        for (std::size_t i = 0; i < n; ++i) {
            if (v.right[u][i].size() != m) throw error("bimodule right action has wrong shape");
            GroupElement sum = a.group().add(v.degrees[u], a.degrees[i]);
            for (std::size_t w = 0; w < m; ++w)
                if (!v.right[u][i][w].is_zero() && !(v.degrees[w] == sum))
                    throw error("grading violation in right action at m_" + std::to_string(u) +
                                " . e_" + std::to_string(i));
        }
    }
}

CycVector left_act(const GradedAlgebra& a, const Bimodule& v, const CycVector& x,
                   const CycVector& m) {
    if (x.size() != a.dim() || m.size() != v.dim()) throw error("left_act: dimension mismatch");
    CycVector out(v.dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t u = 0; u < m.size(); ++u) {
            if (m[u].is_zero()) continue;
            CycScalar c = x[i] * m[u];
            for (std::size_t w = 0; w < out.size(); ++w)
                if (!v.left[i][u][w].is_zero()) out[w] += c * v.left[i][u][w];
        }
    }
    return out;
}

CycVector right_act(const GradedAlgebra& a, const Bimodule& v, const CycVector& m,
                    const CycVector& x) {
    if (x.size() != a.dim() || m.size() != v.dim()) throw error("right_act: dimension mismatch");
    CycVector out(v.dim());
    for (std::size_t u = 0; u < m.size(); ++u) {
        if (m[u].is_zero()) continue;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].is_zero()) continue;
            CycScalar c = m[u] * x[i];
            for (std::size_t w = 0; w < out.size(); ++w)
                if (!v.right[u][i][w].is_zero()) out[w] += c * v.right[u][i][w];
        }
    }
    return out;
}

void validate_linop(const GradedAlgebra& a, const GradedLinOp& p) {
    const std::size_t n = a.dim();
    if (p.matrix.rows != n || p.matrix.cols != n)
        throw error("operator matrix must be dim x dim");
    if (p.degree.e.size() != a.group().rank())
        throw error("operator degree rank does not match grading group");
    for (std::size_t j = 0; j < n; ++j) {
        GroupElement target = a.group().add(a.degrees[j], p.degree);
        for (std::size_t i = 0; i < n; ++i)
            if (!p.matrix.at(i, j).is_zero() && !(a.degrees[i] == target))
                throw error("operator is not homogeneous of the declared degree: entry (" +
                            std::to_string(i) + "," + std::to_string(j) + ") is nonzero");
    }
}

GradedLinOp identity_op(const GradedAlgebra& a) {
    return GradedLinOp{a.group().zero(), CycMatrix::identity(a.dim())};
}

GradedLinOp compose(const GradedAlgebra& a, const GradedLinOp& p, const GradedLinOp& q) {
    GradedLinOp out{a.group().add(p.degree, q.degree), matmul(p.matrix, q.matrix)};
    validate_linop(a, out);
    return out;
}

GradedLinOp linop_power(const GradedAlgebra& a, const GradedLinOp& p, unsigned k) {
    GradedLinOp out = identity_op(a);
    for (unsigned t = 0; t < k; ++t) out = compose(a, out, p);
    return out;
}

}  // namespace lsca
