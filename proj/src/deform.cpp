#include "lsca/deform.hpp"

#include <string>

namespace lsca {

namespace {

CycVector unit_vector(std::size_t dim, std::size_t i) {
    CycVector u(dim);
    u[i] = CycScalar(1);
    return u;
}

bool term_shape_ok(const GradedAlgebra& a, const Cochain& f, std::size_t arity) {
    const std::size_t dim = a.dim();
    if (f.arity != arity || !(f.degree == a.group().zero())) return false;
    const std::size_t ext = exterior_basis(a, arity).size();
    if (f.table.size() != ext) return false;
    for (const auto& row : f.table) {
        if (row.size() != dim) return false;
        for (const auto& val : row)
            if (val.size() != dim) return false;
    }
    return true;
}

}  // namespace

Cochain multiplication_cochain(const GradedAlgebra& a) {
    Cochain mu;
    mu.arity = 2;
    mu.degree = a.group().zero();
    mu.table = a.sc;
    return mu;
}

Cochain star(const GradedAlgebra& a, const Cochain& f, const Cochain& g) {
    if (f.arity != 2 || g.arity != 2) throw error("star: both factors must have arity 2");
    const Bimodule v = standard_bimodule(a);
    const std::size_t dim = a.dim();

    Cochain h;
    h.arity = 3;
    h.degree = a.group().add(f.degree, g.degree);
    const auto pairs = exterior_basis(a, 3);
    h.table.assign(pairs.size(), std::vector<CycVector>(dim, CycVector(dim)));

    for (std::size_t e = 0; e < pairs.size(); ++e) {
        const std::size_t x = pairs[e][0], y = pairs[e][1];
        const CycVector ex = unit_vector(dim, x), ey = unit_vector(dim, y);
        const CycScalar exy = a.eps_deg(x, y);
        for (std::size_t z = 0; z < dim; ++z) {
            const CycVector ez = unit_vector(dim, z);
            CycVector acc = eval_cochain_multi(a, v, f, {eval_cochain(a, v, g, {x, y}), ez});
            const CycVector fxgyz = eval_cochain_multi(a, v, f, {ex, eval_cochain(a, v, g, {y, z})});
            const CycVector fgyxz = eval_cochain_multi(a, v, f, {eval_cochain(a, v, g, {y, x}), ez});
            const CycVector fygxz = eval_cochain_multi(a, v, f, {ey, eval_cochain(a, v, g, {x, z})});
            for (std::size_t k = 0; k < dim; ++k) {
                acc[k] -= fxgyz[k];
                acc[k] -= exy * (fgyxz[k] - fygxz[k]);
            }
            h.table[e][z] = acc;
        }
    }
    return h;
}

void validate_deformation(const GradedAlgebra& a, const Deformation& d) {
    for (std::size_t i = 0; i < d.terms.size(); ++i)
        if (!term_shape_ok(a, d.terms[i], 2))
            throw error("deformation term " + std::to_string(i + 1) +
                        ": expected an arity-2 cochain of degree 0 over the algebra");
}

DeformationReport verify_deformation(const GradedAlgebra& a, const Deformation& d) {
    validate_deformation(a, d);
    const Bimodule v = standard_bimodule(a);
    const Cochain mu = multiplication_cochain(a);
    const auto pairs = exterior_basis(a, 3);
    const std::size_t order = d.order();

    auto term = [&](std::size_t i) -> const Cochain& { return i == 0 ? mu : d.terms[i - 1]; };

    DeformationReport rep;
    for (std::size_t p = 0; p <= 2 * order; ++p) {
        Cochain sum = zero_cochain(a, v, 3, a.group().zero());
        for (std::size_t i = 0; i <= p; ++i) {
            const std::size_t j = p - i;
            if (i > order || j > order) continue;
            sum = cochain_add(sum, star(a, term(i), term(j)));
        }
        ++rep.degrees_checked;
        for (std::size_t e = 0; e < sum.table.size() && rep.ok; ++e)
            for (std::size_t last = 0; last < sum.table[e].size() && rep.ok; ++last)
                for (std::size_t k = 0; k < sum.table[e][last].size(); ++k)
                    if (!sum.table[e][last][k].is_zero()) {
                        rep.ok = false;
                        rep.failing_degree = p;
                        rep.failing_args = pairs[e];
                        rep.failing_args.push_back(last);
                        rep.failing_coordinate = k;
                        break;
                    }
        if (!rep.ok) break;
    }
    return rep;
}

bool infinitesimal_cocycle_check(const GradedAlgebra& a, const Cochain& f1) {
    if (!term_shape_ok(a, f1, 2))
        throw error("infinitesimal term: expected an arity-2 cochain of degree 0 over the algebra");
    const Bimodule v = standard_bimodule(a);
    return cochain_is_zero(apply_coboundary(a, v, f1));
}

CycMatrix extension_matrix(const GradedAlgebra& a) {
    const Bimodule v = standard_bimodule(a);
    const GroupElement c0 = a.group().zero();
    const Cochain mu = multiplication_cochain(a);
    const std::size_t cols = cochain_basis(a, v, 2, c0).size();
    const std::size_t rows = cochain_basis(a, v, 3, c0).size();

    CycMatrix s(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        CycVector e(cols);
        e[j] = CycScalar(1);
        const Cochain f = cochain_from_coords(a, v, 2, c0, e);
        const Cochain h = cochain_add(star(a, mu, f), star(a, f, mu));
        const CycVector col = cochain_to_coords(a, v, h, c0);
        for (std::size_t r = 0; r < rows; ++r) s.at(r, j) = col[r];
    }
    return s;
}

ObstructionReport obstruction_and_extend(const GradedAlgebra& a, const Deformation& d) {
    if (d.order() == 0) throw error("obstruction_and_extend: need at least an order-1 deformation");
    const DeformationReport base = verify_deformation(a, d);
    if (!base.ok)
        throw error("obstruction_and_extend: input fails the deformation identity at degree " +
                    std::to_string(*base.failing_degree));

    const Bimodule v = standard_bimodule(a);
    const GroupElement c0 = a.group().zero();
    const std::size_t p = d.order() + 1;

    ObstructionReport rep;
    rep.order = p;
    rep.obstruction = zero_cochain(a, v, 3, c0);
    for (std::size_t i = 1; i <= p - 1; ++i)
        rep.obstruction = cochain_add(rep.obstruction, star(a, d.terms[i - 1], d.terms[p - i - 1]));

    rep.obstruction_is_cocycle = cochain_is_zero(apply_coboundary(a, v, rep.obstruction));
    if (!rep.obstruction_is_cocycle)
        throw error("obstruction_and_extend: obstruction is not a cocycle; the input data are "
                    "inconsistent");

    const CycMatrix s = extension_matrix(a);
    CycVector rhs = cochain_to_coords(a, v, rep.obstruction, c0);
    for (auto& c : rhs) c = -c;

    rep.particular = zero_cochain(a, v, 2, c0);
    if (const auto sol = solve_linear(s, rhs)) {
        rep.extension_exists = true;
        rep.particular = cochain_from_coords(a, v, 2, c0, sol->particular);
        for (const auto& k : sol->kernel)
            rep.solution_kernel.push_back(cochain_from_coords(a, v, 2, c0, k));
        rep.nontrivial = !cochain_is_zero(rep.particular) || !rep.solution_kernel.empty();
    }
    return rep;
}

void validate_equivalence_map(const GradedAlgebra& a, const EquivalenceMap& p) {
    for (std::size_t i = 0; i < p.terms.size(); ++i)
        if (!term_shape_ok(a, p.terms[i], 1))
            throw error("equivalence-map term " + std::to_string(i + 1) +
                        ": expected an arity-1 cochain of degree 0 over the algebra");
}

Deformation transport(const GradedAlgebra& a, const Deformation& d, const EquivalenceMap& p,
                      std::size_t order) {
    validate_deformation(a, d);
    validate_equivalence_map(a, p);
    const Bimodule v = standard_bimodule(a);
    const GroupElement c0 = a.group().zero();
    const std::size_t dim = a.dim();
    const std::size_t q = p.order();
    const Cochain mu = multiplication_cochain(a);

    // p_i applied to a coordinate vector; p_0 = id, p_i = 0 beyond the map's order.
    auto apply_p = [&](std::size_t i, const CycVector& x) -> CycVector {
        if (i == 0) return x;
        if (i > q) return CycVector(dim);
        return eval_cochain_multi(a, v, p.terms[i - 1], {x});
    };

    std::vector<Cochain> e;  // e[0] = mu, then the transported terms
    e.push_back(mu);
    for (std::size_t deg = 1; deg <= order; ++deg) {
        Cochain acc = zero_cochain(a, v, 2, c0);
        for (std::size_t u = 0; u < dim; ++u) {
            const CycVector eu = unit_vector(dim, u);
            for (std::size_t w = 0; w < dim; ++w) {
                const CycVector ew = unit_vector(dim, w);
                CycVector val(dim);
                // sum over i+j+s = deg of f_s(p_i x, p_j y)
                for (std::size_t s = 0; s <= std::min(deg, d.order()); ++s) {
                    const Cochain& fs = s == 0 ? mu : d.terms[s - 1];
                    for (std::size_t i = 0; i + s <= deg; ++i) {
                        const std::size_t j = deg - s - i;
                        if ((i > 0 && i > q) || (j > 0 && j > q)) continue;
                        const CycVector contrib =
                            eval_cochain_multi(a, v, fs, {apply_p(i, eu), apply_p(j, ew)});
                        for (std::size_t k = 0; k < dim; ++k) val[k] += contrib[k];
                    }
                }
                // minus sum over i+j = deg, j < deg of p_i(e_j(x,y))
                for (std::size_t j = 0; j < deg; ++j) {
                    const std::size_t i = deg - j;
                    if (i > q) continue;
                    const CycVector inner = apply_p(i, e[j].table[u][w]);
                    for (std::size_t k = 0; k < dim; ++k) val[k] -= inner[k];
                }
                acc.table[u][w] = val;
            }
        }
        e.push_back(acc);
    }
    return Deformation{std::vector<Cochain>(e.begin() + 1, e.end())};
}

std::optional<Cochain> infinitesimal_equivalence(const GradedAlgebra& a, const Cochain& f1,
                                                 const Cochain& e1) {
    if (!infinitesimal_cocycle_check(a, f1) || !infinitesimal_cocycle_check(a, e1))
        throw error("infinitesimal_equivalence: both inputs must be 2-cocycles");
    const Bimodule v = standard_bimodule(a);
    const GroupElement c0 = a.group().zero();

    const Cochain diff = cochain_add(e1, cochain_scale(CycScalar(-1), f1));
    const CycVector rhs = cochain_to_coords(a, v, diff, c0);
    const CycMatrix d1 = coboundary_matrix(a, v, 1, c0);
    const auto sol = solve_linear(d1, rhs);
    if (!sol) return std::nullopt;
    return cochain_from_coords(a, v, 1, c0, sol->particular);
}

}  // namespace lsca
