#include "lsca/cochain.hpp"

#include <algorithm>
#include <set>

namespace lsca {

namespace {

// Does the relation force e_i ^ e_i = 0 in the exterior power?
bool strict_at(const GradedAlgebra& a, std::size_t i) {
    return a.eps_deg(i, i) == CycScalar(1);
}

void extend_tuples(const GradedAlgebra& a, std::size_t len, ExtTuple& cur,
                   std::vector<ExtTuple>& out) {
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    std::size_t lo = cur.empty() ? 0 : cur.back();
    for (std::size_t i = lo; i < a.dim(); ++i) {
        if (!cur.empty() && i == cur.back() && strict_at(a, i)) continue;
        cur.push_back(i);
        extend_tuples(a, len, cur, out);
        cur.pop_back();
    }
}

// Canonical form of an exterior tuple: sorts non-decreasing, accumulating
// -eps(|u|,|v|) per adjacent transposition; nullopt when the tuple collapses
// (repeated index with self-pairing +1).
std::optional<std::pair<CycScalar, ExtTuple>> normalize_ext(const GradedAlgebra& a, ExtTuple t) {
    CycScalar sign(1);
    for (std::size_t i = 1; i < t.size(); ++i)
        for (std::size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
            sign *= -a.eps_deg(t[j - 1], t[j]);
            std::swap(t[j], t[j - 1]);
        }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1] && strict_at(a, t[i])) return std::nullopt;
    return std::make_pair(std::move(sign), std::move(t));
}

std::size_t ext_rank(const std::vector<ExtTuple>& list, const ExtTuple& t) {
    auto it = std::lower_bound(list.begin(), list.end(), t);
    if (it == list.end() || *it != t) throw error("internal: exterior tuple not in basis");
    return static_cast<std::size_t>(it - list.begin());
}

CycVector act_left_basis(const Bimodule& v, std::size_t i, const CycVector& m) {
    CycVector out(v.dim());
    for (std::size_t u = 0; u < m.size(); ++u) {
        if (m[u].is_zero()) continue;
        for (std::size_t w = 0; w < out.size(); ++w)
            if (!v.left[i][u][w].is_zero()) out[w] += m[u] * v.left[i][u][w];
    }
    return out;
}

CycVector act_right_basis(const Bimodule& v, const CycVector& m, std::size_t i) {
    CycVector out(v.dim());
    for (std::size_t u = 0; u < m.size(); ++u) {
        if (m[u].is_zero()) continue;
        for (std::size_t w = 0; w < out.size(); ++w)
            if (!v.right[u][i][w].is_zero()) out[w] += m[u] * v.right[u][i][w];
    }
    return out;
}

void axpy(CycVector& acc, const CycScalar& c, const CycVector& x) {
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (!x[k].is_zero()) acc[k] += c * x[k];
}

}  // namespace

std::vector<ExtTuple> exterior_basis(const GradedAlgebra& a, std::size_t n) {
    if (n < 1) throw error("exterior_basis: arity must be at least 1");
    std::vector<ExtTuple> out;
    ExtTuple cur;
    extend_tuples(a, n - 1, cur, out);
    return out;
}

Cochain zero_cochain(const GradedAlgebra& a, const Bimodule& v, std::size_t n,
                     const GroupElement& degree) {
    Cochain f;
    f.arity = n;
    f.degree = degree;
    f.table.assign(exterior_basis(a, n).size(),
                   std::vector<CycVector>(a.dim(), CycVector(v.dim())));
    return f;
}

bool cochain_is_zero(const Cochain& f) {
    for (const auto& row : f.table)
        for (const CycVector& val : row)
            for (const CycScalar& x : val)
                if (!x.is_zero()) return false;
    return true;
}

Cochain cochain_add(const Cochain& f, const Cochain& g) {
    if (f.arity != g.arity || !(f.degree == g.degree))
        throw error("cochain_add: arity or degree mismatch");
    Cochain out = f;
    for (std::size_t e = 0; e < out.table.size(); ++e)
        for (std::size_t l = 0; l < out.table[e].size(); ++l)
            for (std::size_t t = 0; t < out.table[e][l].size(); ++t)
                out.table[e][l][t] += g.table[e][l][t];
    return out;
}

Cochain cochain_scale(const CycScalar& c, const Cochain& f) {
    Cochain out = f;
    for (auto& row : out.table)
        for (CycVector& val : row)
            for (CycScalar& x : val) x *= c;
    return out;
}

CycVector eval_cochain(const GradedAlgebra& a, const Bimodule& v, const Cochain& f,
                       const std::vector<std::size_t>& args) {
    if (args.size() != f.arity) throw error("eval_cochain: argument count must equal arity");
    ExtTuple head(args.begin(), args.end() - 1);
    auto norm = normalize_ext(a, std::move(head));
    if (!norm) return CycVector(v.dim());
    std::vector<ExtTuple> list = exterior_basis(a, f.arity);
    const CycVector& val = f.table[ext_rank(list, norm->second)][args.back()];
    CycVector out(v.dim());
    axpy(out, norm->first, val);
    return out;
}

CycVector eval_cochain_multi(const GradedAlgebra& a, const Bimodule& v, const Cochain& f,
                             const std::vector<CycVector>& args) {
    if (args.size() != f.arity) throw error("eval_cochain_multi: argument count must equal arity");
    const std::size_t n = f.arity;
    CycVector out(v.dim());
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        CycScalar c(1);
        bool skip = false;
        for (std::size_t k = 0; k < n && !skip; ++k) {
            if (args[k][idx[k]].is_zero())
                skip = true;
            else
                c *= args[k][idx[k]];
        }
        if (!skip) axpy(out, c, eval_cochain(a, v, f, idx));
        // advance the multi-index
        std::size_t k = 0;
        while (k < n && ++idx[k] == a.dim()) idx[k++] = 0;
        if (k == n) break;
    }
    return out;
}

Cochain apply_coboundary(const GradedAlgebra& a, const Bimodule& v, const Cochain& f) {
    const std::size_t n = f.arity;
    const AbelianGroup& g = a.group();
    Cochain out = zero_cochain(a, v, n + 1, f.degree);
    std::vector<ExtTuple> ext_out = exterior_basis(a, n + 1);

    for (std::size_t e = 0; e < ext_out.size(); ++e) {
        for (std::size_t last = 0; last < a.dim(); ++last) {
            // args[k] is x_{k+1}; the formula below uses 1-based i, j.
            std::vector<std::size_t> args = ext_out[e];
            args.push_back(last);
            CycVector acc(v.dim());

            auto drop = [&](std::size_t skip) {
                std::vector<std::size_t> rest;
                rest.reserve(n);
                for (std::size_t k = 0; k < args.size(); ++k)
                    if (k != skip) rest.push_back(args[k]);
                return rest;
            };

            for (std::size_t i1 = 0; i1 < n; ++i1) {
                CycScalar sign(i1 % 2 == 0 ? 1 : -1);  // (-1)^{i+1}, i = i1+1

                // First sum: eps(|f| + sum_{j<i} |x_j|, |x_i|) x_i f(..,x_i^,..,x_{n+1}).
                GroupElement front = f.degree;
                for (std::size_t j = 0; j < i1; ++j) front = g.add(front, a.degrees[args[j]]);
                CycScalar c1 = sign * a.eps.eval(front, a.degrees[args[i1]]);
                axpy(acc, c1, act_left_basis(v, args[i1], eval_cochain(a, v, f, drop(i1))));

                // Second and third sums share eps(|x_i|, sum_{j=i+1..n} |x_j|).
                GroupElement tail = g.zero();
                for (std::size_t j = i1 + 1; j < n; ++j) tail = g.add(tail, a.degrees[args[j]]);
                CycScalar c23 = sign * a.eps.eval(a.degrees[args[i1]], tail);

                std::vector<std::size_t> rotated;  // (x_1,..,x_i^,..,x_n, x_i)
                rotated.reserve(n);
                for (std::size_t k = 0; k < n; ++k)
                    if (k != i1) rotated.push_back(args[k]);
                rotated.push_back(args[i1]);
                axpy(acc, c23, act_right_basis(v, eval_cochain(a, v, f, rotated), last));

                const CycVector& prod = a.sc[args[i1]][last];  // x_i x_{n+1}
                for (std::size_t k = 0; k < prod.size(); ++k) {
                    if (prod[k].is_zero()) continue;
                    rotated.back() = k;
                    axpy(acc, -(c23 * prod[k]), eval_cochain(a, v, f, rotated));
                }

                // Fourth sum: brackets [x_j, x_i] into slot j, x_i removed.
                for (std::size_t j1 = 0; j1 < i1; ++j1) {
                    GroupElement mid = g.zero();
                    for (std::size_t s = j1 + 1; s < i1; ++s) mid = g.add(mid, a.degrees[args[s]]);
                    CycScalar c4 = sign * a.eps.eval(mid, a.degrees[args[i1]]);
                    CycVector br = color_bracket_basis(a, args[j1], args[i1]);
                    std::vector<std::size_t> inner = drop(i1);
                    for (std::size_t k = 0; k < br.size(); ++k) {
                        if (br[k].is_zero()) continue;
                        inner[j1] = k;
                        axpy(acc, c4 * br[k], eval_cochain(a, v, f, inner));
                    }
                }
            }
            out.table[e][last] = std::move(acc);
        }
    }
    return out;
}

std::vector<CochainPosition> cochain_basis(const GradedAlgebra& a, const Bimodule& v,
                                           std::size_t n, const GroupElement& c) {
    const AbelianGroup& g = a.group();
    std::vector<CochainPosition> out;
    std::vector<ExtTuple> ext = exterior_basis(a, n);
    for (std::size_t e = 0; e < ext.size(); ++e) {
        GroupElement base = c;
        for (std::size_t k : ext[e]) base = g.add(base, a.degrees[k]);
        for (std::size_t last = 0; last < a.dim(); ++last) {
            GroupElement target_deg = g.add(base, a.degrees[last]);
            for (std::size_t t = 0; t < v.dim(); ++t)
                if (v.degrees[t] == target_deg) out.push_back({e, last, t});
        }
    }
    return out;
}

CycVector cochain_to_coords(const GradedAlgebra& a, const Bimodule& v, const Cochain& f,
                            const GroupElement& c) {
    const AbelianGroup& g = a.group();
    std::vector<ExtTuple> ext = exterior_basis(a, f.arity);
    // Homogeneity: nonzero values must sit in the degree-c target component.
    for (std::size_t e = 0; e < ext.size(); ++e) {
        GroupElement base = c;
        for (std::size_t k : ext[e]) base = g.add(base, a.degrees[k]);
        for (std::size_t last = 0; last < a.dim(); ++last) {
            GroupElement target_deg = g.add(base, a.degrees[last]);
            for (std::size_t t = 0; t < v.dim(); ++t)
                if (!f.table[e][last][t].is_zero() && !(v.degrees[t] == target_deg))
                    throw error("cochain is not homogeneous of the requested degree");
        }
    }
    std::vector<CochainPosition> pos = cochain_basis(a, v, f.arity, c);
    CycVector out(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i)
        out[i] = f.table[pos[i].ext][pos[i].last][pos[i].target];
    return out;
}

Cochain cochain_from_coords(const GradedAlgebra& a, const Bimodule& v, std::size_t n,
                            const GroupElement& c, const CycVector& coords) {
    std::vector<CochainPosition> pos = cochain_basis(a, v, n, c);
    if (coords.size() != pos.size())
        throw error("cochain_from_coords: coordinate count does not match the component basis");
    Cochain f = zero_cochain(a, v, n, c);
    for (std::size_t i = 0; i < pos.size(); ++i)
        f.table[pos[i].ext][pos[i].last][pos[i].target] = coords[i];
    return f;
}

CycMatrix coboundary_matrix(const GradedAlgebra& a, const Bimodule& v, std::size_t n,
                            const GroupElement& c) {
    std::vector<CochainPosition> dom = cochain_basis(a, v, n, c);
    std::vector<CochainPosition> cod = cochain_basis(a, v, n + 1, c);
    CycMatrix m(cod.size(), dom.size());
    for (std::size_t j = 0; j < dom.size(); ++j) {
        CycVector unit(dom.size());
        unit[j] = CycScalar(1);
        Cochain image = apply_coboundary(a, v, cochain_from_coords(a, v, n, c, unit));
        CycVector col = cochain_to_coords(a, v, image, c);
        for (std::size_t i = 0; i < cod.size(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

namespace {

std::size_t rank_of_rows(const std::vector<CycVector>& rows, std::size_t width) {
    CycMatrix m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) m.at(i, j) = rows[i][j];
    return rank(std::move(m));
}

}  // namespace

CohomologyReport cohomology(const GradedAlgebra& a, const Bimodule& v, std::size_t n,
                            const GroupElement& c) {
    CohomologyReport rep;
    rep.arity = n;
    rep.degree = c;
    rep.dim_cochains = cochain_basis(a, v, n, c).size();

    CycMatrix dn = coboundary_matrix(a, v, n, c);
    std::vector<CycVector> cocycles = kernel_basis(dn);
    rep.dim_cocycles = cocycles.size();

    std::vector<CycVector> span;  // rows spanning B^n_c, then chosen representatives
    if (n > 1) {
        CycMatrix prev = coboundary_matrix(a, v, n - 1, c);
        rep.dim_coboundaries = rank(prev);
        for (std::size_t j = 0; j < prev.cols; ++j) {
            CycVector col(prev.rows);
            for (std::size_t i = 0; i < prev.rows; ++i) col[i] = prev.at(i, j);
            span.push_back(std::move(col));
        }
    }
    rep.dim_cohomology = rep.dim_cocycles - rep.dim_coboundaries;

    std::size_t base_rank = rank_of_rows(span, rep.dim_cochains);
    for (const CycVector& z : cocycles) {
        if (rep.representatives.size() == rep.dim_cohomology) break;
        span.push_back(z);
        std::size_t r = rank_of_rows(span, rep.dim_cochains);
        if (r > base_rank) {
            base_rank = r;
            rep.representatives.push_back(cochain_from_coords(a, v, n, c, z));
        } else {
            span.pop_back();
        }
    }
    return rep;
}

std::vector<GroupElement> occurring_degrees(const GradedAlgebra& a, const Bimodule& v,
                                            std::size_t n) {
    const AbelianGroup& g = a.group();
    std::set<GroupElement> found;
    for (const ExtTuple& t : exterior_basis(a, n)) {
        GroupElement in = g.zero();
        for (std::size_t k : t) in = g.add(in, a.degrees[k]);
        for (std::size_t last = 0; last < a.dim(); ++last) {
            GroupElement total = g.add(in, a.degrees[last]);
            for (std::size_t w = 0; w < v.dim(); ++w)
                found.insert(g.sub(v.degrees[w], total));
        }
    }
    return std::vector<GroupElement>(found.begin(), found.end());
}

ComplexReport check_complex(const GradedAlgebra& a, const Bimodule& v, std::size_t n_max) {
    if (n_max < 2) throw error("check_complex: n_max must be at least 2");
    ComplexReport rep;
    for (std::size_t n = 1; n + 1 <= n_max; ++n) {
        for (const GroupElement& c : occurring_degrees(a, v, n)) {
            CycMatrix dn = coboundary_matrix(a, v, n, c);
            CycMatrix dn1 = coboundary_matrix(a, v, n + 1, c);
            ++rep.composites_checked;
            if (!matmul(dn1, dn).is_zero()) {
                rep.ok = false;
                rep.violations.push_back({n, c});
            }
        }
    }
    return rep;
}

}  // namespace lsca
