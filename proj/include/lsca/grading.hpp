// Finitely generated abelian grading groups and skew-symmetric bicharacters.
//
// A group is an explicit product of cyclic factors, order 0 meaning a free
// factor. Elements are exponent vectors reduced into [0, n_i) on finite
// factors. A bicharacter is specified by its values on generator pairs; the
// bicharacter laws extend it to all elements, so evaluation is a product of
// table entries raised to exponent products.

#pragma once

#include <string>
#include <vector>

#include "lsca/cyclotomic.hpp"

namespace lsca {

struct GroupElement {
    std::vector<long> e;

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.e == b.e; }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
    friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.e < b.e; }
};

struct AbelianGroup {
    std::vector<long> orders;  // each entry 0 (free factor) or >= 2 (cyclic)

    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<long> ord);

    std::size_t rank() const { return orders.size(); }
    GroupElement zero() const { return GroupElement{std::vector<long>(orders.size(), 0)}; }

    // Canonical form: exponent i reduced mod orders[i] into [0, orders[i])
    // when the factor is finite.
    GroupElement reduce(std::vector<long> exponents) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement scale(long k, const GroupElement& a) const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.orders == b.orders;
    }
};

struct Bicharacter {
    AbelianGroup group;
    std::vector<std::vector<CycScalar>> table;  // table[i][j] = eps(g_i, g_j)

    // eps(a, c) = prod_{i,j} table[i][j]^(a_i * c_j).
    CycScalar eval(const GroupElement& a, const GroupElement& c) const;
};

struct BicharacterReport {
    struct Violation {
        std::size_t i, j;
        std::string what;
    };
    bool ok = true;
    std::vector<Violation> violations;
};

// Checks the generator-table laws: every entry nonzero, skew-symmetry
// table[i][j]*table[j][i] = 1, and order compatibility table[i][j]^n = 1 for
// each finite factor order n touching the pair. Bilinearity holds by
// construction of eval and is not separately checked.
BicharacterReport validate_bicharacter(const Bicharacter& b);

}  // namespace lsca
