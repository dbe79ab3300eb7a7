#include "lsca/grading.hpp"

namespace lsca {

AbelianGroup::AbelianGroup(std::vector<long> ord) : orders(std::move(ord)) {
    for (long n : orders)
        if (n < 0 || n == 1)
            throw error("group orders must be 0 (free factor) or >= 2, got " + std::to_string(n));
}

GroupElement AbelianGroup::reduce(std::vector<long> exponents) const {
    if (exponents.size() != orders.size())
        throw error("group element has " + std::to_string(exponents.size()) +
                    " exponents, group has rank " + std::to_string(orders.size()));
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] == 0) continue;
        exponents[i] %= orders[i];
        if (exponents[i] < 0) exponents[i] += orders[i];
    }
    return GroupElement{std::move(exponents)};
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    if (a.e.size() != b.e.size() || a.e.size() != orders.size())
        throw error("group element rank mismatch in add");
    std::vector<long> out(orders.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.e[i] + b.e[i];
    return reduce(std::move(out));
}

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    if (a.e.size() != b.e.size() || a.e.size() != orders.size())
        throw error("group element rank mismatch in sub");
    std::vector<long> out(orders.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.e[i] - b.e[i];
    return reduce(std::move(out));
}

GroupElement AbelianGroup::scale(long k, const GroupElement& a) const {
    if (a.e.size() != orders.size()) throw error("group element rank mismatch in scale");
    std::vector<long> out(orders.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = k * a.e[i];
    return reduce(std::move(out));
}

CycScalar Bicharacter::eval(const GroupElement& a, const GroupElement& c) const {
    const std::size_t n = group.rank();
    if (a.e.size() != n || c.e.size() != n)
        throw error("bicharacter eval: element rank does not match group rank");
    CycScalar out(1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.e[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (c.e[j] == 0) continue;
            out *= table[i][j].pow(a.e[i] * c.e[j]);
        }
    }
    return out;
}

BicharacterReport validate_bicharacter(const Bicharacter& b) {
    const std::size_t n = b.group.rank();
    if (b.table.size() != n) throw error("bicharacter table must be square with side = rank");
    for (const auto& row : b.table)
        if (row.size() != n) throw error("bicharacter table must be square with side = rank");

    BicharacterReport report;
    auto flag = [&](std::size_t i, std::size_t j, std::string what) {
        report.ok = false;
        report.violations.push_back({i, j, std::move(what)});
    };
    const CycScalar one(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const CycScalar& v = b.table[i][j];
            if (v.is_zero()) {
                flag(i, j, "entry is zero");
                continue;
            }
            if (j >= i && !(v * b.table[j][i] == one))
                flag(i, j, "skew-symmetry fails: eps(g_i,g_j)*eps(g_j,g_i) = " +
                               (v * b.table[j][i]).str());
            if (b.group.orders[i] > 0 && !(v.pow(b.group.orders[i]) == one))
                flag(i, j, "order compatibility fails: eps(g_i,g_j)^" +
                               std::to_string(b.group.orders[i]) + " = " +
                               v.pow(b.group.orders[i]).str());
            if (b.group.orders[j] > 0 && !(v.pow(b.group.orders[j]) == one))
                flag(i, j, "order compatibility fails: eps(g_i,g_j)^" +
                               std::to_string(b.group.orders[j]) + " = " +
                               v.pow(b.group.orders[j]).str());
        }
    }
    return report;
}

}  // namespace lsca
