#include "lsca/io.hpp"

#include <fstream>
#include <vector>

#include "lsca/cochain.hpp"

namespace lsca {

namespace {

using nlohmann::json;

const json& field(const json& doc, const char* key, const std::string& where) {
    if (!doc.is_object()) throw error(where + ": expected an object");
    auto it = doc.find(key);
    if (it == doc.end()) throw error(where + ": missing field '" + key + "'");
    return *it;
}

void check_version(const json& doc, const std::string& where) {
    const json& v = field(doc, "format_version", where);
    if (!v.is_number_integer() || v.get<int>() != kFormatVersion)
        throw error(where + ": unsupported format_version (expected " +
                    std::to_string(kFormatVersion) + ")");
}

long integer_in(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw error(where + ": expected an integer");
    return j.get<long>();
}

std::size_t index_in(const json& j, std::size_t bound, const std::string& where) {
    long n = integer_in(j, where);
    if (n < 0 || static_cast<std::size_t>(n) >= bound)
        throw error(where + ": index " + std::to_string(n) + " out of range (bound " +
                    std::to_string(bound) + ")");
    return static_cast<std::size_t>(n);
}

CycScalar scalar_in(const json& j, const std::string& where) {
    if (!j.is_string()) throw error(where + ": expected a scalar string");
    try {
        return CycScalar::parse(j.get<std::string>());
    } catch (const error& e) {
        throw error(where + ": " + e.what());
    }
}

GroupElement element_in(const AbelianGroup& g, const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != g.rank())
        throw error(where + ": expected " + std::to_string(g.rank()) + " exponents");
    std::vector<long> e;
    e.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        e.push_back(integer_in(j[i], where + "[" + std::to_string(i) + "]"));
    return g.reduce(std::move(e));
}

json element_out(const GroupElement& a) {
    json out = json::array();
    for (long x : a.e) out.push_back(x);
    return out;
}

json sparse_vector_entries(const CycVector& v, std::initializer_list<std::size_t> prefix) {
    json out = json::array();
    for (std::size_t w = 0; w < v.size(); ++w) {
        if (v[w].is_zero()) continue;
        json entry = json::array();
        for (std::size_t p : prefix) entry.push_back(p);
        entry.push_back(w);
        entry.push_back(v[w].str());
        out.push_back(std::move(entry));
    }
    return out;
}

void append_all(json& dst, json src) {
    for (auto& e : src) dst.push_back(std::move(e));
}

}  // namespace

json load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open document '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw error("document '" + path + "': " + e.what());
    }
}

json algebra_to_document(const GradedAlgebra& a) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["group"]["orders"] = a.group().orders;

    json table = json::array();
    for (const auto& row : a.eps.table) {
        json r = json::array();
        for (const CycScalar& c : row) r.push_back(c.str());
        table.push_back(std::move(r));
    }
    doc["bicharacter"] = std::move(table);

    json degrees = json::array();
    for (const GroupElement& d : a.degrees) degrees.push_back(element_out(d));
    doc["basis_degrees"] = std::move(degrees);

    json products = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            append_all(products, sparse_vector_entries(a.sc[i][j], {i, j}));
    doc["products"] = std::move(products);
    return doc;
}

json algebra_to_document(const GradedAlgebra& a, const Bimodule& v) {
    json doc = algebra_to_document(a);
    json bim;
    json degrees = json::array();
    for (const GroupElement& d : v.degrees) degrees.push_back(element_out(d));
    bim["degrees"] = std::move(degrees);

    json left = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t u = 0; u < v.dim(); ++u)
            append_all(left, sparse_vector_entries(v.left[i][u], {i, u}));
    bim["left"] = std::move(left);

    json right = json::array();
    for (std::size_t u = 0; u < v.dim(); ++u)
        for (std::size_t i = 0; i < a.dim(); ++i)
            append_all(right, sparse_vector_entries(v.right[u][i], {u, i}));
    bim["right"] = std::move(right);

    doc["bimodule"] = std::move(bim);
    return doc;
}

namespace {

Bimodule bimodule_from_document(const GradedAlgebra& a, const json& doc) {
    const std::string where = "bimodule";
    Bimodule v;
    const json& degrees = field(doc, "degrees", where);
    if (!degrees.is_array() || degrees.empty()) throw error(where + ".degrees: expected a nonempty array");
    for (std::size_t u = 0; u < degrees.size(); ++u)
        v.degrees.push_back(element_in(a.group(), degrees[u],
                                       where + ".degrees[" + std::to_string(u) + "]"));

    const std::size_t n = a.dim(), m = v.degrees.size();
    v.left.assign(n, std::vector<CycVector>(m, CycVector(m, CycScalar(0))));
    v.right.assign(m, std::vector<CycVector>(n, CycVector(m, CycScalar(0))));

    const json& left = field(doc, "left", where);
    if (!left.is_array()) throw error(where + ".left: expected an array");
    for (std::size_t k = 0; k < left.size(); ++k) {
        const std::string at = where + ".left[" + std::to_string(k) + "]";
        const json& e = left[k];
        if (!e.is_array() || e.size() != 4) throw error(at + ": expected [i, u, w, coeff]");
        std::size_t i = index_in(e[0], n, at), u = index_in(e[1], m, at), w = index_in(e[2], m, at);
        v.left[i][u][w] += scalar_in(e[3], at);
    }

    const json& right = field(doc, "right", where);
    if (!right.is_array()) throw error(where + ".right: expected an array");
    for (std::size_t k = 0; k < right.size(); ++k) {
        const std::string at = where + ".right[" + std::to_string(k) + "]";
        const json& e = right[k];
        if (!e.is_array() || e.size() != 4) throw error(at + ": expected [u, i, w, coeff]");
        std::size_t u = index_in(e[0], m, at), i = index_in(e[1], n, at), w = index_in(e[2], m, at);
        v.right[u][i][w] += scalar_in(e[3], at);
    }

    validate_bimodule(a, v);
    return v;
}

}  // namespace

ParsedAlgebra algebra_from_document(const json& doc) {
    const std::string where = "algebra document";
    check_version(doc, where);

    const json& group = field(doc, "group", where);
    const json& orders = field(group, "orders", where + ".group");
    if (!orders.is_array()) throw error(where + ".group.orders: expected an array");
    std::vector<long> ord;
    for (std::size_t i = 0; i < orders.size(); ++i)
        ord.push_back(integer_in(orders[i], where + ".group.orders[" + std::to_string(i) + "]"));

    GradedAlgebra a;
    a.eps.group = AbelianGroup(std::move(ord));
    const std::size_t rank = a.group().rank();

    const json& table = field(doc, "bicharacter", where);
    if (!table.is_array() || table.size() != rank)
        throw error(where + ".bicharacter: expected a " + std::to_string(rank) + "-row table");
    for (std::size_t i = 0; i < rank; ++i) {
        const std::string at = where + ".bicharacter[" + std::to_string(i) + "]";
        if (!table[i].is_array() || table[i].size() != rank)
            throw error(at + ": expected " + std::to_string(rank) + " entries");
        std::vector<CycScalar> row;
        for (std::size_t j = 0; j < rank; ++j)
            row.push_back(scalar_in(table[i][j], at + "[" + std::to_string(j) + "]"));
        a.eps.table.push_back(std::move(row));
    }

    const json& degrees = field(doc, "basis_degrees", where);
    if (!degrees.is_array() || degrees.empty())
        throw error(where + ".basis_degrees: expected a nonempty array");
    for (std::size_t i = 0; i < degrees.size(); ++i)
        a.degrees.push_back(element_in(a.group(), degrees[i],
                                       where + ".basis_degrees[" + std::to_string(i) + "]"));

    const std::size_t n = a.dim();
    a.sc.assign(n, std::vector<CycVector>(n, CycVector(n, CycScalar(0))));
    const json& products = field(doc, "products", where);
    if (!products.is_array()) throw error(where + ".products: expected an array");
    for (std::size_t k = 0; k < products.size(); ++k) {
        const std::string at = where + ".products[" + std::to_string(k) + "]";
        const json& e = products[k];
        if (!e.is_array() || e.size() != 4) throw error(at + ": expected [i, j, k, coeff]");
        std::size_t i = index_in(e[0], n, at), j = index_in(e[1], n, at), w = index_in(e[2], n, at);
        a.sc[i][j][w] += scalar_in(e[3], at);
    }

    validate_algebra(a);

    ParsedAlgebra out{std::move(a), std::nullopt};
    if (doc.contains("bimodule")) out.bimodule = bimodule_from_document(out.algebra, doc["bimodule"]);
    return out;
}

json cochain_entries(const Cochain& f) {
    json out = json::array();
    if (f.arity == 1) {
        for (std::size_t u = 0; u < f.table[0].size(); ++u)
            append_all(out, sparse_vector_entries(f.table[0][u], {u}));
        return out;
    }
    for (std::size_t e = 0; e < f.table.size(); ++e)
        for (std::size_t last = 0; last < f.table[e].size(); ++last)
            append_all(out, sparse_vector_entries(f.table[e][last], {e, last}));
    return out;
}

Cochain cochain_from_entries(const GradedAlgebra& a, const Bimodule& v, std::size_t arity,
                             const json& entries) {
    if (arity != 1 && arity != 2) throw error("cochain entries: arity must be 1 or 2");
    if (!entries.is_array()) throw error("cochain entries: expected an array");
    const std::size_t n = a.dim(), m = v.dim(), width = arity + 2;
    Cochain f = zero_cochain(a, v, arity, a.group().zero());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const std::string at = "entries[" + std::to_string(k) + "]";
        const json& e = entries[k];
        if (!e.is_array() || e.size() != width)
            throw error(at + ": expected " + std::to_string(arity) +
                        " argument indices, a target index, and a coefficient");
        std::vector<std::size_t> args;
        for (std::size_t s = 0; s < arity; ++s) args.push_back(index_in(e[s], n, at));
        std::size_t w = index_in(e[arity], m, at);
        const CycScalar c = scalar_in(e[arity + 1], at);

        GroupElement want = a.degrees[args[0]];
        for (std::size_t s = 1; s < arity; ++s) want = a.group().add(want, a.degrees[args[s]]);
        if (!c.is_zero() && v.degrees[w] != want)
            throw error(at + ": target degree breaks the degree-0 grading");

        // Arity 2 stores pairs directly: the exterior tuples of length one
        // are the singletons in index order.
        if (arity == 1)
            f.table[0][args[0]][w] += c;
        else
            f.table[args[0]][args[1]][w] += c;
    }
    return f;
}

json cochain_to_document(const Cochain& f) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["entries"] = cochain_entries(f);
    return doc;
}

Cochain cochain_from_document(const GradedAlgebra& a, const Bimodule& v, std::size_t arity,
                              const json& doc) {
    const std::string where = "cochain document";
    check_version(doc, where);
    return cochain_from_entries(a, v, arity, field(doc, "entries", where));
}

json deformation_to_document(const Deformation& d) {
    json doc;
    doc["format_version"] = kFormatVersion;
    json terms = json::array();
    for (const Cochain& f : d.terms) terms.push_back(cochain_entries(f));
    doc["terms"] = std::move(terms);
    return doc;
}

Deformation deformation_from_document(const GradedAlgebra& a, const json& doc) {
    const std::string where = "deformation document";
    check_version(doc, where);
    const json& terms = field(doc, "terms", where);
    if (!terms.is_array()) throw error(where + ".terms: expected an array");
    const Bimodule v = standard_bimodule(a);
    Deformation d;
    for (const json& t : terms) d.terms.push_back(cochain_from_entries(a, v, 2, t));
    validate_deformation(a, d);
    return d;
}

json equivalence_to_document(const EquivalenceMap& p) {
    json doc;
    doc["format_version"] = kFormatVersion;
    json terms = json::array();
    for (const Cochain& f : p.terms) terms.push_back(cochain_entries(f));
    doc["terms"] = std::move(terms);
    return doc;
}

EquivalenceMap equivalence_from_document(const GradedAlgebra& a, const json& doc) {
    const std::string where = "equivalence document";
    check_version(doc, where);
    const json& terms = field(doc, "terms", where);
    if (!terms.is_array()) throw error(where + ".terms: expected an array");
    const Bimodule v = standard_bimodule(a);
    EquivalenceMap p;
    for (const json& t : terms) p.terms.push_back(cochain_from_entries(a, v, 1, t));
    validate_equivalence_map(a, p);
    return p;
}

json linop_to_document(const GradedLinOp& p) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["degree"] = element_out(p.degree);
    json matrix = json::array();
    for (std::size_t i = 0; i < p.matrix.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < p.matrix.cols; ++j) row.push_back(p.matrix.at(i, j).str());
        matrix.push_back(std::move(row));
    }
    doc["matrix"] = std::move(matrix);
    return doc;
}

GradedLinOp linop_from_document(const GradedAlgebra& a, const json& doc) {
    const std::string where = "operator document";
    check_version(doc, where);
    GradedLinOp p;
    p.degree = element_in(a.group(), field(doc, "degree", where), where + ".degree");

    const std::size_t n = a.dim();
    const json& matrix = field(doc, "matrix", where);
    if (!matrix.is_array() || matrix.size() != n)
        throw error(where + ".matrix: expected " + std::to_string(n) + " rows");
    p.matrix = CycMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string at = where + ".matrix[" + std::to_string(i) + "]";
        if (!matrix[i].is_array() || matrix[i].size() != n)
            throw error(at + ": expected " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j)
            p.matrix.at(i, j) = scalar_in(matrix[i][j], at + "[" + std::to_string(j) + "]");
    }
    validate_linop(a, p);
    return p;
}

}  // namespace lsca
