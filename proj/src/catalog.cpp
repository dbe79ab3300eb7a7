#include "lsca/catalog.hpp"

namespace lsca {

namespace {

GradedAlgebra super_dim3() {
    GradedAlgebra a;
    a.eps.group = AbelianGroup({2});
    a.eps.table = {{CycScalar(-1)}};
    a.degrees = {a.eps.group.reduce({0}), a.eps.group.reduce({1}), a.eps.group.reduce({1})};
    a.sc.assign(3, std::vector<CycVector>(3, CycVector(3)));
    a.sc[0][0][0] = CycScalar(2);
    a.sc[0][1][1] = CycScalar(1);
    a.sc[0][2][2] = CycScalar(1);
    a.sc[1][2][0] = CycScalar(1);
    a.sc[2][1][0] = CycScalar(-1);
    return a;
}

GradedAlgebra square_dim2(const CycScalar& alpha) {
    GradedAlgebra a;
    a.eps.group = AbelianGroup({0});
    a.eps.table = {{CycScalar(-1)}};
    a.degrees = {a.eps.group.reduce({1}), a.eps.group.reduce({2})};
    a.sc.assign(2, std::vector<CycVector>(2, CycVector(2)));
    a.sc[0][0][1] = alpha;
    return a;
}

// First-order term of the one-parameter family: all nonzero values are
// f1(x,x) = r x, f1(x,y1) = s y2, f1(x,y2) = t y1 + r y2.
Cochain family_term(const GradedAlgebra& base, const Bimodule& v, const CycScalar& r,
                    const CycScalar& s, const CycScalar& t) {
    Cochain f = zero_cochain(base, v, 2, base.group().zero());
    f.table[0][0][0] = r;
    f.table[0][1][2] = s;
    f.table[0][2][1] = t;
    f.table[0][2][2] = r;
    return f;
}

constexpr const char* kNormalizationNote =
    "first-order term = family product table minus the base products, with the "
    "formal parameter normalized to 1";

struct ParsedName {
    std::string base;
    std::optional<CycScalar> parameter;
};

ParsedName parse_request(const std::string& request) {
    const auto trim = [](std::string s) {
        const auto begin = s.find_first_not_of(" \t");
        const auto end = s.find_last_not_of(" \t");
        return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
    };
    const std::string text = trim(request);
    const auto open = text.find('(');
    if (open == std::string::npos) return {text, std::nullopt};
    if (text.back() != ')')
        throw error("catalog: malformed entry name '" + request + "' (missing ')')");
    const std::string inside = text.substr(open + 1, text.size() - open - 2);
    if (trim(inside).empty())
        throw error("catalog: malformed entry name '" + request + "' (empty parameter)");
    return {trim(text.substr(0, open)), CycScalar::parse(inside)};
}

void check_entry(CatalogEntry& entry) {
    validate_algebra(entry.algebra);
    if (!verify_left_symmetric(entry.algebra).ok)
        throw error("catalog: entry '" + entry.name + "' is not left-symmetric");
    if (entry.deformation &&
        !verify_deformation(entry.algebra, entry.deformation->deformation).ok)
        throw error("catalog: deformation attached to '" + entry.name + "' does not verify");
}

}  // namespace

const std::vector<CatalogListing>& catalog_listings() {
    static const std::vector<CatalogListing> listings = {
        {"example37", false,
         "three-dimensional superalgebra: even x with xx = 2x acting as identity on an odd "
         "pair y1, y2 with y1y2 = x = -y2y1"},
        {"a_alpha", true,
         "two-dimensional algebra with single product xx = alpha*y, integer-graded with "
         "|x| = 1, |y| = 2, eps(1,1) = -1; alpha must be nonzero"},
        {"a_lambda_t", true,
         "one-parameter deformation family over example37 with first-order term "
         "f1(x,x) = (t-1)x, f1(x,y2) = (t-1)y2"},
        {"b_lambda", false,
         "deformation over example37 with first-order term f1(x,y2) = y1"},
    };
    return listings;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& l : catalog_listings()) names.push_back(l.name);
    return names;
}

CatalogEntry catalog_load(const std::string& request) {
    const ParsedName parsed = parse_request(request);
    CatalogEntry entry;

    if (parsed.base == "example37") {
        if (parsed.parameter) throw error("catalog: example37 takes no parameter");
        entry.name = "example37";
        entry.summary = catalog_listings()[0].description;
        entry.algebra = super_dim3();
    } else if (parsed.base == "a_alpha") {
        const CycScalar alpha = parsed.parameter.value_or(CycScalar(1));
        if (alpha.is_zero()) throw error("catalog: a_alpha requires a nonzero parameter");
        entry.name = "a_alpha(" + alpha.str() + ")";
        entry.summary = catalog_listings()[1].description;
        entry.algebra = square_dim2(alpha);
    } else if (parsed.base == "a_lambda_t") {
        const CycScalar t = parsed.parameter.value_or(CycScalar(1));
        entry.name = "a_lambda_t(" + t.str() + ")";
        entry.summary = catalog_listings()[2].description;
        entry.algebra = super_dim3();
        const Bimodule v = standard_bimodule(entry.algebra);
        CatalogDeformation d;
        d.base = "example37";
        d.deformation.terms = {
            family_term(entry.algebra, v, t - CycScalar(1), CycScalar(0), CycScalar(0))};
        d.normalization = kNormalizationNote;
        entry.deformation = std::move(d);
    } else if (parsed.base == "b_lambda") {
        if (parsed.parameter) throw error("catalog: b_lambda takes no parameter");
        entry.name = "b_lambda";
        entry.summary = catalog_listings()[3].description;
        entry.algebra = super_dim3();
        const Bimodule v = standard_bimodule(entry.algebra);
        CatalogDeformation d;
        d.base = "example37";
        d.deformation.terms = {
            family_term(entry.algebra, v, CycScalar(0), CycScalar(0), CycScalar(1))};
        d.normalization = kNormalizationNote;
        entry.deformation = std::move(d);
    } else {
        throw error("catalog: unknown entry '" + request + "'");
    }

    check_entry(entry);
    return entry;
}

}  // namespace lsca
