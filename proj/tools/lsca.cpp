// Command-line front end: every library capability as a subcommand with
// machine-readable JSON output.
//
// Exit codes: 0 = success, 2 = the mathematics said no (identity violated,
// no extension, no equivalence), 1 = input error (structured error document
// on standard error).

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lsca/catalog.hpp"
#include "lsca/cochain.hpp"
#include "lsca/io.hpp"
#include "lsca/operators.hpp"

namespace {

using nlohmann::json;
using namespace lsca;

json scalar_vector(const CycVector& v) {
    json out = json::array();
    for (const CycScalar& c : v) out.push_back(c.str());
    return out;
}

json group_element(const GroupElement& a) {
    json out = json::array();
    for (long x : a.e) out.push_back(x);
    return out;
}

// ---- shared input resolution --------------------------------------------

struct BaseOptions {
    std::string catalog;
    std::string algebra_path;
};

void add_base_options(CLI::App* cmd, BaseOptions& opts) {
    cmd->add_option("--catalog", opts.catalog, "catalog entry, e.g. example37 or a_alpha(2)");
    cmd->add_option("--algebra", opts.algebra_path, "algebra document file");
}

struct Base {
    GradedAlgebra algebra;
    Bimodule bimodule;
    std::optional<CatalogEntry> entry;
    std::string source;
};

Base resolve_base(const BaseOptions& opts) {
    if (!opts.catalog.empty() && !opts.algebra_path.empty())
        throw error("give --catalog or --algebra, not both");
    Base base;
    if (!opts.catalog.empty()) {
        base.entry = catalog_load(opts.catalog);
        base.algebra = base.entry->algebra;
        base.source = base.entry->name;
    } else if (!opts.algebra_path.empty()) {
        ParsedAlgebra parsed = algebra_from_document(load_document(opts.algebra_path));
        base.algebra = std::move(parsed.algebra);
        base.source = opts.algebra_path;
        if (parsed.bimodule) {
            base.bimodule = std::move(*parsed.bimodule);
            return base;
        }
    } else {
        throw error("an algebra is required: pass --catalog <name> or --algebra <file>");
    }
    base.bimodule = standard_bimodule(base.algebra);
    return base;
}

Deformation resolve_deformation(const Base& base, const std::string& file, bool attachment) {
    if (attachment && !file.empty()) throw error("give --file or --attachment, not both");
    if (attachment) {
        if (!base.entry || !base.entry->deformation)
            throw error("--attachment requires a catalog entry with a deformation");
        return base.entry->deformation->deformation;
    }
    if (!file.empty()) return deformation_from_document(base.algebra, load_document(file));
    throw error("a deformation is required: pass --file <doc> or --attachment");
}

// "zero" or a single-cochain document path.
Cochain resolve_cochain2(const Base& base, const std::string& text) {
    if (text == "zero") return zero_cochain(base.algebra, base.bimodule, 2, base.algebra.group().zero());
    return cochain_from_document(base.algebra, base.bimodule, 2, load_document(text));
}

// "diag:c1,c2,..." or an operator document path.
GradedLinOp resolve_operator(const GradedAlgebra& a, const std::string& text) {
    const std::string prefix = "diag:";
    if (text.compare(0, prefix.size(), prefix) != 0)
        return linop_from_document(a, load_document(text));

    std::vector<CycScalar> entries;
    std::stringstream ss(text.substr(prefix.size()));
    std::string piece;
    while (std::getline(ss, piece, ',')) entries.push_back(CycScalar::parse(piece));
    if (entries.size() != a.dim())
        throw error("diag: expected " + std::to_string(a.dim()) + " diagonal entries");

    GradedLinOp p{a.group().zero(), CycMatrix(a.dim(), a.dim())};
    for (std::size_t i = 0; i < a.dim(); ++i) p.matrix.at(i, i) = entries[i];
    validate_linop(a, p);
    return p;
}

GroupElement parse_degree(const AbelianGroup& g, const std::string& text) {
    std::vector<long> e;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            std::size_t used = 0;
            long x = std::stol(piece, &used);
            while (used < piece.size() && std::isspace(static_cast<unsigned char>(piece[used])))
                ++used;
            if (used != piece.size()) throw error("");
            e.push_back(x);
        } catch (const std::exception&) {
            throw error("--degree: cannot parse exponent '" + piece + "'");
        }
    }
    if (e.size() != g.rank())
        throw error("--degree: expected " + std::to_string(g.rank()) + " exponents");
    return g.reduce(std::move(e));
}

// ---- result emission ------------------------------------------------------

int finish(const std::string& command, bool ok, json payload) {
    json doc;
    doc["command"] = command;
    doc["status"] = ok ? "ok" : "failed";
    doc["payload"] = std::move(payload);
    std::cout << doc.dump(2) << "\n";
    return ok ? 0 : 2;
}

json residual_payload(const OperatorResidual& r) {
    json payload;
    payload["kind"] = r.kind;
    if (r.weight) payload["weight"] = r.weight->str();
    payload["pairs_checked"] = r.pairs_checked;
    payload["max_support"] = r.max_support;
    payload["zero"] = r.zero();
    json nonzero = json::array();
    for (const auto& entry : r.nonzero) {
        json e;
        e["pair"] = json::array({entry.i, entry.j});
        e["value"] = scalar_vector(entry.value);
        nonzero.push_back(std::move(e));
    }
    payload["nonzero"] = std::move(nonzero);
    return payload;
}

// ---- subcommands ----------------------------------------------------------

int run_check_axioms(const Base& base) {
    LeftSymmetryReport report = verify_left_symmetric(base.algebra);
    json payload;
    payload["algebra"] = base.source;
    payload["triples_checked"] = report.triples_checked;
    payload["ok"] = report.ok;
    payload["message"] = std::string("left-symmetric color identity: ") +
                         (report.ok ? "pass" : "fail") + " (" +
                         std::to_string(report.triples_checked) + " triples)";
    json failures = json::array();
    for (const auto& f : report.failures) {
        json e;
        e["triple"] = json::array({f.i, f.j, f.k});
        e["residual"] = scalar_vector(f.residual);
        failures.push_back(std::move(e));
    }
    payload["failures"] = std::move(failures);
    return finish("check-axioms", report.ok, std::move(payload));
}

int run_cohomology(const Base& base, std::size_t n, const std::string& degree_text) {
    std::vector<GroupElement> degrees;
    if (degree_text.empty())
        degrees = occurring_degrees(base.algebra, base.bimodule, n);
    else
        degrees.push_back(parse_degree(base.algebra.group(), degree_text));

    json payload;
    payload["algebra"] = base.source;
    payload["arity"] = n;
    json components = json::array();
    for (const GroupElement& c : degrees) {
        CohomologyReport report = cohomology(base.algebra, base.bimodule, n, c);
        json comp;
        comp["degree"] = group_element(c);
        comp["dim_cochains"] = report.dim_cochains;
        comp["dim_cocycles"] = report.dim_cocycles;
        comp["dim_coboundaries"] = report.dim_coboundaries;
        comp["dim_cohomology"] = report.dim_cohomology;
        json reps = json::array();
        for (const Cochain& f : report.representatives) reps.push_back(cochain_entries(f));
        comp["representatives"] = std::move(reps);
        components.push_back(std::move(comp));
    }
    payload["components"] = std::move(components);
    return finish("cohomology", true, std::move(payload));
}

int run_complex_check(const Base& base, std::size_t n_max) {
    ComplexReport report = check_complex(base.algebra, base.bimodule, n_max);
    json payload;
    payload["algebra"] = base.source;
    payload["n_max"] = n_max;
    payload["composites_checked"] = report.composites_checked;
    payload["ok"] = report.ok;
    json violations = json::array();
    for (const auto& v : report.violations) {
        json e;
        e["n"] = v.n;
        e["degree"] = group_element(v.degree);
        violations.push_back(std::move(e));
    }
    payload["violations"] = std::move(violations);
    return finish("complex-check", report.ok, std::move(payload));
}

int run_deform_verify(const Base& base, const Deformation& d) {
    DeformationReport report = verify_deformation(base.algebra, d);
    json payload;
    payload["algebra"] = base.source;
    payload["order"] = d.order();
    payload["degrees_checked"] = report.degrees_checked;
    payload["ok"] = report.ok;
    if (report.failing_degree) {
        payload["failing_degree"] = *report.failing_degree;
        payload["failing_args"] = report.failing_args;
        payload["failing_coordinate"] = report.failing_coordinate;
    }
    return finish("deform-verify", report.ok, std::move(payload));
}

int run_deform_extend(const Base& base, const Deformation& d) {
    ObstructionReport report = obstruction_and_extend(base.algebra, d);
    json payload;
    payload["algebra"] = base.source;
    payload["order"] = report.order;
    payload["obstruction"] = cochain_entries(report.obstruction);
    payload["obstruction_is_cocycle"] = report.obstruction_is_cocycle;
    payload["extension_exists"] = report.extension_exists;
    payload["nontrivial"] = report.nontrivial;
    if (report.extension_exists) {
        payload["particular"] = cochain_entries(report.particular);
        json kernel = json::array();
        for (const Cochain& f : report.solution_kernel) kernel.push_back(cochain_entries(f));
        payload["solution_kernel"] = std::move(kernel);
        payload["solution_kernel_dim"] = report.solution_kernel.size();
    }
    return finish("deform-extend", report.extension_exists, std::move(payload));
}

int run_deform_transport(const Base& base, const Deformation& d, const std::string& map_path,
                         std::size_t order) {
    EquivalenceMap p = equivalence_from_document(base.algebra, load_document(map_path));
    Deformation out = transport(base.algebra, d, p, order);
    json payload;
    payload["algebra"] = base.source;
    payload["order"] = order;
    payload["deformation"] = deformation_to_document(out);
    return finish("deform-transport", true, std::move(payload));
}

int run_equiv_check(const Base& base, const std::string& left, const std::string& right) {
    Cochain f1 = resolve_cochain2(base, left);
    Cochain e1 = resolve_cochain2(base, right);
    std::optional<Cochain> p1 = infinitesimal_equivalence(base.algebra, f1, e1);
    json payload;
    payload["algebra"] = base.source;
    payload["equivalent"] = p1.has_value();
    if (p1) payload["map"] = cochain_entries(*p1);
    return finish("equiv-check", p1.has_value(), std::move(payload));
}

int run_nijenhuis(const Base& base, const std::string& op_text) {
    GradedLinOp p = resolve_operator(base.algebra, op_text);
    OperatorResidual r = nijenhuis_residual(base.algebra, p);
    json payload = residual_payload(r);
    payload["algebra"] = base.source;
    payload["operator"] = linop_to_document(p);
    return finish("nijenhuis-check", r.zero(), std::move(payload));
}

int run_rota_baxter(const Base& base, const std::string& op_text, const std::string& weight_text) {
    GradedLinOp p = resolve_operator(base.algebra, op_text);
    OperatorResidual r = rota_baxter_residual(base.algebra, p, CycScalar::parse(weight_text));
    json payload = residual_payload(r);
    payload["algebra"] = base.source;
    payload["operator"] = linop_to_document(p);
    return finish("rota-baxter-check", r.zero(), std::move(payload));
}

int run_correspondence(const Base& base, const std::string& op_text) {
    GradedLinOp p = resolve_operator(base.algebra, op_text);
    CorrespondenceReport report = correspondence_checks(base.algebra, p);
    json payload;
    payload["algebra"] = base.source;
    payload["operator"] = linop_to_document(p);
    payload["square_zero"] = report.square_zero;
    payload["idempotent"] = report.idempotent;
    payload["involutive_degree0"] = report.involutive_degree0;
    payload["nijenhuis"] = report.nijenhuis;
    payload["square_zero_on_products"] = report.square_zero_on_products;
    payload["all_agree"] = report.all_agree;
    json cases = json::array();
    for (const auto& c : report.cases) {
        json e;
        e["hypothesis"] = c.hypothesis;
        e["statement"] = c.statement;
        e["lhs_zero"] = c.lhs_zero;
        e["rhs_zero"] = c.rhs_zero;
        e["agree"] = c.agree;
        cases.push_back(std::move(e));
    }
    payload["cases"] = std::move(cases);
    return finish("operator-correspondence", report.all_agree, std::move(payload));
}

int run_catalog_list() {
    json payload;
    json entries = json::array();
    for (const CatalogListing& l : catalog_listings()) {
        json e;
        e["name"] = l.name;
        e["parameterized"] = l.parameterized;
        e["description"] = l.description;
        entries.push_back(std::move(e));
    }
    payload["entries"] = std::move(entries);
    return finish("catalog list", true, std::move(payload));
}

int run_catalog_export(const std::string& name) {
    CatalogEntry entry = catalog_load(name);
    // The export is the algebra document itself so that it feeds straight
    // back into --algebra.
    std::cout << algebra_to_document(entry.algebra).dump(2) << "\n";
    return 0;
}

int fail_input(const std::string& command, const std::string& message) {
    json doc;
    doc["command"] = command;
    doc["status"] = "error";
    doc["error"]["message"] = message;
    std::cerr << doc.dump(2) << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with left-symmetric color algebras"};
    app.require_subcommand(1);

    BaseOptions axioms_base;
    CLI::App* axioms = app.add_subcommand("check-axioms", "verify the defining identity");
    add_base_options(axioms, axioms_base);

    BaseOptions coh_base;
    std::size_t coh_n = 2;
    std::string coh_degree;
    CLI::App* coh = app.add_subcommand("cohomology", "cochain/cocycle/cohomology dimensions");
    add_base_options(coh, coh_base);
    coh->add_option("-n", coh_n, "cochain arity")->required();
    coh->add_option("--degree", coh_degree, "graded component (comma-separated exponents); omitted = all occurring degrees");

    BaseOptions cpx_base;
    std::size_t cpx_nmax = 3;
    CLI::App* cpx = app.add_subcommand("complex-check", "verify d_{n+1} o d_n = 0");
    add_base_options(cpx, cpx_base);
    cpx->add_option("--n-max", cpx_nmax, "check composites for 1 <= n < n-max (default 3)");

    BaseOptions dv_base;
    std::string dv_file;
    bool dv_attachment = false;
    CLI::App* dv = app.add_subcommand("deform-verify", "check a deformation order by order");
    add_base_options(dv, dv_base);
    dv->add_option("--file", dv_file, "deformation document");
    dv->add_flag("--attachment", dv_attachment, "use the catalog entry's deformation");

    BaseOptions de_base;
    std::string de_file;
    bool de_attachment = false;
    CLI::App* de = app.add_subcommand("deform-extend", "solve for the next-order term");
    add_base_options(de, de_base);
    de->add_option("--file", de_file, "deformation document");
    de->add_flag("--attachment", de_attachment, "use the catalog entry's deformation");

    BaseOptions dt_base;
    std::string dt_file, dt_map;
    bool dt_attachment = false;
    std::size_t dt_order = 1;
    CLI::App* dt = app.add_subcommand("deform-transport", "push a deformation through an equivalence");
    add_base_options(dt, dt_base);
    dt->add_option("--file", dt_file, "deformation document");
    dt->add_flag("--attachment", dt_attachment, "use the catalog entry's deformation");
    dt->add_option("--map", dt_map, "equivalence-map document")->required();
    dt->add_option("--order", dt_order, "number of transported terms")->required();

    BaseOptions eq_base;
    std::string eq_left, eq_right;
    CLI::App* eq = app.add_subcommand("equiv-check", "infinitesimal equivalence of two cocycles");
    add_base_options(eq, eq_base);
    eq->add_option("--left", eq_left, "2-cochain document, or 'zero'")->required();
    eq->add_option("--right", eq_right, "2-cochain document, or 'zero'")->required();

    BaseOptions nij_base;
    std::string nij_op;
    CLI::App* nij = app.add_subcommand("nijenhuis-check", "Nijenhuis residual of an operator");
    add_base_options(nij, nij_base);
    nij->add_option("--op", nij_op, "operator document, or inline diag:c1,c2,...")->required();

    BaseOptions rb_base;
    std::string rb_op, rb_weight = "0";
    CLI::App* rb = app.add_subcommand("rota-baxter-check", "Rota-Baxter residual of an operator");
    add_base_options(rb, rb_base);
    rb->add_option("--op", rb_op, "operator document, or inline diag:c1,c2,...")->required();
    rb->add_option("--weight", rb_weight, "weight scalar (default 0)");

    BaseOptions corr_base;
    std::string corr_op;
    CLI::App* corr = app.add_subcommand("operator-correspondence",
                                        "Nijenhuis/Rota-Baxter biconditionals for squared classes");
    add_base_options(corr, corr_base);
    corr->add_option("--op", corr_op, "operator document, or inline diag:c1,c2,...")->required();

    CLI::App* cat = app.add_subcommand("catalog", "built-in algebras and families");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "list the built-in entries");
    std::string cat_name;
    CLI::App* cat_export = cat->add_subcommand("export", "emit an entry as an algebra document");
    cat_export->add_option("name", cat_name, "entry name, e.g. a_alpha(2)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // help text
        return fail_input("parse", e.what());
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (axioms->parsed()) return run_check_axioms(resolve_base(axioms_base));
        if (coh->parsed()) return run_cohomology(resolve_base(coh_base), coh_n, coh_degree);
        if (cpx->parsed()) return run_complex_check(resolve_base(cpx_base), cpx_nmax);
        if (dv->parsed()) {
            Base base = resolve_base(dv_base);
            return run_deform_verify(base, resolve_deformation(base, dv_file, dv_attachment));
        }
        if (de->parsed()) {
            Base base = resolve_base(de_base);
            return run_deform_extend(base, resolve_deformation(base, de_file, de_attachment));
        }
        if (dt->parsed()) {
            Base base = resolve_base(dt_base);
            return run_deform_transport(base, resolve_deformation(base, dt_file, dt_attachment),
                                        dt_map, dt_order);
        }
        if (eq->parsed()) return run_equiv_check(resolve_base(eq_base), eq_left, eq_right);
        if (nij->parsed()) return run_nijenhuis(resolve_base(nij_base), nij_op);
        if (rb->parsed()) return run_rota_baxter(resolve_base(rb_base), rb_op, rb_weight);
        if (corr->parsed()) return run_correspondence(resolve_base(corr_base), corr_op);
        if (cat->parsed()) {
            if (cat->get_subcommands().front()->get_name() == "list") return run_catalog_list();
            return run_catalog_export(cat_name);
        }
        return fail_input(command, "unknown subcommand");
    } catch (const error& e) {
        return fail_input(command, e.what());
    } catch (const std::exception& e) {
        return fail_input(command, e.what());
    }
}
