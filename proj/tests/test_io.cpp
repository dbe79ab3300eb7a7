#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "lsca/catalog.hpp"
#include "lsca/io.hpp"

using namespace lsca;
using nlohmann::json;
using fixtures::rst;

namespace {

bool algebras_equal(const GradedAlgebra& a, const GradedAlgebra& b) {
    return a.eps.group == b.eps.group && a.eps.table == b.eps.table && a.degrees == b.degrees &&
           a.sc == b.sc;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

const char* cli_path() {
#ifdef LSCA_CLI_PATH
    return LSCA_CLI_PATH;
#else
    return std::getenv("LSCA_CLI_PATH");
#endif
}

// Runs the command-line binary and captures one stream.
RunResult run_cli(const std::string& args, bool capture_stderr = false) {
    const char* cli = cli_path();
    REQUIRE(cli != nullptr);
    std::string cmd = std::string(cli) + " " + args +
                      (capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int rc = pclose(pipe);
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
}

}  // namespace

TEST_CASE("algebra documents round-trip every catalog entry") {
    for (const char* name : {"example37", "a_alpha(2)", "a_alpha(z4)", "a_lambda_t", "b_lambda"}) {
        GradedAlgebra a = catalog_load(name).algebra;
        ParsedAlgebra back = algebra_from_document(algebra_to_document(a));
        CHECK(algebras_equal(a, back.algebra));
        CHECK(!back.bimodule.has_value());
    }

    // Deterministic bytes.
    GradedAlgebra a = catalog_load("example37").algebra;
    CHECK(algebra_to_document(a).dump(2) == algebra_to_document(a).dump(2));
}

TEST_CASE("bimodule blocks round-trip") {
    GradedAlgebra a = fixtures::super3();
    Bimodule v = standard_bimodule(a);
    json doc = algebra_to_document(a, v);
    ParsedAlgebra back = algebra_from_document(doc);
    REQUIRE(back.bimodule.has_value());
    CHECK(back.bimodule->degrees == v.degrees);
    CHECK(back.bimodule->left == v.left);
    CHECK(back.bimodule->right == v.right);
}

TEST_CASE("cochain, deformation, equivalence, and operator documents round-trip") {
    GradedAlgebra a = fixtures::super3();
    Bimodule v = standard_bimodule(a);

    Cochain f = rst(a, v, CycScalar(1), CycScalar(2), CycScalar(Rat(-1, 3)));
    Cochain f_back = cochain_from_document(a, v, 2, cochain_to_document(f));
    CHECK(f_back.table == f.table);

    Deformation d = catalog_load("a_lambda_t(2)").deformation->deformation;
    Deformation d_back = deformation_from_document(a, deformation_to_document(d));
    REQUIRE(d_back.order() == 1);
    CHECK(d_back.terms[0].table == d.terms[0].table);

    EquivalenceMap p;
    Cochain q = zero_cochain(a, v, 1, a.group().zero());
    q.table[0][1][2] = CycScalar(3);  // q(y1) = 3 y2
    q.table[0][0][0] = CycScalar(Rat(1, 2));
    p.terms = {q};
    EquivalenceMap p_back = equivalence_from_document(a, equivalence_to_document(p));
    REQUIRE(p_back.order() == 1);
    CHECK(p_back.terms[0].table == q.table);

    GradedAlgebra b = fixtures::dim2(CycScalar(1));
    GradedLinOp shift{b.group().reduce({1}), CycMatrix(2, 2)};
    shift.matrix.at(1, 0) = CycScalar(5);
    GradedLinOp shift_back = linop_from_document(b, linop_to_document(shift));
    CHECK(shift_back.degree == shift.degree);
    CHECK(shift_back.matrix == shift.matrix);
}

TEST_CASE("imports reject malformed documents with named fields") {
    GradedAlgebra a = fixtures::super3();
    Bimodule v = standard_bimodule(a);
    json good = algebra_to_document(a);

    json bad = good;
    bad.erase("products");
    CHECK_THROWS_WITH_AS(algebra_from_document(bad), doctest::Contains("products"), error);

    bad = good;
    bad["format_version"] = 99;
    CHECK_THROWS_WITH_AS(algebra_from_document(bad), doctest::Contains("format_version"), error);

    bad = good;
    bad["products"].push_back(json::array({7, 0, 0, "1"}));
    CHECK_THROWS_WITH_AS(algebra_from_document(bad), doctest::Contains("out of range"), error);

    bad = good;
    bad["products"].push_back(json::array({0, 0, 0, "3/0"}));
    CHECK_THROWS_AS(algebra_from_document(bad), error);

    // A product landing in the wrong graded component violates the grading.
    bad = good;
    bad["products"].push_back(json::array({0, 0, 1, "1"}));
    CHECK_THROWS_AS(algebra_from_document(bad), error);

    // Cochain entry whose target degree breaks the degree-0 grading.
    json entries = json::array({json::array({0, 0, 1, "1"})});
    CHECK_THROWS_WITH_AS(cochain_from_entries(a, v, 2, entries), doctest::Contains("grading"),
                         error);
}

TEST_CASE("cli: axioms, cohomology, complex, and determinism") {
    RunResult axioms = run_cli("check-axioms --catalog example37");
    CHECK(axioms.exit_code == 0);
    json doc = json::parse(axioms.out);
    CHECK(doc["status"] == "ok");
    CHECK(doc["payload"]["message"] == "left-symmetric color identity: pass (27 triples)");

    RunResult coh = run_cli("cohomology --catalog example37 -n 2 --degree 0");
    CHECK(coh.exit_code == 0);
    doc = json::parse(coh.out);
    const json& comp = doc["payload"]["components"][0];
    CHECK(comp["dim_cochains"] == 13);
    CHECK(comp["dim_cocycles"] == 5);
    CHECK(comp["dim_coboundaries"] == 2);
    CHECK(comp["dim_cohomology"] == 3);

    // Omitting --degree scans all occurring degrees.
    RunResult scan = run_cli("cohomology --catalog example37 -n 2");
    CHECK(scan.exit_code == 0);
    CHECK(json::parse(scan.out)["payload"]["components"].size() == 2);

    RunResult again = run_cli("cohomology --catalog example37 -n 2 --degree 0");
    CHECK(again.out == coh.out);

    RunResult cpx = run_cli("complex-check --catalog example37 --n-max 3");
    CHECK(cpx.exit_code == 0);
    doc = json::parse(cpx.out);
    CHECK(doc["payload"]["ok"] == true);
    CHECK(doc["payload"]["composites_checked"] == 4);
}

TEST_CASE("cli: operator checks and exit code 2 on mathematical negatives") {
    RunResult bad = run_cli("nijenhuis-check --catalog a_alpha --op diag:1,2");
    CHECK(bad.exit_code == 2);
    json doc = json::parse(bad.out);
    CHECK(doc["status"] == "failed");
    REQUIRE(doc["payload"]["nonzero"].size() == 1);
    CHECK(doc["payload"]["nonzero"][0]["pair"] == json::array({0, 0}));
    CHECK(doc["payload"]["nonzero"][0]["value"] == json::array({"0", "1"}));

    CHECK(run_cli("nijenhuis-check --catalog a_alpha --op diag:3,3").exit_code == 0);
    CHECK(run_cli("rota-baxter-check --catalog a_alpha --weight 1 --op diag:1,1/3").exit_code == 0);
    CHECK(run_cli("rota-baxter-check --catalog a_alpha --op diag:1,1").exit_code == 2);

    RunResult corr = run_cli("operator-correspondence --catalog a_alpha --op diag:1,1");
    CHECK(corr.exit_code == 0);
    doc = json::parse(corr.out);
    CHECK(doc["payload"]["idempotent"] == true);
    CHECK(doc["payload"]["involutive_degree0"] == true);
    CHECK(doc["payload"]["all_agree"] == true);
    CHECK(doc["payload"]["cases"].size() == 4);

    // Operator document input.
    write_file("io_test_op.json",
               R"({"format_version": 1, "degree": [1], "matrix": [["0", "0"], ["2", "0"]]})");
    CHECK(run_cli("nijenhuis-check --catalog a_alpha --op io_test_op.json").exit_code == 0);
}

TEST_CASE("cli: deformation commands") {
    RunResult verify = run_cli("deform-verify --catalog 'a_lambda_t(-1)' --attachment");
    CHECK(verify.exit_code == 0);
    CHECK(json::parse(verify.out)["payload"]["ok"] == true);

    RunResult extend = run_cli("deform-extend --catalog b_lambda --attachment");
    CHECK(extend.exit_code == 0);
    json doc = json::parse(extend.out);
    CHECK(doc["payload"]["extension_exists"] == true);
    CHECK(doc["payload"]["nontrivial"] == true);
    CHECK(doc["payload"]["solution_kernel_dim"] == 5);

    // A term that is not a cocycle fails verification (exit 2).
    write_file("io_test_bad_deform.json",
               R"({"format_version": 1, "terms": [[[1, 1, 0, "1"]]]})");
    RunResult bad = run_cli("deform-verify --catalog example37 --file io_test_bad_deform.json");
    CHECK(bad.exit_code == 2);
    CHECK(json::parse(bad.out)["payload"]["failing_degree"] == 1);

    // Transport of the trivial deformation through id + lambda*q.
    GradedAlgebra a = fixtures::super3();
    Bimodule v = standard_bimodule(a);
    Cochain q = zero_cochain(a, v, 1, a.group().zero());
    q.table[0][0][0] = CycScalar(1);  // q(x) = x
    EquivalenceMap p{{q}};
    write_file("io_test_map.json", equivalence_to_document(p).dump());
    write_file("io_test_trivial.json", R"({"format_version": 1, "terms": []})");
    RunResult moved = run_cli(
        "deform-transport --catalog example37 --file io_test_trivial.json "
        "--map io_test_map.json --order 2");
    CHECK(moved.exit_code == 0);
    doc = json::parse(moved.out);
    REQUIRE(doc["payload"]["deformation"]["terms"].size() == 2);
    Deformation out = deformation_from_document(a, doc["payload"]["deformation"]);
    Deformation direct = transport(a, Deformation{}, p, 2);
    CHECK(out.terms[0].table == direct.terms[0].table);
    CHECK(out.terms[1].table == direct.terms[1].table);
    CHECK(!cochain_is_zero(out.terms[0]));
}

TEST_CASE("cli: equivalence checks") {
    GradedAlgebra a = fixtures::super3();
    Bimodule v = standard_bimodule(a);

    Cochain q = zero_cochain(a, v, 1, a.group().zero());
    q.table[0][1][1] = CycScalar(2);  // q(y1) = 2 y1
    write_file("io_test_coboundary.json", cochain_to_document(apply_coboundary(a, v, q)).dump());
    RunResult yes = run_cli(
        "equiv-check --catalog example37 --left zero --right io_test_coboundary.json");
    CHECK(yes.exit_code == 0);
    json doc = json::parse(yes.out);
    CHECK(doc["payload"]["equivalent"] == true);
    Cochain p1 = cochain_from_entries(a, v, 1, doc["payload"]["map"]);
    CHECK(apply_coboundary(a, v, p1).table == apply_coboundary(a, v, q).table);

    write_file("io_test_r100.json",
               cochain_to_document(rst(a, v, CycScalar(1), CycScalar(0), CycScalar(0))).dump());
    RunResult no = run_cli("equiv-check --catalog example37 --left zero --right io_test_r100.json");
    CHECK(no.exit_code == 2);
    CHECK(json::parse(no.out)["payload"]["equivalent"] == false);
}

TEST_CASE("cli: catalog export feeds back through --algebra and errors are structured") {
    RunResult list = run_cli("catalog list");
    CHECK(list.exit_code == 0);
    CHECK(json::parse(list.out)["payload"]["entries"].size() == 4);

    RunResult exported = run_cli("catalog export 'a_alpha(z4)'");
    CHECK(exported.exit_code == 0);
    json doc = json::parse(exported.out);
    ParsedAlgebra back = algebra_from_document(doc);
    CHECK(algebras_equal(back.algebra, catalog_load("a_alpha(z4)").algebra));

    write_file("io_test_exported.json", exported.out);
    RunResult reused = run_cli("cohomology --algebra io_test_exported.json -n 2 --degree -1");
    CHECK(reused.exit_code == 0);
    CHECK(json::parse(reused.out)["payload"]["components"][0]["dim_cohomology"] == 1);

    RunResult unknown = run_cli("nijenhuis-check --catalog nope --op diag:1", true);
    CHECK(unknown.exit_code == 1);
    doc = json::parse(unknown.out);
    CHECK(doc["status"] == "error");
    CHECK(doc["error"]["message"] == "catalog: unknown entry 'nope'");

    CHECK(run_cli("no-such-command", true).exit_code == 1);
    CHECK(run_cli("nijenhuis-check --op diag:1,1", true).exit_code == 1);     // no algebra
    CHECK(run_cli("nijenhuis-check --catalog a_alpha --op diag:1", true).exit_code == 1);

    write_file("io_test_broken.json", "{ not json");
    RunResult broken = run_cli("check-axioms --algebra io_test_broken.json", true);
    CHECK(broken.exit_code == 1);
    CHECK(json::parse(broken.out)["error"]["message"].get<std::string>().find("io_test_broken") !=
          std::string::npos);
}
