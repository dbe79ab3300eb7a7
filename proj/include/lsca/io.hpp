// Document formats: structured-text (JSON) encodings of algebras, cochains,
// deformations, equivalence maps, and operators. Scalars use the exact text
// syntax of CycScalar. Import validates shapes and grading compatibility and
// throws lsca::error with the offending field named; export is deterministic
// (sorted object keys, canonical scalar text, stable entry order).

#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "lsca/algebra.hpp"
#include "lsca/deform.hpp"

namespace lsca {

inline constexpr int kFormatVersion = 1;

// Reads and parses a JSON document from disk; parse diagnostics carry the
// path and the position reported by the parser.
nlohmann::json load_document(const std::string& path);

// ---- algebra documents -------------------------------------------------
//
// { "format_version": 1,
//   "group": { "orders": [2] },
//   "bicharacter": [["-1"]],                    // generator table
//   "basis_degrees": [[0], [1], [1]],           // exponent vectors
//   "products": [[0, 0, 0, "2"], ...],          // e_i e_j = sum c e_k
//   "bimodule": {                               // optional
//     "degrees": [[0]],
//     "left":  [[i, u, w, "c"], ...],           // e_i . m_u = sum c m_w
//     "right": [[u, i, w, "c"], ...] } }        // m_u . e_i = sum c m_w

nlohmann::json algebra_to_document(const GradedAlgebra& a);
nlohmann::json algebra_to_document(const GradedAlgebra& a, const Bimodule& v);

struct ParsedAlgebra {
    GradedAlgebra algebra;
    std::optional<Bimodule> bimodule;
};
ParsedAlgebra algebra_from_document(const nlohmann::json& doc);

// ---- cochain entry lists -----------------------------------------------
//
// Arity 1: [u, w, "c"] contributes c e_w to f(e_u).
// Arity 2: [u, v, w, "c"] contributes c e_w to f(e_u, e_v).
// Cochains in documents live over the standard bimodule in degree 0; the
// target degree of every entry is checked against the argument degrees.

nlohmann::json cochain_entries(const Cochain& f);
Cochain cochain_from_entries(const GradedAlgebra& a, const Bimodule& v, std::size_t arity,
                             const nlohmann::json& entries);

// Single-cochain document: { "format_version": 1, "entries": [...] }.
nlohmann::json cochain_to_document(const Cochain& f);
Cochain cochain_from_document(const GradedAlgebra& a, const Bimodule& v, std::size_t arity,
                              const nlohmann::json& doc);

// ---- deformation documents ----------------------------------------------
//
// { "format_version": 1, "terms": [ <arity-2 entries of f_1>, ... ] }

nlohmann::json deformation_to_document(const Deformation& d);
Deformation deformation_from_document(const GradedAlgebra& a, const nlohmann::json& doc);

// ---- equivalence-map documents -------------------------------------------
//
// { "format_version": 1, "terms": [ <arity-1 entries of p_1>, ... ] }

nlohmann::json equivalence_to_document(const EquivalenceMap& p);
EquivalenceMap equivalence_from_document(const GradedAlgebra& a, const nlohmann::json& doc);

// ---- operator documents ---------------------------------------------------
//
// { "format_version": 1, "degree": [0], "matrix": [["1", "0"], ["0", "1"]] }
// with matrix[i][j] = coefficient of e_i in P(e_j).

nlohmann::json linop_to_document(const GradedLinOp& p);
GradedLinOp linop_from_document(const GradedAlgebra& a, const nlohmann::json& doc);

}  // namespace lsca
