// Built-in algebras and deformation families, usable as fixtures and CLI
// presets. Parameterized entries accept a cyclotomic-scalar argument in
// parentheses ("a_alpha(2)"); the bare name defaults the parameter to 1.

#pragma once

#include <optional>
#include <string>

#include "lsca/deform.hpp"

namespace lsca {

struct CatalogDeformation {
    std::string base;           // name of the entry the terms deform
    Deformation deformation;    // terms over the base algebra
    std::string normalization;  // how the first-order term was read off
};

struct CatalogEntry {
    std::string name;        // canonical name, parameter included
    std::string summary;  // one-line description of the construction
    GradedAlgebra algebra;   // the entry's algebra (the base, for families)
    std::optional<CatalogDeformation> deformation;
};

struct CatalogListing {
    std::string name;  // base name, without parameter
    bool parameterized = false;
    std::string description;
};

// The four built-in entries, in stable order.
const std::vector<CatalogListing>& catalog_listings();
std::vector<std::string> catalog_names();

// Parses "name" or "name(parameter)" and returns the fully validated entry;
// throws on unknown names, malformed or unparseable parameters, parameters
// outside the family's domain, and (defensively) on any entry failing its
// own structural checks.
CatalogEntry catalog_load(const std::string& request);

}  // namespace lsca
