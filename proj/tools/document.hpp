#pragma once

// JSON documents for cycles, subdivisions, Chow forms, matroids and lattice maps.
//
// Coordinates are full coordinates of R^n. Rationals are strings "p/q" (or "p"); integers are
// numbers, or strings when they do not fit 64 bits. Bracket subsets and matroid elements are
// 1-based; cell member lists in subdivision documents are 0-based point indices.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tropical/matroid.hpp"

namespace tropical::io {

using json = nlohmann::json;

/// Input that does not parse or does not match a document schema.
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path);
/// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const std::string& path, const std::string& text);

json ambient_to_json(const AmbientSpace& amb);
AmbientSpace ambient_from_json(const json& j);

json polyhedron_to_json(const Polyhedron& P);
json cycle_to_json(const TropicalCycle& X);
TropicalCycle cycle_from_json(const json& j);

json subdivision_to_json(const RegularSubdivision& S);
RegularSubdivision subdivision_from_json(const json& j);
/// Decimal coordinates, edges and cells for external renderers.
json subdivision_plot(const RegularSubdivision& S);

json chow_form_to_json(const BracketChowForm& f);
BracketChowForm chow_form_from_json(const json& j);

json matroid_to_json(const Matroid& M);
Matroid matroid_from_json(const json& j);

LatticeMap map_from_json(const json& j);

json integer_to_json(const Integer& x);

}  // namespace tropical::io
