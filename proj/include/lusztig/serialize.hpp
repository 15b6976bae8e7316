#pragma once

// Versioned JSON documents for the objects the CLI emits. Every document
// carries a top-level "schema" key such as "lusztig.root_datum/1".

#include <string>

#include "json.hpp"
#include "lusztig/coxeter.hpp"
#include "lusztig/lattice.hpp"
#include "lusztig/lcf.hpp"

namespace lusztig {

inline constexpr const char* kRootDatumSchema = "lusztig.root_datum/1";
inline constexpr const char* kAffineElementSchema = "lusztig.affine_element/1";
inline constexpr const char* kDecompositionSchema = "lusztig.decomposition_matrix/1";

// {schema, series, variant, rank, cartan, positive_roots: [{weight, coroot, simple}]}
nlohmann::json root_datum_to_json(const RootDatum& d);
// Rebuilds from series, rank and variant and checks the stored Cartan matrix.
RootDatum root_datum_from_json(const nlohmann::json& j);

// {schema, word, finite_matrix, translation}
nlohmann::json affine_element_to_json(const AffineWeylGroup& w, const AffineWeylElement& x);
// Uses "word" when present, else finite_matrix and translation.
AffineWeylElement affine_element_from_json(const AffineWeylGroup& w, const nlohmann::json& j);

// {schema, series, p, source, inverted, labels: [{weight, word, length, jantzen}], rows}
nlohmann::json decomposition_to_json(const AffineWeylGroup& w, const DecompositionMatrix& m);
DecompositionMatrix decomposition_from_json(const AffineWeylGroup& w, const nlohmann::json& j);

void require_schema(const nlohmann::json& j, const std::string& schema);

}  // namespace lusztig
