#pragma once

#include <hyperturan/constructions.hpp>
#include <hyperturan/detectors.hpp>
#include <hyperturan/hypergraph.hpp>
#include <hyperturan/search.hpp>

#include <nlohmann/json.hpp>

namespace hyperturan {

using Json = nlohmann::ordered_json;

/// {"n": int, "r": int, "edges": [[int,...],...]}
auto to_json(const Hypergraph & h) -> Json;
/// Throws ValidationError on malformed documents.
auto hypergraph_from_json(const Json & j) -> Hypergraph;

/// {"n": int, "r": int, "layers": [[[int,...],...],...]}
auto to_json(const LayeredInstance & layers) -> Json;
auto layered_from_json(const Json & j) -> LayeredInstance;

auto to_json(const Embedding & e) -> Json;
auto to_json(const Sunflower & s) -> Json;

/// {"value", "proven_optimal", "nodes", "witness"}
auto to_json(const SearchOutcome & outcome) -> Json;

/// {"value", "case", "window_ok", "note"}; window_ok is true, false or a
/// string for the unknown / not-covered / hypothesis states.
auto to_json(const FormulaResult & result) -> Json;

} // namespace hyperturan
