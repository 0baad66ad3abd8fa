#pragma once

#include <hyperturan/hypergraph.hpp>

#include <vector>

namespace hyperturan {

/// relabeling[v] is the canonical label of v; graph is the relabelled input.
struct CanonicalForm {
    std::vector<Vertex> relabeling;
    Hypergraph graph;
};

/// Colour refinement followed by exhaustive backtracking over the remaining
/// cell orderings; the lexicographically smallest relabelled edge list wins.
/// Twin vertices (whose transposition is an automorphism) are branched on once.
auto canonical_form(const Hypergraph & h) -> CanonicalForm;

auto is_isomorphic(const Hypergraph & a, const Hypergraph & b) -> bool;

} // namespace hyperturan
