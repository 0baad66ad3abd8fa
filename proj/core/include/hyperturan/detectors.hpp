#pragma once

#include <hyperturan/hypergraph.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hyperturan {

/// Ordered sequence of k r-graphs on a shared vertex set.
class LayeredInstance {
  public:
    LayeredInstance(std::size_t n, std::size_t r, std::vector<Hypergraph> layers);

    [[nodiscard]] auto n() const noexcept -> std::size_t { return n_; }
    [[nodiscard]] auto r() const noexcept -> std::size_t { return r_; }
    [[nodiscard]] auto k() const noexcept -> std::size_t { return layers_.size(); }
    [[nodiscard]] auto layers() const noexcept -> const std::vector<Hypergraph> & { return layers_; }

    /// Sum of e(H_i).
    [[nodiscard]] auto total_size() const -> std::size_t;
    /// The r-graph of all r-sets present in at least one layer.
    [[nodiscard]] auto union_graph() const -> Hypergraph;
    /// Layer bitmask per edge of union_graph(), aligned with its edge order. k <= 64.
    [[nodiscard]] auto colour_masks() const -> std::vector<std::uint64_t>;
    /// Number of layers containing the edge.
    [[nodiscard]] auto multiplicity(std::span<const Vertex> sorted_edge) const -> std::size_t;

    auto operator==(const LayeredInstance &) const -> bool = default;

  private:
    std::size_t n_;
    std::size_t r_;
    std::vector<Hypergraph> layers_;
};

struct PairEdge {
    std::size_t i;
    std::size_t j;
    std::vector<Vertex> edge;

    auto operator==(const PairEdge &) const -> bool = default;
};

/// Witness of an embedded clique pattern. edge_assignment holds one edge per
/// core pair (i < j, indices into core); color_assignment, when present, gives
/// the layer used by each entry of edge_assignment.
struct Embedding {
    std::vector<Vertex> core;
    std::vector<PairEdge> edge_assignment;
    std::optional<std::vector<std::size_t>> color_assignment;

    auto operator==(const Embedding &) const -> bool = default;
};

/// t x t real weights, row-major.
class WeightMatrix {
  public:
    WeightMatrix(std::size_t t, std::vector<double> weights);
    static auto from_rows(const std::vector<std::vector<double>> & rows) -> WeightMatrix;

    [[nodiscard]] auto t() const noexcept -> std::size_t { return t_; }
    [[nodiscard]] auto at(std::size_t row, std::size_t column) const -> double { return w_[row * t_ + column]; }
    [[nodiscard]] auto row_sum(std::size_t row) const -> double;

  private:
    std::size_t t_;
    std::vector<double> w_;
};

struct Sunflower {
    VertexSet core;
    EdgeList petals;
};

struct HeavyMatching {
    /// column_of_row[i] is the column matched to row i.
    std::vector<std::size_t> column_of_row;
    double weight = 0.0;
};

struct RainbowAssignment {
    /// colour chosen for each position
    std::vector<int> colours;
};

struct HallViolator {
    /// positions whose colour sets have a union smaller than their count
    std::vector<std::size_t> positions;
    std::vector<int> neighbourhood;
};

using RainbowResult = std::variant<RainbowAssignment, HallViolator>;

struct SuperRainbowWitness {
    Embedding copy;
    /// avoiding[i] assigns a layer other than i to each pair edge of copy.
    std::vector<std::vector<std::size_t>> avoiding;
};

// --- Detectors -----------------------------------------------------------------

/// A copy of the r-expansion of K_clique, or nullopt after exhaustive search.
/// Exact for n <= Limits::expansion_detector_max_n; larger inputs raise CapacityError.
auto contains_expansion_clique(const Hypergraph & h, std::size_t clique) -> std::optional<Embedding>;

/// q vertices whose every pair lies in some edge (edges may repeat).
auto contains_covering_clique(const Hypergraph & h, std::size_t q) -> std::optional<Embedding>;

/// k distinct edges sharing a t-set core with pairwise disjoint petals.
auto find_sunflower(const Hypergraph & h, std::size_t t, std::size_t k) -> std::optional<Sunflower>;

/// Greedy max-entry matching. Requires every row sum >= s; otherwise throws
/// PreconditionError carrying the first deficient row.
auto heavy_matching(const WeightMatrix & w, double s) -> HeavyMatching;

/// Distinct representatives for the colour sets, or a Hall violator.
auto rainbow_assignment(const std::vector<std::vector<int>> & colour_sets, std::optional<int> forbidden_colour = std::nullopt)
    -> RainbowResult;

/// A copy of the expanded clique in the union whose edges take distinct layers.
auto contains_rainbow_expansion_clique(const LayeredInstance & layers, std::size_t clique) -> std::optional<Embedding>;

/// One copy that stays rainbow after excluding any single layer.
auto contains_super_rainbow(const LayeredInstance & layers, std::size_t clique) -> std::optional<SuperRainbowWitness>;

// --- Independent validators -----------------------------------------------------

/// Empty string when valid, otherwise a description of the violated invariant.
auto check_expansion_embedding(const Hypergraph & h, std::size_t clique, const Embedding & e) -> std::string;
auto check_covering_embedding(const Hypergraph & h, std::size_t q, const Embedding & e) -> std::string;
auto check_rainbow_embedding(const LayeredInstance & layers, std::size_t clique, const Embedding & e,
    std::optional<std::size_t> excluded_layer = std::nullopt) -> std::string;

} // namespace hyperturan
