#pragma once

#include <hyperturan/combinatorics.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hyperturan {

using Vertex = std::uint32_t;
using EdgeList = std::vector<std::vector<Vertex>>;

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
  public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    [[nodiscard]] auto members() const noexcept -> std::span<const Vertex> { return members_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return members_.size(); }
    [[nodiscard]] auto empty() const noexcept -> bool { return members_.empty(); }
    [[nodiscard]] auto contains(Vertex v) const -> bool;
    [[nodiscard]] auto mask() const -> std::uint64_t;

    auto operator==(const VertexSet &) const -> bool = default;
    auto operator<=>(const VertexSet &) const = default;

  private:
    std::vector<Vertex> members_;
};

/// Uniform hypergraph on labelled vertices 0..n-1. Edges are strictly
/// sorted r-tuples kept in lexicographic order without duplicates.
/// Immutable after construction; build with make_hypergraph.
class Hypergraph {
  public:
    Hypergraph() = default;

    [[nodiscard]] auto n() const noexcept -> std::size_t { return n_; }
    [[nodiscard]] auto r() const noexcept -> std::size_t { return r_; }
    [[nodiscard]] auto edge_count() const noexcept -> std::size_t { return r_ == 0 ? 0 : flat_.size() / r_; }
    [[nodiscard]] auto empty() const noexcept -> bool { return flat_.empty(); }

    [[nodiscard]] auto edge(std::size_t i) const -> std::span<const Vertex>
    {
        return {flat_.data() + i * r_, r_};
    }

    /// Per-edge vertex bitmasks; only available when n <= 64.
    [[nodiscard]] auto has_masks() const noexcept -> bool { return n_ <= 64; }
    [[nodiscard]] auto masks() const -> std::span<const std::uint64_t>;

    [[nodiscard]] auto contains_edge(std::span<const Vertex> sorted_edge) const -> bool;
    [[nodiscard]] auto edge_list() const -> EdgeList;

    auto operator==(const Hypergraph & other) const -> bool
    {
        return n_ == other.n_ && r_ == other.r_ && flat_ == other.flat_;
    }

    /// Builds from edges that are already strictly sorted, unique and in
    /// lexicographic order. Used by generators that enumerate in order.
    static auto from_sorted_flat(std::size_t n, std::size_t r, std::vector<Vertex> flat) -> Hypergraph;

  private:
    Hypergraph(std::size_t n, std::size_t r, std::vector<Vertex> flat);

    std::size_t n_ = 0;
    std::size_t r_ = 1;
    std::vector<Vertex> flat_;
    std::vector<std::uint64_t> masks_;
};

/// Validates and normalizes. Throws ValidationError naming the offending edge.
auto make_hypergraph(std::size_t n, std::size_t r, const EdgeList & edges) -> Hypergraph;

/// r-expansion of a 2-graph: r-2 fresh vertices per edge; the first |V(F)|
/// indices stay the core, edge i of F receives extras
/// |V(F)| + i(r-2) .. |V(F)| + (i+1)(r-2) - 1.
auto expansion(const Hypergraph & graph, std::size_t r) -> Hypergraph;

/// Complete balanced parts-partite r-graph (larger parts first, contiguous).
auto complete_multipartite(std::size_t n, std::size_t parts, std::size_t r) -> Hypergraph;

/// All r-sets meeting {0,...,s-1}.
auto star_cover(std::size_t n, std::size_t r, std::size_t s) -> Hypergraph;

/// Complete r-graph on n vertices.
auto complete_hypergraph(std::size_t n, std::size_t r) -> Hypergraph;

/// Maximum number of pairwise disjoint edges (exact branch-and-bound).
auto matching_number(const Hypergraph & h) -> std::size_t;

/// Number of edges containing s; degree(h, {}) == e(h).
auto degree(const Hypergraph & h, const VertexSet & s) -> std::size_t;

/// (r-1)-uniform link of v on the same vertex set.
auto link(const Hypergraph & h, Vertex v) -> Hypergraph;

/// Sub-hypergraph spanned by s, relabelled order-preservingly to 0..|s|-1.
auto induced(const Hypergraph & h, const VertexSet & s) -> Hypergraph;
auto delete_vertices(const Hypergraph & h, const VertexSet & u) -> Hypergraph;

/// Relabels vertex v to perm[v].
auto permute(const Hypergraph & h, std::span<const Vertex> perm) -> Hypergraph;

/// Fewest colours with no monochromatic edge (exact; n <= Limits::chromatic_max_n).
auto weak_chromatic_number(const Hypergraph & h) -> std::size_t;

/// { h[S] : V \ S spans no edge }, one representative per isomorphism class,
/// ordered by (vertex count, canonical edge list).
auto independent_deletion_family(const Hypergraph & h) -> std::vector<Hypergraph>;

} // namespace hyperturan
