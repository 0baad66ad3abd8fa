#pragma once

#include <hyperturan/hypergraph.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hyperturan::detail {

/// A fixed r-graph prepared for repeated monomorphism searches.
class PatternMatcher {
  public:
    explicit PatternMatcher(const Hypergraph & pattern);

    [[nodiscard]] auto vertex_count() const noexcept -> std::size_t { return p_; }
    [[nodiscard]] auto edge_count() const noexcept -> std::size_t { return edges_.size(); }

    /// Indices into host of the image of the pattern's edges, if it embeds.
    [[nodiscard]] auto find(std::span<const std::uint64_t> host, std::size_t n) const
        -> std::optional<std::vector<std::size_t>>;

    /// Only embeddings that map some pattern edge onto host[anchor].
    [[nodiscard]] auto embeds_through(std::span<const std::uint64_t> host, std::size_t n, std::size_t anchor) const -> bool;

  private:
    auto extend(std::span<const std::uint64_t> host, std::size_t n, std::vector<int> & image, std::uint64_t used,
        std::size_t depth, std::vector<std::size_t> * hit) const -> bool;

    std::size_t p_ = 0;
    std::size_t r_ = 0;
    std::vector<std::vector<Vertex>> edges_;
    /// vertices in search order; closing[d] lists edges whose last vertex is order[d]
    std::vector<Vertex> order_;
    std::vector<std::vector<std::size_t>> closing_;
    std::vector<std::size_t> position_;
};

} // namespace hyperturan::detail
