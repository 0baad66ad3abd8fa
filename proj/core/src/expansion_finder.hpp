#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hyperturan::detail {

/// One located copy of an expanded clique: core vertices in ascending order
/// and, per core pair (i < j), the index of the edge assigned to it.
struct ExpansionCopy {
    std::vector<std::uint32_t> core;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> edges;
};

/// Backtracking search for copies of K_q^{(r)+} among uniform edge masks.
/// Cores are cliques of the shadow graph (pairs of codegree >= 1), visited in
/// order of descending vertex codegree weight; edges are then chosen pair by
/// pair with the extras kept pairwise disjoint.
class ExpansionFinder {
  public:
    /// Called with the edge indices chosen so far; returning false prunes.
    using PartialCheck = std::function<bool(std::span<const std::size_t>)>;
    /// Called per complete copy; returning true stops the search.
    using CopyVisitor = std::function<bool(const ExpansionCopy &)>;

    ExpansionFinder(std::span<const std::uint64_t> edges, std::size_t n, std::size_t r, std::size_t q);

    /// True if the visitor asked to stop.
    auto search(const CopyVisitor & visit, const PartialCheck & partial = {}) -> bool;

    /// Only copies that use edge `anchor` (an index into edges).
    auto search_through(std::size_t anchor, const CopyVisitor & visit, const PartialCheck & partial = {}) -> bool;

    [[nodiscard]] auto possible() const noexcept -> bool { return possible_; }

  private:
    auto enumerate_cores(std::vector<std::uint32_t> & core, std::uint64_t candidates, std::size_t want,
        const std::function<bool(const std::vector<std::uint32_t> &)> & on_core) -> bool;
    auto assign(const std::vector<std::uint32_t> & core, std::optional<std::pair<std::size_t, std::size_t>> fixed_pair,
        std::optional<std::size_t> fixed_edge, const CopyVisitor & visit, const PartialCheck & partial) -> bool;

    std::span<const std::uint64_t> edges_;
    std::size_t n_, r_, q_;
    bool possible_ = true;
    std::vector<std::uint64_t> adjacency_;
    std::vector<std::vector<std::size_t>> pair_edges_;
    std::vector<std::size_t> weight_;
    std::vector<std::uint32_t> order_;
    std::vector<std::size_t> rank_;
};

} // namespace hyperturan::detail
