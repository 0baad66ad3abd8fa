#pragma once

#include <hyperturan/combinatorics.hpp>
#include <hyperturan/detectors.hpp>
#include <hyperturan/hypergraph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hyperturan {

/// One forbidden structure.
struct ForbiddenItem {
    enum class Kind {
        expansion_clique, ///< K_param^{(r)+}
        matching,         ///< param pairwise disjoint edges
        covering_clique,  ///< param vertices with every pair covered
        pattern,          ///< a fixed r-graph (not necessarily induced)
    };

    Kind kind;
    std::size_t param = 0;
    std::optional<Hypergraph> pattern;

    [[nodiscard]] auto name() const -> std::string;
};

/// What a hypergraph must avoid: forbidding any item forbids the union.
class ForbiddenSpec {
  public:
    ForbiddenSpec() = default;
    explicit ForbiddenSpec(std::vector<ForbiddenItem> items);

    static auto expansion_clique(std::size_t l) -> ForbiddenItem;
    static auto matching(std::size_t size) -> ForbiddenItem;
    static auto covering_clique(std::size_t q) -> ForbiddenItem;
    static auto pattern(Hypergraph h) -> ForbiddenItem;

    /// "expansion-clique:4", "matching:3", "covering-clique:5".
    static auto parse_item(std::string_view text) -> ForbiddenItem;

    auto add(ForbiddenItem item) -> ForbiddenSpec &;
    [[nodiscard]] auto items() const noexcept -> const std::vector<ForbiddenItem> & { return items_; }
    [[nodiscard]] auto empty() const noexcept -> bool { return items_.empty(); }
    [[nodiscard]] auto describe() const -> std::string;

  private:
    std::vector<ForbiddenItem> items_;
};

/// Name of the first item h contains, or nullopt when h avoids all of them.
auto first_violation(const Hypergraph & h, const ForbiddenSpec & spec) -> std::optional<std::string>;
inline auto is_free(const Hypergraph & h, const ForbiddenSpec & spec) -> bool
{
    return ! first_violation(h, spec).has_value();
}

/// True if pattern embeds into h (injective on vertices, edges to edges).
auto contains_pattern(const Hypergraph & h, const Hypergraph & pattern) -> bool;

struct SearchOptions {
    /// Node limit. Without it the instance must fit the exact-mode caps.
    std::optional<std::uint64_t> budget;
    /// Depth up to which symmetric branches are rejected; 0 disables.
    std::size_t symmetry_depth = 3;
    /// Worker threads for the top levels of the tree.
    unsigned jobs = 1;
    /// Seed the incumbent with the best free known construction.
    bool warm_start = true;
};

struct SearchOutcome {
    Count value = 0;
    std::variant<Hypergraph, LayeredInstance> witness;
    std::uint64_t nodes_explored = 0;
    bool proven_optimal = false;
};

/// ex_r(n, spec) with a witness. Exact (proven_optimal) when the tree is
/// exhausted within the budget; n above Limits::oracle_max_n needs a budget.
auto max_edges_avoiding(std::size_t n, std::size_t r, const ForbiddenSpec & spec, const SearchOptions & options = {})
    -> SearchOutcome;

/// Largest total size of k layers on n vertices with no rainbow K_l^{(r)+}.
auto rainbow_max_sum(std::size_t n, std::size_t r, std::size_t k, std::size_t l, const SearchOptions & options = {})
    -> SearchOutcome;

struct PartitionDistance {
    Count distance = 0;
    /// part_of[v] in [0, l)
    std::vector<std::size_t> part_of;
};

/// Minimum number of edge edits turning h into a complete l-partite r-graph
/// with balanced parts, with one optimal assignment.
auto partition_distance(const Hypergraph & h, std::size_t l) -> PartitionDistance;

} // namespace hyperturan
