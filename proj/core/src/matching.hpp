#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace hyperturan::detail {

/// Size of a maximum matching among uniform edge masks. Stops as soon as a
/// matching of size stop_at is found and returns stop_at in that case.
auto max_matching_size(std::span<const std::uint64_t> edges,
    std::size_t stop_at = std::numeric_limits<std::size_t>::max()) -> std::size_t;

/// Indices (into edges) of k pairwise disjoint edges, if any exist.
auto find_matching(std::span<const std::uint64_t> edges, std::size_t k) -> std::optional<std::vector<std::size_t>>;

} // namespace hyperturan::detail
