#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hyperturan::detail {

/// Matches positions to distinct colours (bit indices of the masks).
/// Returns the colour per position, or nullopt when no system of distinct
/// representatives exists.
auto find_sdr(std::span<const std::uint64_t> colour_sets) -> std::optional<std::vector<std::size_t>>;

inline auto has_sdr(std::span<const std::uint64_t> colour_sets) -> bool
{
    return find_sdr(colour_sets).has_value();
}

} // namespace hyperturan::detail
