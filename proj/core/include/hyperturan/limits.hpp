#pragma once

#include <cstddef>

namespace hyperturan {

/// Exact-computation caps. Defaults can be raised through the
/// HYPERTURAN_MAX_N environment variable, which overrides every vertex cap.
struct Limits {
    std::size_t chromatic_max_n = 16;
    std::size_t deletion_family_max_n = 20;
    std::size_t expansion_detector_max_n = 24;
    std::size_t oracle_max_n = 12;
    std::size_t rainbow_oracle_max_n = 8;
    std::size_t rainbow_oracle_max_k = 4;
    std::size_t stability_max_n = 14;
    std::size_t gtz_inner_max_s = 8;

    /// Defaults, with HYPERTURAN_MAX_N applied if set.
    static auto current() -> Limits;
};

/// Hard cap of the bitmask representation used by the search-facing code.
inline constexpr std::size_t mask_capacity = 64;

} // namespace hyperturan
