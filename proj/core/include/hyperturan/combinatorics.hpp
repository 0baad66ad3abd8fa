#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hyperturan {

using Count = std::int64_t;

/// Binomial coefficient C(n, k); zero when k < 0, n < 0 or k > n.
/// Throws std::overflow_error when the value does not fit in Count.
auto binomial(Count n, Count k) -> Count;

auto checked_add(Count a, Count b) -> Count;
auto checked_sub(Count a, Count b) -> Count;
auto checked_mul(Count a, Count b) -> Count;

/// Sizes of a balanced partition of n into parts: the first n mod parts
/// parts get ceil(n/parts), the rest floor(n/parts).
auto balanced_part_sizes(Count n, Count parts) -> std::vector<Count>;

/// Elementary symmetric polynomial e_r of the given values (number of
/// r-sets meeting every part at most once, for part sizes).
auto elementary_symmetric(std::span<const Count> values, Count r) -> Count;

/// Calls visit with every r-subset of {0..n-1} in lexicographic order.
/// Returning false from visit stops the enumeration.
void for_each_combination(unsigned n, unsigned r, const std::function<bool(std::span<const unsigned>)> & visit);

/// All r-subsets of {0..n-1} as bitmasks, lexicographic order. n <= 64.
auto all_subset_masks(unsigned n, unsigned r) -> std::vector<std::uint64_t>;

} // namespace hyperturan
