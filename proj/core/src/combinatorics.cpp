#include <hyperturan/combinatorics.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperturan {

auto checked_add(Count a, Count b) -> Count
{
    Count out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in addition");
    return out;
}

auto checked_sub(Count a, Count b) -> Count
{
    Count out = 0;
    if (__builtin_sub_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in subtraction");
    return out;
}

auto checked_mul(Count a, Count b) -> Count
{
    Count out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in multiplication");
    return out;
}

auto binomial(Count n, Count k) -> Count
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Count result = 1;
    for (Count i = 0; i < k; ++i) {
        // result * (n - i) is divisible by (i + 1); split the division so the
        // product never exceeds the final value by more than a factor (n - i)
        const Count g = std::gcd(result, i + 1);
        const Count rest = (i + 1) / g;
        try {
            result = checked_mul(result / g, (n - i) / rest);
        }
        catch (const std::overflow_error &) {
            throw std::overflow_error("binomial C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
        }
    }
    return result;
}

auto balanced_part_sizes(Count n, Count parts) -> std::vector<Count>
{
    if (parts <= 0 || n < 0)
        throw std::invalid_argument("balanced partition needs n >= 0 and at least one part");
    std::vector<Count> sizes(static_cast<std::size_t>(parts), n / parts);
    for (Count i = 0; i < n % parts; ++i)
        ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

auto elementary_symmetric(std::span<const Count> values, Count r) -> Count
{
    if (r < 0)
        return 0;
    std::vector<Count> e(static_cast<std::size_t>(r) + 1, 0);
    e[0] = 1;
    for (Count v : values)
        for (Count j = r; j >= 1; --j)
            e[static_cast<std::size_t>(j)] =
                checked_add(e[static_cast<std::size_t>(j)], checked_mul(e[static_cast<std::size_t>(j - 1)], v));
    return e[static_cast<std::size_t>(r)];
}

void for_each_combination(unsigned n, unsigned r, const std::function<bool(std::span<const unsigned>)> & visit)
{
    if (r > n)
        return;
    std::vector<unsigned> c(r);
    for (unsigned i = 0; i < r; ++i)
        c[i] = i;
    while (true) {
        if (! visit(c))
            return;
        if (r == 0)
            return;
        int i = static_cast<int>(r) - 1;
        while (i >= 0 && c[static_cast<unsigned>(i)] == n - r + static_cast<unsigned>(i))
            --i;
        if (i < 0)
            return;
        ++c[static_cast<unsigned>(i)];
        for (auto j = static_cast<unsigned>(i) + 1; j < r; ++j)
            c[j] = c[j - 1] + 1;
    }
}

auto all_subset_masks(unsigned n, unsigned r) -> std::vector<std::uint64_t>
{
    if (n > 64)
        throw std::invalid_argument("bitmask enumeration supports at most 64 vertices");
    std::vector<std::uint64_t> out;
    for_each_combination(n, r, [&](std::span<const unsigned> c) {
        std::uint64_t m = 0;
        for (unsigned v : c)
            m |= std::uint64_t{1} << v;
        out.push_back(m);
        return true;
    });
    return out;
}

} // namespace hyperturan
