#include "pattern_match.hpp"

#include <hyperturan/errors.hpp>
#include <hyperturan/search.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace hyperturan {

namespace detail {

    namespace {

        using HostIndex = std::vector<std::pair<std::uint64_t, std::size_t>>;

        auto index_host(std::span<const std::uint64_t> host) -> HostIndex
        {
            HostIndex index;
            index.reserve(host.size());
            for (std::size_t i = 0; i < host.size(); ++i)
                index.emplace_back(host[i], i);
            std::sort(index.begin(), index.end());
            return index;
        }

        auto lookup(const HostIndex & index, std::uint64_t mask) -> std::optional<std::size_t>
        {
            auto it = std::lower_bound(index.begin(), index.end(), std::pair(mask, std::size_t{0}));
            if (it != index.end() && it->first == mask)
                return it->second;
            return std::nullopt;
        }

        thread_local const HostIndex * current_index = nullptr;

    } // namespace

    PatternMatcher::PatternMatcher(const Hypergraph & pattern) :
        p_(pattern.n()), r_(pattern.r()), edges_(pattern.edge_list()), position_(pattern.n())
    {
        std::vector<std::size_t> degree(p_, 0);
        for (const auto & e : edges_)
            for (auto v : e)
                ++degree[v];
        std::vector<char> placed(p_, 0);
        std::vector<std::size_t> links(p_, 0);
        for (std::size_t step = 0; step < p_; ++step) {
            std::size_t best = p_;
            for (std::size_t v = 0; v < p_; ++v) {
                if (placed[v])
                    continue;
                if (best == p_ || links[v] > links[best] || (links[v] == links[best] && degree[v] > degree[best]))
                    best = v;
            }
            placed[best] = 1;
            position_[best] = step;
            order_.push_back(static_cast<Vertex>(best));
            for (const auto & e : edges_)
                if (std::find(e.begin(), e.end(), best) != e.end())
                    for (auto u : e)
                        if (! placed[u])
                            ++links[u];
        }
        closing_.assign(p_, {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            std::size_t last = 0;
            for (auto v : edges_[i])
                last = std::max(last, position_[v]);
            closing_[last].push_back(i);
        }
    }

    auto PatternMatcher::extend(std::span<const std::uint64_t> host, std::size_t n, std::vector<int> & image,
        std::uint64_t used, std::size_t depth, std::vector<std::size_t> * hit) const -> bool
    {
        const auto & index = *current_index;
        if (depth == p_) {
            if (hit) {
                hit->clear();
                for (const auto & e : edges_) {
                    std::uint64_t m = 0;
                    for (auto v : e)
                        m |= std::uint64_t{1} << image[v];
                    hit->push_back(*lookup(index, m));
                }
            }
            return true;
        }
        const auto v = order_[depth];
        auto closes = [&]() {
            for (auto i : closing_[depth]) {
                std::uint64_t m = 0;
                for (auto u : edges_[i])
                    m |= std::uint64_t{1} << image[u];
                if (! lookup(index, m))
                    return false;
            }
            return true;
        };
        if (image[v] >= 0)
            return closes() && extend(host, n, image, used, depth + 1, hit);
        for (std::size_t h = 0; h < n; ++h) {
            if (used & (std::uint64_t{1} << h))
                continue;
            image[v] = static_cast<int>(h);
            if (closes() && extend(host, n, image, used | (std::uint64_t{1} << h), depth + 1, hit))
                return true;
        }
        image[v] = -1;
        return false;
    }

    auto PatternMatcher::find(std::span<const std::uint64_t> host, std::size_t n) const
        -> std::optional<std::vector<std::size_t>>
    {
        if (p_ > n || edges_.size() > host.size())
            return std::nullopt;
        const auto index = index_host(host);
        current_index = &index;
        std::vector<int> image(p_, -1);
        std::vector<std::size_t> hit;
        const bool found = extend(host, n, image, 0, 0, &hit);
        current_index = nullptr;
        if (! found)
            return std::nullopt;
        return hit;
    }

    auto PatternMatcher::embeds_through(std::span<const std::uint64_t> host, std::size_t n, std::size_t anchor) const
        -> bool
    {
        if (p_ > n || edges_.empty() || edges_.size() > host.size())
            return false;
        const auto index = index_host(host);
        current_index = &index;
        std::vector<Vertex> target;
        for (auto m = host[anchor]; m; m &= m - 1)
            target.push_back(static_cast<Vertex>(std::countr_zero(m)));

        bool found = false;
        std::vector<int> image(p_, -1);
        for (std::size_t f = 0; f < edges_.size() && ! found; ++f) {
            auto perm = target;
            do {
                std::fill(image.begin(), image.end(), -1);
                std::uint64_t used = 0;
                for (std::size_t i = 0; i < r_; ++i) {
                    image[edges_[f][i]] = static_cast<int>(perm[i]);
                    used |= std::uint64_t{1} << perm[i];
                }
                found = extend(host, n, image, used, 0, nullptr);
            } while (! found && std::next_permutation(perm.begin(), perm.end()));
        }
        current_index = nullptr;
        return found;
    }

} // namespace detail

// --- ForbiddenSpec -----------------------------------------------------------------

auto ForbiddenItem::name() const -> std::string
{
    switch (kind) {
    case Kind::expansion_clique: return "expansion-clique:" + std::to_string(param);
    case Kind::matching: return "matching:" + std::to_string(param);
    case Kind::covering_clique: return "covering-clique:" + std::to_string(param);
    case Kind::pattern:
        return "pattern(n=" + std::to_string(pattern ? pattern->n() : 0) +
            ",e=" + std::to_string(pattern ? pattern->edge_count() : 0) + ")";
    }
    return "?";
}

ForbiddenSpec::ForbiddenSpec(std::vector<ForbiddenItem> items) : items_(std::move(items)) {}

auto ForbiddenSpec::expansion_clique(std::size_t l) -> ForbiddenItem
{
    return {ForbiddenItem::Kind::expansion_clique, l, std::nullopt};
}

auto ForbiddenSpec::matching(std::size_t size) -> ForbiddenItem { return {ForbiddenItem::Kind::matching, size, std::nullopt}; }

auto ForbiddenSpec::covering_clique(std::size_t q) -> ForbiddenItem
{
    return {ForbiddenItem::Kind::covering_clique, q, std::nullopt};
}

auto ForbiddenSpec::pattern(Hypergraph h) -> ForbiddenItem
{
    const auto n = h.n();
    return {ForbiddenItem::Kind::pattern, n, std::move(h)};
}

auto ForbiddenSpec::parse_item(std::string_view text) -> ForbiddenItem
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParameterError("forbidden item '" + std::string(text) + "' must look like name:param");
    const auto name = text.substr(0, colon);
    const auto value = text.substr(colon + 1);
    std::size_t param = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), param);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ParameterError("forbidden item '" + std::string(text) + "' has a non-numeric parameter");
    if (name == "expansion-clique" || name == "expansion_clique" || name == "clique")
        return expansion_clique(param);
    if (name == "matching")
        return matching(param);
    if (name == "covering-clique" || name == "covering_clique")
        return covering_clique(param);
    throw ParameterError("unknown forbidden item '" + std::string(name) +
        "' (expected expansion-clique, matching or covering-clique)");
}

auto ForbiddenSpec::add(ForbiddenItem item) -> ForbiddenSpec &
{
    items_.push_back(std::move(item));
    return *this;
}

auto ForbiddenSpec::describe() const -> std::string
{
    std::string out;
    for (const auto & item : items_) {
        if (! out.empty())
            out += ", ";
        out += item.name();
    }
    return "{" + out + "}";
}

auto contains_pattern(const Hypergraph & h, const Hypergraph & pattern) -> bool
{
    if (pattern.r() != h.r() && ! pattern.empty())
        return false;
    if (! h.has_masks())
        throw CapacityError("pattern containment supports at most 64 vertices");
    if (pattern.n() > h.n())
        return false;
    return detail::PatternMatcher(pattern).find(h.masks(), h.n()).has_value();
}

auto first_violation(const Hypergraph & h, const ForbiddenSpec & spec) -> std::optional<std::string>
{
    for (const auto & item : spec.items()) {
        bool hit = false;
        switch (item.kind) {
        case ForbiddenItem::Kind::expansion_clique:
            hit = h.r() >= 2 && item.param >= 2 && contains_expansion_clique(h, item.param).has_value();
            if (item.param < 2)
                hit = true;
            break;
        case ForbiddenItem::Kind::matching:
            hit = item.param == 0 || matching_number(h) >= item.param;
            break;
        case ForbiddenItem::Kind::covering_clique:
            hit = item.param < 2 ? h.n() >= item.param : contains_covering_clique(h, item.param).has_value();
            break;
        case ForbiddenItem::Kind::pattern: hit = contains_pattern(h, *item.pattern); break;
        }
        if (hit)
            return item.name();
    }
    return std::nullopt;
}

} // namespace hyperturan
