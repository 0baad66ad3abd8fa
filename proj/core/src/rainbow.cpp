#include <hyperturan/detectors.hpp>
#include <hyperturan/errors.hpp>
#include <hyperturan/limits.hpp>

#include "expansion_finder.hpp"
#include "sdr.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace hyperturan {

namespace detail {

    namespace {

        auto augment(std::size_t position, std::span<const std::uint64_t> sets, std::vector<int> & owner,
            std::uint64_t & visited) -> bool
        {
            for (auto bits = sets[position] & ~visited; bits; bits &= bits - 1) {
                const auto c = static_cast<std::size_t>(std::countr_zero(bits));
                visited |= std::uint64_t{1} << c;
                if (owner[c] < 0 || augment(static_cast<std::size_t>(owner[c]), sets, owner, visited)) {
                    owner[c] = static_cast<int>(position);
                    return true;
                }
            }
            return false;
        }

    } // namespace

    auto find_sdr(std::span<const std::uint64_t> colour_sets) -> std::optional<std::vector<std::size_t>>
    {
        if (colour_sets.size() > 64)
            return std::nullopt;
        std::vector<int> owner(64, -1);
        for (std::size_t p = 0; p < colour_sets.size(); ++p) {
            std::uint64_t visited = 0;
            if (! augment(p, colour_sets, owner, visited))
                return std::nullopt;
        }
        std::vector<std::size_t> colour_of(colour_sets.size());
        for (std::size_t c = 0; c < 64; ++c)
            if (owner[c] >= 0)
                colour_of[static_cast<std::size_t>(owner[c])] = c;
        return colour_of;
    }

} // namespace detail

auto rainbow_assignment(const std::vector<std::vector<int>> & colour_sets, std::optional<int> forbidden_colour)
    -> RainbowResult
{
    // compress colours to dense indices, in increasing order
    std::vector<int> colours;
    for (const auto & set : colour_sets)
        for (int c : set)
            if (! forbidden_colour || c != *forbidden_colour)
                colours.push_back(c);
    std::sort(colours.begin(), colours.end());
    colours.erase(std::unique(colours.begin(), colours.end()), colours.end());
    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < colours.size(); ++i)
        index[colours[i]] = i;

    const std::size_t positions = colour_sets.size();
    std::vector<std::vector<std::size_t>> adjacency(positions);
    for (std::size_t p = 0; p < positions; ++p) {
        for (int c : colour_sets[p])
            if (! forbidden_colour || c != *forbidden_colour)
                adjacency[p].push_back(index[c]);
        std::sort(adjacency[p].begin(), adjacency[p].end());
        adjacency[p].erase(std::unique(adjacency[p].begin(), adjacency[p].end()), adjacency[p].end());
    }

    std::vector<long> owner(colours.size(), -1);
    std::vector<long> matched(positions, -1);
    std::vector<char> seen;
    auto try_augment = [&](auto && self, std::size_t p) -> bool {
        for (auto c : adjacency[p]) {
            if (seen[c])
                continue;
            seen[c] = 1;
            if (owner[c] < 0 || self(self, static_cast<std::size_t>(owner[c]))) {
                owner[c] = static_cast<long>(p);
                matched[p] = static_cast<long>(c);
                return true;
            }
        }
        return false;
    };

    for (std::size_t p = 0; p < positions; ++p) {
        seen.assign(colours.size(), 0);
        if (try_augment(try_augment, p))
            continue;

        // Koenig: positions reachable from p by alternating paths form a violator
        std::vector<char> in_set(positions, 0), colour_reached(colours.size(), 0);
        std::vector<std::size_t> queue{p};
        in_set[p] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (auto c : adjacency[queue[head]]) {
                if (colour_reached[c])
                    continue;
                colour_reached[c] = 1;
                auto next = static_cast<std::size_t>(owner[c]);
                if (! in_set[next]) {
                    in_set[next] = 1;
                    queue.push_back(next);
                }
            }
        HallViolator violator;
        for (std::size_t q = 0; q < positions; ++q)
            if (in_set[q])
                violator.positions.push_back(q);
        for (std::size_t c = 0; c < colours.size(); ++c)
            if (colour_reached[c])
                violator.neighbourhood.push_back(colours[c]);
        return violator;
    }

    RainbowAssignment assignment;
    for (std::size_t p = 0; p < positions; ++p)
        assignment.colours.push_back(colours[static_cast<std::size_t>(matched[p])]);
    return assignment;
}

namespace {

    auto require_layers(const LayeredInstance & layers, std::size_t clique) -> void
    {
        if (clique < 2)
            throw ParameterError("clique size must be at least 2");
        if (layers.k() > 64)
            throw CapacityError("rainbow detection supports at most 64 layers");
        const auto limits = Limits::current();
        if (layers.n() > limits.expansion_detector_max_n)
            throw CapacityError("rainbow expansion detection is exact only for n <= " +
                std::to_string(limits.expansion_detector_max_n));
    }

    auto to_embedding(const Hypergraph & g, const detail::ExpansionCopy & copy) -> Embedding
    {
        Embedding out;
        out.core.assign(copy.core.begin(), copy.core.end());
        for (std::size_t p = 0; p < copy.pairs.size(); ++p) {
            auto e = g.edge(copy.edges[p]);
            out.edge_assignment.push_back({copy.pairs[p].first, copy.pairs[p].second, {e.begin(), e.end()}});
        }
        return out;
    }

    auto without(std::uint64_t set, std::size_t colour) -> std::uint64_t { return set & ~(std::uint64_t{1} << colour); }

} // namespace

auto contains_rainbow_expansion_clique(const LayeredInstance & layers, std::size_t clique) -> std::optional<Embedding>
{
    require_layers(layers, clique);
    const auto g = layers.union_graph();
    const auto colours = layers.colour_masks();
    detail::ExpansionFinder finder(g.masks(), g.n(), g.r(), clique);

    std::vector<std::uint64_t> sets;
    auto partial = [&](std::span<const std::size_t> chosen) {
        sets.clear();
        for (auto e : chosen)
            sets.push_back(colours[e]);
        return detail::has_sdr(sets);
    };
    std::optional<Embedding> found;
    finder.search(
        [&](const detail::ExpansionCopy & copy) {
            sets.clear();
            for (auto e : copy.edges)
                sets.push_back(colours[e]);
            auto sdr = detail::find_sdr(sets);
            if (! sdr)
                return false;
            auto emb = to_embedding(g, copy);
            emb.color_assignment = *sdr;
            found = std::move(emb);
            return true;
        },
        partial);

    if (found) {
        if (auto why = check_rainbow_embedding(layers, clique, *found); ! why.empty())
            throw std::logic_error("rainbow detector produced an invalid embedding: " + why);
    }
    return found;
}

auto contains_super_rainbow(const LayeredInstance & layers, std::size_t clique) -> std::optional<SuperRainbowWitness>
{
    require_layers(layers, clique);
    if (layers.k() < 2)
        return std::nullopt;
    const auto g = layers.union_graph();
    const auto colours = layers.colour_masks();
    detail::ExpansionFinder finder(g.masks(), g.n(), g.r(), clique);

    std::vector<std::uint64_t> sets;
    auto all_exclusions_ok = [&](std::span<const std::size_t> chosen) {
        for (std::size_t i = 0; i < layers.k(); ++i) {
            sets.clear();
            for (auto e : chosen)
                sets.push_back(without(colours[e], i));
            if (! detail::has_sdr(sets))
                return false;
        }
        return true;
    };
    std::optional<SuperRainbowWitness> found;
    finder.search(
        [&](const detail::ExpansionCopy & copy) {
            SuperRainbowWitness witness;
            witness.copy = to_embedding(g, copy);
            for (std::size_t i = 0; i < layers.k(); ++i) {
                sets.clear();
                for (auto e : copy.edges)
                    sets.push_back(without(colours[e], i));
                auto sdr = detail::find_sdr(sets);
                if (! sdr)
                    return false;
                witness.avoiding.push_back(*sdr);
            }
            found = std::move(witness);
            return true;
        },
        all_exclusions_ok);

    if (found) {
        for (std::size_t i = 0; i < layers.k(); ++i) {
            auto emb = found->copy;
            emb.color_assignment = found->avoiding[i];
            if (auto why = check_rainbow_embedding(layers, clique, emb, i); ! why.empty())
                throw std::logic_error("super-rainbow detector produced an invalid witness: " + why);
        }
    }
    return found;
}

} // namespace hyperturan
