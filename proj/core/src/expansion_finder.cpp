#include "expansion_finder.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace hyperturan::detail {

ExpansionFinder::ExpansionFinder(std::span<const std::uint64_t> edges, std::size_t n, std::size_t r, std::size_t q) :
    edges_(edges), n_(n), r_(r), q_(q), adjacency_(n, 0), pair_edges_(n * n), weight_(n, 0)
{
    const std::size_t pairs_needed = q * (q - 1) / 2;
    if (q < 2 || r < 2 || n < q + (r - 2) * pairs_needed || edges.size() < pairs_needed) {
        possible_ = false;
        return;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto m = edges[i];
        for (auto a = m; a; a &= a - 1) {
            auto u = static_cast<std::size_t>(std::countr_zero(a));
            for (auto b = a & (a - 1); b; b &= b - 1) {
                auto v = static_cast<std::size_t>(std::countr_zero(b));
                pair_edges_[u * n_ + v].push_back(i);
                adjacency_[u] |= std::uint64_t{1} << v;
                adjacency_[v] |= std::uint64_t{1} << u;
                ++weight_[u];
                ++weight_[v];
            }
        }
    }
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) { return weight_[a] > weight_[b]; });
    rank_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        rank_[order_[i]] = i;
}

auto ExpansionFinder::enumerate_cores(std::vector<std::uint32_t> & core, std::uint64_t candidates, std::size_t want,
    const std::function<bool(const std::vector<std::uint32_t> &)> & on_core) -> bool
{
    if (want == 0) {
        auto sorted = core;
        std::sort(sorted.begin(), sorted.end());
        return on_core(sorted);
    }
    for (auto v : order_) {
        if (static_cast<std::size_t>(std::popcount(candidates)) < want)
            return false;
        const auto bit = std::uint64_t{1} << v;
        if (! (candidates & bit))
            continue;
        candidates &= ~bit;
        core.push_back(v);
        bool stop = enumerate_cores(core, candidates & adjacency_[v], want - 1, on_core);
        core.pop_back();
        if (stop)
            return true;
    }
    return false;
}

auto ExpansionFinder::assign(const std::vector<std::uint32_t> & core,
    std::optional<std::pair<std::size_t, std::size_t>> fixed_pair, std::optional<std::size_t> fixed_edge,
    const CopyVisitor & visit, const PartialCheck & partial) -> bool
{
    std::uint64_t core_mask = 0;
    for (auto v : core)
        core_mask |= std::uint64_t{1} << v;

    struct PairSlot {
        std::size_t i, j;
        std::vector<std::size_t> candidates;
    };
    std::vector<PairSlot> slots;
    for (std::size_t i = 0; i < core.size(); ++i)
        for (std::size_t j = i + 1; j < core.size(); ++j) {
            PairSlot slot{i, j, {}};
            const auto pair_mask = (std::uint64_t{1} << core[i]) | (std::uint64_t{1} << core[j]);
            if (fixed_pair && fixed_pair->first == i && fixed_pair->second == j) {
                slot.candidates.push_back(*fixed_edge);
            }
            else {
                for (auto e : pair_edges_[core[i] * n_ + core[j]])
                    if ((edges_[e] & core_mask) == pair_mask && (! fixed_edge || e != *fixed_edge))
                        slot.candidates.push_back(e);
            }
            if (slot.candidates.empty())
                return false;
            slots.push_back(std::move(slot));
        }
    std::stable_sort(slots.begin(), slots.end(), [&](const PairSlot & a, const PairSlot & b) {
        bool a_fixed = fixed_pair && a.i == fixed_pair->first && a.j == fixed_pair->second;
        bool b_fixed = fixed_pair && b.i == fixed_pair->first && b.j == fixed_pair->second;
        if (a_fixed != b_fixed)
            return a_fixed;
        return a.candidates.size() < b.candidates.size();
    });

    std::vector<std::size_t> chosen;
    chosen.reserve(slots.size());
    auto recurse = [&](auto && self, std::size_t depth, std::uint64_t used_extras) -> bool {
        if (depth == slots.size()) {
            ExpansionCopy copy;
            copy.core = core;
            std::vector<std::size_t> idx(slots.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(),
                [&](auto a, auto b) { return std::pair(slots[a].i, slots[a].j) < std::pair(slots[b].i, slots[b].j); });
            for (auto k : idx) {
                copy.pairs.emplace_back(slots[k].i, slots[k].j);
                copy.edges.push_back(chosen[k]);
            }
            return visit(copy);
        }
        for (auto e : slots[depth].candidates) {
            const auto extras = edges_[e] & ~core_mask;
            if (extras & used_extras)
                continue;
            chosen.push_back(e);
            if (! partial || partial(chosen))
                if (self(self, depth + 1, used_extras | extras))
                    return true;
            chosen.pop_back();
        }
        return false;
    };
    return recurse(recurse, 0, 0);
}

auto ExpansionFinder::search(const CopyVisitor & visit, const PartialCheck & partial) -> bool
{
    if (! possible_)
        return false;
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    std::vector<std::uint32_t> core;
    return enumerate_cores(core, all, q_,
        [&](const std::vector<std::uint32_t> & c) { return assign(c, std::nullopt, std::nullopt, visit, partial); });
}

auto ExpansionFinder::search_through(std::size_t anchor, const CopyVisitor & visit, const PartialCheck & partial) -> bool
{
    if (! possible_)
        return false;
    const auto anchor_mask = edges_[anchor];
    for (auto a_bits = anchor_mask; a_bits; a_bits &= a_bits - 1) {
        const auto a = static_cast<std::uint32_t>(std::countr_zero(a_bits));
        for (auto b_bits = a_bits & (a_bits - 1); b_bits; b_bits &= b_bits - 1) {
            const auto b = static_cast<std::uint32_t>(std::countr_zero(b_bits));
            const auto others = anchor_mask & ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
            const auto candidates = adjacency_[a] & adjacency_[b] & ~anchor_mask & ~others;
            std::vector<std::uint32_t> core;
            bool stop = enumerate_cores(core, candidates, q_ - 2, [&](const std::vector<std::uint32_t> & rest) {
                std::vector<std::uint32_t> full = rest;
                full.push_back(a);
                full.push_back(b);
                std::sort(full.begin(), full.end());
                auto ia = static_cast<std::size_t>(std::find(full.begin(), full.end(), a) - full.begin());
                auto ib = static_cast<std::size_t>(std::find(full.begin(), full.end(), b) - full.begin());
                return assign(full, std::pair(ia, ib), anchor, visit, partial);
            });
            if (stop)
                return true;
        }
    }
    return false;
}

} // namespace hyperturan::detail
