#include <hyperturan/constructions.hpp>
#include <hyperturan/errors.hpp>
#include <hyperturan/limits.hpp>
#include <hyperturan/search.hpp>

#include "expansion_finder.hpp"
#include "sdr.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace hyperturan {

namespace {

    class RainbowOracle {
      public:
        RainbowOracle(std::size_t n, std::size_t r, std::size_t k, std::size_t l, const SearchOptions & options) :
            n_(n), r_(r), k_(k), l_(l), options_(options)
        {
            candidates_ = all_subset_masks(static_cast<unsigned>(n), static_cast<unsigned>(r));
            colour_.assign(candidates_.size(), 0);
            collect_copies();
            pack_groups();

            for (std::uint64_t m = 1; m < (std::uint64_t{1} << k_); ++m)
                masks_.push_back(m);
            std::stable_sort(masks_.begin(), masks_.end(),
                [](auto a, auto b) { return std::popcount(a) > std::popcount(b); });
            masks_.push_back(0);
        }

        auto run() -> SearchOutcome
        {
            auto warm = warm_start();
            best_ = static_cast<Count>(warm.total_size());
            const auto warm_value = best_;

            bound_ = 0;
            group_decided_.assign(group_cap_.size(), 0);
            group_open_.assign(group_cap_.size(), 0);
            for (std::size_t e = 0; e < candidates_.size(); ++e)
                if (group_of_[e] >= 0)
                    ++group_open_[static_cast<std::size_t>(group_of_[e])];
                else
                    bound_ += static_cast<Count>(k_);
            for (std::size_t g = 0; g < group_cap_.size(); ++g)
                bound_ += contribution(g);
            copy_decided_.assign(copies_.size(), 0);
            copy_open_.assign(copies_.size(), static_cast<Count>(l_ * (l_ - 1) / 2));
            average_sum_ = 0;
            for (std::size_t c = 0; c < copies_.size(); ++c)
                average_sum_ += copy_contribution(c);

            search(0, 0, 0);

            SearchOutcome out;
            out.value = best_;
            out.proven_optimal = ! aborted_;
            out.nodes_explored = nodes_;
            out.witness = best_ == warm_value ? warm : to_instance(witness_);
            const auto & w = std::get<LayeredInstance>(out.witness);
            if (contains_rainbow_expansion_clique(w, l_))
                throw std::logic_error("rainbow oracle witness contains a rainbow copy");
            if (static_cast<Count>(w.total_size()) != out.value)
                throw std::logic_error("rainbow oracle witness size mismatch");
            return out;
        }

      private:
        void collect_copies()
        {
            copies_by_max_.assign(candidates_.size(), {});
            copies_of_.assign(candidates_.size(), {});
            if (l_ < 2)
                return;
            detail::ExpansionFinder finder(candidates_, n_, r_, l_);
            if (! finder.possible())
                return;
            std::set<std::vector<std::size_t>> seen;
            finder.search([&](const detail::ExpansionCopy & copy) {
                auto edges = copy.edges;
                std::sort(edges.begin(), edges.end());
                if (seen.insert(edges).second) {
                    copies_.push_back(edges);
                    copies_by_max_[edges.back()].push_back(copies_.size() - 1);
                    for (auto e : edges)
                        copies_of_[e].push_back(copies_.size() - 1);
                }
                return false;
            });
        }

        void pack_groups()
        {
            group_of_.assign(candidates_.size(), -1);
            const auto m = static_cast<Count>(l_ * (l_ - 1) / 2);
            const auto k = static_cast<Count>(k_);
            // the most colour a non-rainbow copy can carry: a Hall violator of j
            // edges holds at most j(j-1) colours, the others k each
            const Count cap = std::min(m * k, std::max((m - 1) * k, m * (m - 1)));
            for (const auto & copy : copies_) {
                if (std::any_of(copy.begin(), copy.end(), [&](auto e) { return group_of_[e] >= 0; }))
                    continue;
                for (auto e : copy)
                    group_of_[e] = static_cast<int>(group_cap_.size());
                group_cap_.push_back(cap);
            }
            copy_cap_ = cap;
        }

        auto contribution(std::size_t g) const -> Count
        {
            return std::min(group_decided_[g] + static_cast<Count>(k_) * group_open_[g], group_cap_[g]);
        }

        auto copy_contribution(std::size_t c) const -> Count
        {
            return std::min(copy_decided_[c] + static_cast<Count>(k_) * copy_open_[c], copy_cap_);
        }

        /// Every r-set lies in the same number of copies of the complete graph,
        /// so the total is the average of the copy loads.
        auto node_bound() const -> Count
        {
            if (copies_.empty())
                return bound_;
            const auto per_edge = static_cast<Count>(copies_of_[0].size());
            return std::min(bound_, average_sum_ / per_edge);
        }

        void decide(std::size_t e, Count size, int direction)
        {
            for (auto c : copies_of_[e]) {
                average_sum_ -= copy_contribution(c);
                copy_decided_[c] += direction * size;
                copy_open_[c] -= direction;
                average_sum_ += copy_contribution(c);
            }
        }

        auto rainbow_copy_closes(std::size_t e) const -> bool
        {
            std::vector<std::uint64_t> sets;
            for (auto c : copies_by_max_[e]) {
                sets.clear();
                for (auto f : copies_[c])
                    sets.push_back(colour_[f]);
                if (detail::has_sdr(sets))
                    return true;
            }
            return false;
        }

        void search(std::size_t e, Count sum, std::size_t used)
        {
            if (aborted_)
                return;
            ++nodes_;
            if (options_.budget && nodes_ > *options_.budget) {
                aborted_ = true;
                return;
            }
            if (e == candidates_.size()) {
                if (sum > best_) {
                    best_ = sum;
                    witness_ = colour_;
                }
                return;
            }
            if (node_bound() <= best_)
                return;

            const auto g = group_of_[e];
            for (auto mask : masks_) {
                // colours not used yet are interchangeable: only take a prefix of them
                const auto fresh = mask >> used;
                if (fresh & (fresh + 1))
                    continue;
                const auto size = static_cast<Count>(std::popcount(mask));
                const auto next_used = std::max<std::size_t>(used, static_cast<std::size_t>(std::bit_width(mask)));

                colour_[e] = mask;
                if (! rainbow_copy_closes(e)) {
                    const Count saved = bound_;
                    decide(e, size, 1);
                    if (g >= 0) {
                        auto gi = static_cast<std::size_t>(g);
                        bound_ -= contribution(gi);
                        group_decided_[gi] += size;
                        --group_open_[gi];
                        bound_ += contribution(gi);
                        search(e + 1, sum + size, next_used);
                        group_decided_[gi] -= size;
                        ++group_open_[gi];
                    }
                    else {
                        bound_ += size - static_cast<Count>(k_);
                        search(e + 1, sum + size, next_used);
                    }
                    bound_ = saved;
                    decide(e, size, -1);
                }
                colour_[e] = 0;
                if (aborted_ || node_bound() <= best_)
                    return;
            }
        }

        auto warm_start() const -> LayeredInstance
        {
            LayeredInstance best(n_, r_, std::vector<Hypergraph>(k_, make_hypergraph(n_, r_, {})));
            if (! options_.warm_start)
                return best;
            for (auto kind : {RainbowKind::complete_plus_empty, RainbowKind::identical_turan}) {
                auto candidate = generate_rainbow_layers(kind, n_, r_, l_, k_);
                if (candidate.total_size() > best.total_size() && ! contains_rainbow_expansion_clique(candidate, l_))
                    best = std::move(candidate);
            }
            return best;
        }

        auto to_instance(const std::vector<std::uint64_t> & colours) const -> LayeredInstance
        {
            std::vector<std::vector<Vertex>> flat(k_);
            for (std::size_t e = 0; e < candidates_.size(); ++e)
                for (std::size_t c = 0; c < k_; ++c)
                    if (colours[e] & (std::uint64_t{1} << c))
                        for (auto m = candidates_[e]; m; m &= m - 1)
                            flat[c].push_back(static_cast<Vertex>(std::countr_zero(m)));
            std::vector<Hypergraph> layers;
            for (auto & f : flat)
                layers.push_back(Hypergraph::from_sorted_flat(n_, r_, std::move(f)));
            return LayeredInstance(n_, r_, std::move(layers));
        }

        std::size_t n_, r_, k_, l_;
        SearchOptions options_;
        std::vector<std::uint64_t> candidates_;
        std::vector<std::vector<std::size_t>> copies_;
        std::vector<std::vector<std::size_t>> copies_by_max_;
        std::vector<std::vector<std::size_t>> copies_of_;
        std::vector<Count> copy_decided_;
        std::vector<Count> copy_open_;
        Count copy_cap_ = 0;
        Count average_sum_ = 0;
        std::vector<int> group_of_;
        std::vector<Count> group_cap_;
        std::vector<Count> group_decided_;
        std::vector<Count> group_open_;
        std::vector<std::uint64_t> masks_;
        std::vector<std::uint64_t> colour_;
        std::vector<std::uint64_t> witness_;
        Count bound_ = 0;
        Count best_ = 0;
        std::uint64_t nodes_ = 0;
        bool aborted_ = false;
    };

} // namespace

auto rainbow_max_sum(std::size_t n, std::size_t r, std::size_t k, std::size_t l, const SearchOptions & options)
    -> SearchOutcome
{
    if (k < 1)
        throw ParameterError("rainbow oracle needs k >= 1");
    if (l < 2)
        throw ParameterError("rainbow oracle needs l >= 2");
    if (r < 2)
        throw ParameterError("rainbow oracle needs r >= 2");
    if (n > mask_capacity || k > mask_capacity - 1)
        throw CapacityError("rainbow oracle supports at most 64 vertices and 63 layers");
    const auto limits = Limits::current();
    if ((n > limits.rainbow_oracle_max_n || k > limits.rainbow_oracle_max_k) && ! options.budget)
        throw CapacityError("exact rainbow oracle mode is limited to n <= " + std::to_string(limits.rainbow_oracle_max_n) +
            " and k <= " + std::to_string(limits.rainbow_oracle_max_k) + "; pass a node budget for a best-effort search");
    return RainbowOracle(n, r, k, l, options).run();
}

} // namespace hyperturan
