#include <hyperturan/errors.hpp>
#include <hyperturan/limits.hpp>
#include <hyperturan/search.hpp>

#include <algorithm>
#include <bit>
#include <limits>

namespace hyperturan {

namespace {

    class PartitionSearch {
      public:
        PartitionSearch(const Hypergraph & h, std::size_t l) : h_(h), n_(h.n()), r_(h.r()), l_(l), part_(h.n(), 0)
        {
            capacity_.resize(l);
            auto sizes = balanced_part_sizes(static_cast<Count>(n_), static_cast<Count>(l));
            for (std::size_t p = 0; p < l; ++p)
                capacity_[p] = static_cast<std::size_t>(sizes[p]);
            filled_.assign(l, 0);
            // edges grouped by their largest vertex
            by_last_.assign(n_, {});
            for (std::size_t i = 0; i < h.edge_count(); ++i) {
                auto e = h.edge(i);
                by_last_[e.back()].push_back(i);
            }
        }

        auto run() -> PartitionDistance
        {
            best_ = std::numeric_limits<Count>::max();
            assign(0, 0);
            return {best_, best_part_};
        }

      private:
        /// r-sets with largest vertex v whose membership in h and in the
        /// partite graph differ, given parts of 0..v.
        auto mismatches_at(std::size_t v) const -> Count
        {
            // transversal (r-1)-sets among 0..v-1 avoiding part_[v]
            std::vector<Count> other;
            for (std::size_t p = 0; p < l_; ++p)
                if (p != part_[v])
                    other.push_back(static_cast<Count>(filled_[p]));
            const Count transversal = r_ == 0 ? 0 : elementary_symmetric(other, static_cast<Count>(r_ - 1));
            Count present = 0, present_transversal = 0;
            for (auto i : by_last_[v]) {
                ++present;
                auto e = h_.edge(i);
                std::uint64_t seen = 0;
                bool ok = true;
                for (auto u : e) {
                    auto bit = std::uint64_t{1} << part_[u];
                    if (seen & bit) {
                        ok = false;
                        break;
                    }
                    seen |= bit;
                }
                if (ok)
                    ++present_transversal;
            }
            return transversal + present - 2 * present_transversal;
        }

        void assign(std::size_t v, Count cost)
        {
            if (cost >= best_)
                return;
            if (v == n_) {
                best_ = cost;
                best_part_ = part_;
                return;
            }
            for (std::size_t p = 0; p < l_; ++p) {
                if (filled_[p] == capacity_[p])
                    continue;
                // empty parts of equal capacity are interchangeable
                bool duplicate = false;
                if (filled_[p] == 0)
                    for (std::size_t q = 0; q < p; ++q)
                        if (filled_[q] == 0 && capacity_[q] == capacity_[p]) {
                            duplicate = true;
                            break;
                        }
                if (duplicate)
                    continue;
                part_[v] = p;
                const auto delta = mismatches_at(v);
                ++filled_[p];
                assign(v + 1, cost + delta);
                --filled_[p];
            }
        }

        const Hypergraph & h_;
        std::size_t n_, r_, l_;
        std::vector<std::size_t> part_;
        std::vector<std::size_t> capacity_;
        std::vector<std::size_t> filled_;
        std::vector<std::vector<std::size_t>> by_last_;
        Count best_ = 0;
        std::vector<std::size_t> best_part_;
    };

} // namespace

auto partition_distance(const Hypergraph & h, std::size_t l) -> PartitionDistance
{
    if (l < 1)
        throw ParameterError("partition_distance needs l >= 1");
    if (l > 64)
        throw CapacityError("partition_distance supports at most 64 parts");
    const auto limits = Limits::current();
    if (h.n() > limits.stability_max_n)
        throw CapacityError("partition_distance is exact only for n <= " + std::to_string(limits.stability_max_n));
    return PartitionSearch(h, l).run();
}

} // namespace hyperturan
