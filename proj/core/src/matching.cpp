#include "matching.hpp"

#include <algorithm>
#include <bit>

namespace hyperturan::detail {

namespace {

    class MatchingSearch {
      public:
        MatchingSearch(std::span<const std::uint64_t> edges, std::size_t stop_at) :
            edges_(edges), stop_at_(stop_at)
        {
            for (auto e : edges)
                arity_ = std::max<std::size_t>(arity_, static_cast<std::size_t>(std::popcount(e)));
            arity_ = std::max<std::size_t>(arity_, 1);
        }

        auto run() -> std::size_t
        {
            std::vector<std::size_t> all(edges_.size());
            for (std::size_t i = 0; i < all.size(); ++i)
                all[i] = i;
            if (stop_at_ == 0)
                return 0;
            recurse(all);
            return best_;
        }

        [[nodiscard]] auto best_matching() const -> const std::vector<std::size_t> & { return best_matching_; }

      private:
        auto recurse(const std::vector<std::size_t> & live) -> void
        {
            if (stack_.size() > best_) {
                best_ = stack_.size();
                best_matching_ = stack_;
            }
            if (best_ >= stop_at_ || live.empty())
                return;

            std::uint64_t covered = 0;
            for (auto i : live)
                covered |= edges_[i];
            auto by_vertices = static_cast<std::size_t>(std::popcount(covered)) / arity_;
            if (stack_.size() + std::min(live.size(), by_vertices) <= best_)
                return;

            const std::uint64_t v = covered & (~covered + 1);
            std::vector<std::size_t> next;
            for (auto i : live) {
                if (! (edges_[i] & v))
                    continue;
                next.clear();
                for (auto j : live)
                    if (! (edges_[j] & edges_[i]))
                        next.push_back(j);
                stack_.push_back(i);
                recurse(next);
                stack_.pop_back();
                if (best_ >= stop_at_)
                    return;
            }

            next.clear();
            for (auto j : live)
                if (! (edges_[j] & v))
                    next.push_back(j);
            recurse(next);
        }

        std::span<const std::uint64_t> edges_;
        std::size_t stop_at_;
        std::size_t arity_ = 1;
        std::size_t best_ = 0;
        std::vector<std::size_t> stack_;
        std::vector<std::size_t> best_matching_;
    };

} // namespace

auto max_matching_size(std::span<const std::uint64_t> edges, std::size_t stop_at) -> std::size_t
{
    MatchingSearch search(edges, stop_at);
    return search.run();
}

auto find_matching(std::span<const std::uint64_t> edges, std::size_t k) -> std::optional<std::vector<std::size_t>>
{
    if (k == 0)
        return std::vector<std::size_t>{};
    MatchingSearch search(edges, k);
    if (search.run() < k)
        return std::nullopt;
    return search.best_matching();
}

} // namespace hyperturan::detail
