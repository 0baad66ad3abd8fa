#include <hyperturan/constructions.hpp>
#include <hyperturan/errors.hpp>
#include <hyperturan/limits.hpp>
#include <hyperturan/search.hpp>

#include "expansion_finder.hpp"
#include "matching.hpp"
#include "pattern_match.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <thread>

namespace hyperturan {

namespace {

    /// Fixed-size bitset over candidate indices.
    class Bits {
      public:
        Bits() = default;
        explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

        void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
        void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
        [[nodiscard]] auto test(std::size_t i) const -> bool { return (words_[i / 64] >> (i % 64)) & 1U; }

        [[nodiscard]] auto count() const -> std::size_t
        {
            std::size_t c = 0;
            for (auto w : words_)
                c += static_cast<std::size_t>(std::popcount(w));
            return c;
        }

        /// First set index, or npos.
        [[nodiscard]] auto first() const -> std::size_t
        {
            for (std::size_t w = 0; w < words_.size(); ++w)
                if (words_[w])
                    return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
            return npos;
        }

        template <typename F>
        void for_each(F && f) const
        {
            for (std::size_t w = 0; w < words_.size(); ++w)
                for (auto bits = words_[w]; bits; bits &= bits - 1)
                    f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        }

        static constexpr std::size_t npos = static_cast<std::size_t>(-1);

      private:
        std::vector<std::uint64_t> words_;
    };

    struct Node {
        std::vector<std::size_t> chosen;
        std::vector<std::uint64_t> chosen_masks;
        Bits open; ///< undecided candidates whose addition keeps the graph free
        std::size_t depth = 0;
    };

    /// Candidate edges partitioned into groups, each holding at most cap edges
    /// of any free graph.
    struct GroupBound {
        std::vector<int> group_of;
        std::vector<std::size_t> cap;
    };

    /// All forbidden matchings in the complete graph. Every candidate
    /// lies in the same number of them, so a free graph has at most
    /// sum(min(load, cap)) / per_edge edges.
    struct AverageBound {
        std::vector<std::vector<std::size_t>> copies;
        std::size_t cap = 0;
        std::size_t per_edge = 0;
    };

    class Oracle {
      public:
        Oracle(std::size_t n, std::size_t r, const ForbiddenSpec & spec, const SearchOptions & options) :
            n_(n), r_(r), spec_(spec), options_(options)
        {
            candidates_ = all_subset_masks(static_cast<unsigned>(n), static_cast<unsigned>(r));
            for (const auto & item : spec.items())
                if (item.kind == ForbiddenItem::Kind::pattern)
                    matchers_.emplace_back(*item.pattern);
                else
                    matchers_.emplace_back(Hypergraph{});
            build_bounds();
        }

        auto run() -> SearchOutcome
        {
            Node root;
            root.open = Bits(candidates_.size());
            const auto empty = Hypergraph::from_sorted_flat(n_, r_, {});
            for (std::size_t i = 0; i < candidates_.size(); ++i)
                if (single_edge_free(i))
                    root.open.set(i);

            Hypergraph warm = empty;
            if (options_.warm_start)
                warm = warm_start();
            best_ = static_cast<Count>(warm.edge_count());
            const Count warm_value = best_;

            if (options_.jobs <= 1)
                explore(root);
            else
                explore_parallel(root);

            SearchOutcome out;
            out.proven_optimal = ! aborted_;
            out.value = best_;
            if (best_ == warm_value)
                out.witness = warm;
            else {
                if (options_.jobs > 1 && ! aborted_) {
                    // deterministic witness: the first optimum in serial order
                    best_ = out.value - 1;
                    stop_at_ = out.value;
                    have_witness_ = false;
                    explore(root);
                }
                out.witness = to_hypergraph(witness_);
            }
            out.nodes_explored = nodes_.load();
            const auto & w = std::get<Hypergraph>(out.witness);
            if (auto why = first_violation(w, spec_))
                throw std::logic_error("oracle witness contains " + *why);
            if (static_cast<Count>(w.edge_count()) != out.value)
                throw std::logic_error("oracle witness size mismatch");
            return out;
        }

      private:
        // --- freeness -------------------------------------------------------------

        auto single_edge_free(std::size_t i) const -> bool
        {
            auto h = Hypergraph::from_sorted_flat(n_, r_, edge_of(i));
            return ! first_violation(h, spec_).has_value();
        }

        auto edge_of(std::size_t i) const -> std::vector<Vertex>
        {
            std::vector<Vertex> e;
            for (auto m = candidates_[i]; m; m &= m - 1)
                e.push_back(static_cast<Vertex>(std::countr_zero(m)));
            return e;
        }

        /// Does chosen + {f} contain a forbidden copy? chosen already holds the
        /// edge just added, and chosen without it + {f} is known to be free.
        auto conflicts(const std::vector<std::uint64_t> & chosen, std::uint64_t added, std::size_t f,
            std::vector<std::uint64_t> & scratch) const -> bool
        {
            const auto fm = candidates_[f];
            for (std::size_t it = 0; it < spec_.items().size(); ++it) {
                const auto & item = spec_.items()[it];
                switch (item.kind) {
                case ForbiddenItem::Kind::matching: {
                    if (item.param <= 1)
                        return true;
                    if (fm & added)
                        break;
                    const auto need = item.param - 2;
                    if (need == 0)
                        return true;
                    scratch.clear();
                    for (auto c : chosen)
                        if (! (c & (fm | added)))
                            scratch.push_back(c);
                    if (scratch.size() >= need && detail::max_matching_size(scratch, need) >= need)
                        return true;
                    break;
                }
                case ForbiddenItem::Kind::expansion_clique: {
                    if (std::popcount(fm & added) >= 2)
                        break;
                    scratch.assign(chosen.begin(), chosen.end());
                    scratch.push_back(fm);
                    detail::ExpansionFinder finder(scratch, n_, r_, item.param);
                    if (finder.possible() &&
                        finder.search_through(scratch.size() - 1, [](const detail::ExpansionCopy &) { return true; }))
                        return true;
                    break;
                }
                case ForbiddenItem::Kind::covering_clique: {
                    if (covering_through(chosen, fm, item.param))
                        return true;
                    break;
                }
                case ForbiddenItem::Kind::pattern: {
                    scratch.assign(chosen.begin(), chosen.end());
                    scratch.push_back(fm);
                    if (matchers_[it].embeds_through(scratch, n_, scratch.size() - 1))
                        return true;
                    break;
                }
                }
            }
            return false;
        }

        auto covering_through(const std::vector<std::uint64_t> & chosen, std::uint64_t fm, std::size_t q) const -> bool
        {
            std::vector<std::uint64_t> adj(n_, 0);
            auto add = [&](std::uint64_t m) {
                for (auto a = m; a; a &= a - 1) {
                    auto u = std::countr_zero(a);
                    adj[static_cast<std::size_t>(u)] |= m & ~(std::uint64_t{1} << u);
                }
            };
            for (auto c : chosen)
                add(c);
            auto before = adj;
            add(fm);
            auto has_clique = [&](auto && self, std::uint64_t cand, std::size_t want) -> bool {
                if (want == 0)
                    return true;
                while (cand) {
                    if (static_cast<std::size_t>(std::popcount(cand)) < want)
                        return false;
                    auto v = static_cast<std::size_t>(std::countr_zero(cand));
                    cand &= cand - 1;
                    if (self(self, cand & adj[v], want - 1))
                        return true;
                }
                return false;
            };
            for (auto a = fm; a; a &= a - 1) {
                auto u = static_cast<std::size_t>(std::countr_zero(a));
                for (auto b = a & (a - 1); b; b &= b - 1) {
                    auto v = static_cast<std::size_t>(std::countr_zero(b));
                    if (before[u] & (std::uint64_t{1} << v))
                        continue;
                    if (has_clique(has_clique, adj[u] & adj[v], q - 2))
                        return true;
                }
            }
            return false;
        }

        // --- bounds -----------------------------------------------------------------

        void build_bounds()
        {
            for (const auto & item : spec_.items()) {
                if (item.kind == ForbiddenItem::Kind::matching && item.param >= 1) {
                    // first-fit classes of pairwise disjoint edges; a free graph
                    // meets each class in at most param-1 edges
                    GroupBound g;
                    g.group_of.assign(candidates_.size(), -1);
                    std::vector<std::uint64_t> cover;
                    for (std::size_t i = 0; i < candidates_.size(); ++i) {
                        std::size_t c = 0;
                        while (c < cover.size() && (cover[c] & candidates_[i]))
                            ++c;
                        if (c == cover.size()) {
                            cover.push_back(0);
                            g.cap.push_back(item.param - 1);
                        }
                        cover[c] |= candidates_[i];
                        g.group_of[i] = static_cast<int>(c);
                    }
                    bounds_.push_back(std::move(g));
                    collect_matchings(item.param);
                    continue;
                }
                // edge-disjoint copies in the complete graph
                GroupBound g;
                g.group_of.assign(candidates_.size(), -1);
                std::vector<std::size_t> remaining(candidates_.size());
                for (std::size_t i = 0; i < remaining.size(); ++i)
                    remaining[i] = i;
                while (true) {
                    std::vector<std::uint64_t> masks;
                    for (auto i : remaining)
                        masks.push_back(candidates_[i]);
                    auto copy = find_copy(item, masks);
                    if (! copy || copy->empty())
                        break;
                    std::vector<std::size_t> members;
                    for (auto k : *copy)
                        members.push_back(remaining[k]);
                    std::sort(members.begin(), members.end());
                    members.erase(std::unique(members.begin(), members.end()), members.end());
                    for (auto i : members)
                        g.group_of[i] = static_cast<int>(g.cap.size());
                    g.cap.push_back(members.size() - 1);
                    std::vector<std::size_t> rest;
                    for (auto i : remaining)
                        if (g.group_of[i] < 0)
                            rest.push_back(i);
                    remaining = std::move(rest);
                }
                if (! g.cap.empty())
                    bounds_.push_back(std::move(g));
            }
        }

        static constexpr std::size_t average_copy_limit = 20000;

        void add_average(std::vector<std::vector<std::size_t>> copies, std::size_t cap)
        {
            if (copies.empty() || copies.size() > average_copy_limit)
                return;
            AverageBound a;
            a.cap = cap;
            std::vector<std::size_t> per(candidates_.size(), 0);
            for (const auto & c : copies)
                for (auto e : c)
                    ++per[e];
            a.per_edge = per[0];
            a.copies = std::move(copies);
            averages_.push_back(std::move(a));
        }

        void collect_matchings(std::size_t m)
        {
            if (m < 2)
                return;
            std::vector<std::vector<std::size_t>> copies;
            std::vector<std::size_t> stack;
            bool overflow = false;
            auto grow = [&](auto && self, std::size_t from, std::uint64_t used) -> void {
                if (overflow)
                    return;
                if (stack.size() == m) {
                    copies.push_back(stack);
                    overflow = copies.size() > average_copy_limit;
                    return;
                }
                for (std::size_t i = from; i < candidates_.size(); ++i) {
                    if (candidates_[i] & used)
                        continue;
                    stack.push_back(i);
                    self(self, i + 1, used | candidates_[i]);
                    stack.pop_back();
                }
            };
            grow(grow, 0, 0);
            if (! overflow)
                add_average(std::move(copies), m - 1);
        }

        /// Indices into masks of one forbidden copy, if any.
        auto find_copy(const ForbiddenItem & item, const std::vector<std::uint64_t> & masks) const
            -> std::optional<std::vector<std::size_t>>
        {
            switch (item.kind) {
            case ForbiddenItem::Kind::expansion_clique: {
                detail::ExpansionFinder finder(masks, n_, r_, item.param);
                std::optional<std::vector<std::size_t>> out;
                finder.search([&](const detail::ExpansionCopy & c) {
                    out = c.edges;
                    return true;
                });
                return out;
            }
            case ForbiddenItem::Kind::covering_clique: {
                std::vector<Vertex> flat;
                std::vector<std::size_t> order(masks.size());
                for (std::size_t i = 0; i < masks.size(); ++i)
                    order[i] = i;
                std::sort(order.begin(), order.end(), [&](auto a, auto b) { return lex_less(masks[a], masks[b]); });
                for (auto i : order)
                    for (auto m = masks[i]; m; m &= m - 1)
                        flat.push_back(static_cast<Vertex>(std::countr_zero(m)));
                auto h = Hypergraph::from_sorted_flat(n_, r_, flat);
                auto emb = contains_covering_clique(h, item.param);
                if (! emb)
                    return std::nullopt;
                std::vector<std::size_t> out;
                for (const auto & pe : emb->edge_assignment) {
                    std::uint64_t m = 0;
                    for (auto v : pe.edge)
                        m |= std::uint64_t{1} << v;
                    out.push_back(static_cast<std::size_t>(std::find(masks.begin(), masks.end(), m) - masks.begin()));
                }
                return out;
            }
            case ForbiddenItem::Kind::pattern: {
                if (item.pattern->empty())
                    return std::nullopt;
                return detail::PatternMatcher(*item.pattern).find(masks, n_);
            }
            case ForbiddenItem::Kind::matching: break;
            }
            return std::nullopt;
        }

        static auto lex_less(std::uint64_t a, std::uint64_t b) -> bool
        {
            // compare ascending vertex lists
            while (a && b) {
                auto x = std::countr_zero(a), y = std::countr_zero(b);
                if (x != y)
                    return x < y;
                a &= a - 1;
                b &= b - 1;
            }
            return b != 0;
        }

        auto upper_bound(const Node & node) const -> Count
        {
            std::size_t open = node.open.count();
            std::size_t best = open;
            thread_local std::vector<std::size_t> in_open, in_chosen;
            for (const auto & g : bounds_) {
                in_open.assign(g.cap.size(), 0);
                in_chosen.assign(g.cap.size(), 0);
                std::size_t loose = 0;
                node.open.for_each([&](std::size_t i) {
                    if (g.group_of[i] < 0)
                        ++loose;
                    else
                        ++in_open[static_cast<std::size_t>(g.group_of[i])];
                });
                for (auto i : node.chosen)
                    if (g.group_of[i] >= 0)
                        ++in_chosen[static_cast<std::size_t>(g.group_of[i])];
                std::size_t total = loose;
                for (std::size_t k = 0; k < g.cap.size(); ++k) {
                    const auto room = g.cap[k] > in_chosen[k] ? g.cap[k] - in_chosen[k] : 0;
                    total += std::min(in_open[k], room);
                }
                best = std::min(best, total);
            }
            auto bound = static_cast<Count>(node.chosen.size() + best);
            if (! averages_.empty()) {
                thread_local std::vector<char> live;
                live.assign(candidates_.size(), 0);
                node.open.for_each([&](std::size_t i) { live[i] = 1; });
                for (auto i : node.chosen)
                    live[i] = 1;
                for (const auto & a : averages_) {
                    std::size_t sum = 0;
                    for (const auto & c : a.copies) {
                        std::size_t load = 0;
                        for (auto e : c)
                            load += static_cast<std::size_t>(live[e]);
                        sum += std::min(load, a.cap);
                    }
                    bound = std::min(bound, static_cast<Count>(sum / a.per_edge));
                }
            }
            return bound;
        }

        // --- tree ---------------------------------------------------------------------

        auto include(const Node & node, std::size_t e, const Bits & allowed) const -> Node
        {
            Node child;
            child.chosen = node.chosen;
            child.chosen.push_back(e);
            child.chosen_masks = node.chosen_masks;
            child.chosen_masks.push_back(candidates_[e]);
            child.depth = node.depth + 1;
            child.open = Bits(candidates_.size());
            std::vector<std::uint64_t> scratch;
            allowed.for_each([&](std::size_t f) {
                if (f != e && ! conflicts(child.chosen_masks, candidates_[e], f, scratch))
                    child.open.set(f);
            });
            return child;
        }

        /// Children in exploration order. Above symmetry_depth the next edge is
        /// chosen per orbit type of the pointwise stabiliser of the chosen edges;
        /// below it the first open candidate is included, then excluded.
        auto expand(const Node & node) const -> std::vector<Node>
        {
            std::vector<Node> out;
            if (node.open.first() == Bits::npos)
                return out;
            if (node.depth < options_.symmetry_depth) {
                std::vector<std::uint64_t> atom(n_, 0);
                for (std::size_t c = 0; c < node.chosen_masks.size(); ++c)
                    for (std::size_t v = 0; v < n_; ++v)
                        if (node.chosen_masks[c] & (std::uint64_t{1} << v))
                            atom[v] |= std::uint64_t{1} << c;
                std::map<std::vector<std::uint64_t>, std::size_t> type_index;
                std::vector<std::size_t> type_of(candidates_.size(), 0), representative;
                node.open.for_each([&](std::size_t f) {
                    std::vector<std::uint64_t> key;
                    for (auto m = candidates_[f]; m; m &= m - 1)
                        key.push_back(atom[static_cast<std::size_t>(std::countr_zero(m))]);
                    std::sort(key.begin(), key.end());
                    auto [it, fresh] = type_index.emplace(std::move(key), representative.size());
                    if (fresh)
                        representative.push_back(f);
                    type_of[f] = it->second;
                });
                Bits allowed = node.open;
                for (std::size_t t = 0; t < representative.size(); ++t) {
                    out.push_back(include(node, representative[t], allowed));
                    node.open.for_each([&](std::size_t f) {
                        if (type_of[f] == t)
                            allowed.reset(f);
                    });
                }
                // after the last type nothing is left: that is the stop branch,
                // which the parent records itself
                return out;
            }
            const auto e = node.open.first();
            out.push_back(include(node, e, node.open));
            Node skip = node;
            skip.open.reset(e);
            skip.depth = node.depth + 1;
            out.push_back(std::move(skip));
            return out;
        }

        auto record(const Node & node) -> void
        {
            const auto size = static_cast<Count>(node.chosen.size());
            if (options_.jobs > 1 && stop_at_ == 0) {
                auto current = shared_best_.load();
                while (size > current && ! shared_best_.compare_exchange_weak(current, size)) {
                }
                if (size > current) {
                    std::lock_guard lock(witness_mutex_);
                    if (size > witness_size_) {
                        witness_size_ = size;
                        witness_ = node.chosen;
                    }
                }
                return;
            }
            if (size > best_) {
                best_ = size;
                witness_ = node.chosen;
                have_witness_ = true;
                if (stop_at_ && size >= stop_at_)
                    done_ = true;
            }
        }

        auto current_best() const -> Count { return options_.jobs > 1 && stop_at_ == 0 ? shared_best_.load() : best_; }

        auto tick() -> bool
        {
            auto count = ++nodes_;
            if (options_.budget && count > *options_.budget) {
                aborted_ = true;
                return false;
            }
            return ! aborted_ && ! done_;
        }

        auto explore(const Node & node) -> void
        {
            if (! tick())
                return;
            record(node);
            if (done_ || upper_bound(node) <= current_best())
                return;
            if (node.depth >= options_.symmetry_depth) {
                // include/exclude on the first open candidate; the exclude side is a loop
                Node current = node;
                while (true) {
                    const auto e = current.open.first();
                    if (e == Bits::npos)
                        return;
                    explore(include(current, e, current.open));
                    if (aborted_ || done_)
                        return;
                    current.open.reset(e);
                    current.depth = node.depth + 1;
                    if (! tick())
                        return;
                    if (upper_bound(current) <= current_best())
                        return;
                }
            }
            for (const auto & child : expand(node)) {
                explore(child);
                if (aborted_ || done_)
                    return;
            }
        }

        auto explore_parallel(const Node & root) -> void
        {
            shared_best_ = best_;
            witness_size_ = best_;
            std::vector<Node> frontier{root};
            const std::size_t target = 8 * static_cast<std::size_t>(options_.jobs);
            for (int round = 0; round < 12 && frontier.size() < target; ++round) {
                std::vector<Node> next;
                bool grew = false;
                for (const auto & node : frontier) {
                    tick();
                    record(node);
                    if (upper_bound(node) <= current_best())
                        continue;
                    auto children = expand(node);
                    if (children.empty())
                        continue;
                    grew = true;
                    for (auto & c : children)
                        next.push_back(std::move(c));
                }
                frontier = std::move(next);
                if (! grew)
                    break;
            }
            std::atomic<std::size_t> cursor{0};
            auto worker = [&]() {
                while (true) {
                    auto i = cursor.fetch_add(1);
                    if (i >= frontier.size() || aborted_)
                        return;
                    explore(frontier[i]);
                }
            };
            std::vector<std::thread> threads;
            for (unsigned j = 0; j < options_.jobs; ++j)
                threads.emplace_back(worker);
            for (auto & t : threads)
                t.join();
            best_ = shared_best_.load();
            have_witness_ = best_ > 0;
        }

        // --- warm start -------------------------------------------------------------------

        auto warm_start() const -> Hypergraph
        {
            std::vector<Hypergraph> pool;
            const auto N = static_cast<Count>(n_), R = static_cast<Count>(r_);
            auto attempt = [&](ConstructionKind kind, ConstructionParams p) {
                try {
                    pool.push_back(generate_construction(kind, p));
                }
                catch (const ParameterError &) {
                }
            };
            for (Count s = 0; s <= N; ++s)
                attempt(ConstructionKind::star_cover, {N, R, {}, s});
            for (Count l = 1; l <= N; ++l)
                attempt(ConstructionKind::turan_partite, {N, R, l, {}});
            for (Count l = 2; l <= N; ++l)
                for (Count s = 0; s <= N; ++s) {
                    attempt(ConstructionKind::alon_frankl, {N, R, l, s});
                    attempt(ConstructionKind::yzz, {N, R, l, s});
                    for (auto kind : {ConstructionKind::g1, ConstructionKind::g2, ConstructionKind::g3,
                             ConstructionKind::one_point})
                        attempt(kind, {N, R, l, s});
                }
            // complete graph on the first m vertices
            for (std::size_t m = 0; m <= n_; ++m) {
                std::vector<Vertex> flat;
                if (r_ <= m)
                    for_each_combination(static_cast<unsigned>(m), static_cast<unsigned>(r_), [&](std::span<const unsigned> c) {
                        flat.insert(flat.end(), c.begin(), c.end());
                        return true;
                    });
                pool.push_back(Hypergraph::from_sorted_flat(n_, r_, std::move(flat)));
            }
            std::stable_sort(pool.begin(), pool.end(),
                [](const Hypergraph & a, const Hypergraph & b) { return a.edge_count() > b.edge_count(); });
            for (const auto & h : pool)
                if (! first_violation(h, spec_))
                    return h;
            return Hypergraph::from_sorted_flat(n_, r_, {});
        }

        auto to_hypergraph(std::vector<std::size_t> chosen) const -> Hypergraph
        {
            std::sort(chosen.begin(), chosen.end());
            std::vector<Vertex> flat;
            for (auto i : chosen) {
                auto e = edge_of(i);
                flat.insert(flat.end(), e.begin(), e.end());
            }
            return Hypergraph::from_sorted_flat(n_, r_, std::move(flat));
        }

        std::size_t n_, r_;
        const ForbiddenSpec & spec_;
        SearchOptions options_;
        std::vector<std::uint64_t> candidates_;
        std::vector<detail::PatternMatcher> matchers_;
        std::vector<GroupBound> bounds_;
        std::vector<AverageBound> averages_;

        Count best_ = 0;
        Count stop_at_ = 0;
        bool done_ = false;
        bool have_witness_ = false;
        std::vector<std::size_t> witness_;
        std::atomic<Count> shared_best_{0};
        std::mutex witness_mutex_;
        Count witness_size_ = 0;
        std::atomic<std::uint64_t> nodes_{0};
        std::atomic<bool> aborted_{false};
    };

    auto validate_spec(std::size_t n, std::size_t r, const ForbiddenSpec & spec) -> void
    {
        if (spec.empty())
            throw ParameterError("the forbidden spec is empty");
        for (const auto & item : spec.items()) {
            switch (item.kind) {
            case ForbiddenItem::Kind::matching:
                if (item.param == 0)
                    throw ParameterError("forbidding a matching of size 0 excludes every hypergraph");
                break;
            case ForbiddenItem::Kind::expansion_clique:
                if (item.param < 2)
                    throw ParameterError("expansion-clique needs a clique size of at least 2");
                if (r < 2)
                    throw ParameterError("expansion-clique needs r >= 2");
                break;
            case ForbiddenItem::Kind::covering_clique:
                if (item.param < 2)
                    throw ParameterError("covering-clique needs q >= 2");
                break;
            case ForbiddenItem::Kind::pattern:
                if (! item.pattern)
                    throw ParameterError("pattern item without a pattern");
                if (item.pattern->empty() && item.pattern->n() <= n)
                    throw ParameterError("an edgeless pattern on at most n vertices excludes every hypergraph");
                if (! item.pattern->empty() && item.pattern->r() != r)
                    throw ParameterError("pattern uniformity differs from r");
                break;
            }
        }
    }

} // namespace

auto max_edges_avoiding(std::size_t n, std::size_t r, const ForbiddenSpec & spec, const SearchOptions & options)
    -> SearchOutcome
{
    if (r < 1)
        throw ParameterError("r must be at least 1");
    validate_spec(n, r, spec);
    if (n > mask_capacity)
        throw CapacityError("the oracle supports at most 64 vertices");
    const auto limits = Limits::current();
    if (n > limits.oracle_max_n && ! options.budget)
        throw CapacityError("exact oracle mode is limited to n <= " + std::to_string(limits.oracle_max_n) +
            "; pass a node budget for a best-effort search");
    if (options.jobs == 0)
        throw ParameterError("jobs must be at least 1");
    return Oracle(n, r, spec, options).run();
}

} // namespace hyperturan
