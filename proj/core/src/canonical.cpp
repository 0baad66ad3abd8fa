#include <hyperturan/canonical.hpp>
#include <hyperturan/errors.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace hyperturan {

namespace {

    using Colouring = std::vector<std::uint32_t>;

    class Canonicaliser {
      public:
        explicit Canonicaliser(const Hypergraph & h) : h_(h), incident_(h.n())
        {
            if (! h.has_masks())
                throw CapacityError("canonical_form supports at most 64 vertices");
            for (std::size_t i = 0; i < h.edge_count(); ++i) {
                edge_set_.insert(h.masks()[i]);
                for (auto v : h.edge(i))
                    incident_[v].push_back(i);
            }
        }

        auto run() -> CanonicalForm
        {
            Colouring initial(h_.n(), 0);
            search(initial);
            CanonicalForm out;
            out.relabeling = best_relabel_;
            out.graph = Hypergraph::from_sorted_flat(h_.n(), h_.r(), best_edges_);
            return out;
        }

      private:
        auto refine(Colouring colours) const -> Colouring
        {
            auto cells = count_cells(colours);
            while (true) {
                using Signature = std::vector<std::vector<std::uint32_t>>;
                std::vector<std::pair<std::uint32_t, Signature>> keys(h_.n());
                for (std::size_t v = 0; v < h_.n(); ++v) {
                    Signature sig;
                    sig.reserve(incident_[v].size());
                    for (auto i : incident_[v]) {
                        std::vector<std::uint32_t> others;
                        for (auto u : h_.edge(i))
                            if (u != v)
                                others.push_back(colours[u]);
                        std::sort(others.begin(), others.end());
                        sig.push_back(std::move(others));
                    }
                    std::sort(sig.begin(), sig.end());
                    keys[v] = {colours[v], std::move(sig)};
                }
                std::vector<std::size_t> order(h_.n());
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
                Colouring next(h_.n());
                std::uint32_t rank = 0;
                for (std::size_t i = 0; i < order.size(); ++i) {
                    if (i > 0 && keys[order[i]] != keys[order[i - 1]])
                        ++rank;
                    next[order[i]] = rank;
                }
                auto next_cells = count_cells(next);
                colours = std::move(next);
                if (next_cells == cells)
                    return colours;
                cells = next_cells;
            }
        }

        static auto count_cells(const Colouring & colours) -> std::size_t
        {
            if (colours.empty())
                return 0;
            return static_cast<std::size_t>(*std::max_element(colours.begin(), colours.end())) + 1;
        }

        auto transposition_is_automorphism(Vertex a, Vertex b) const -> bool
        {
            const std::uint64_t ma = std::uint64_t{1} << a, mb = std::uint64_t{1} << b;
            for (auto i : incident_[a]) {
                auto e = h_.masks()[i];
                if (e & mb)
                    continue;
                if (! edge_set_.contains((e & ~ma) | mb))
                    return false;
            }
            for (auto i : incident_[b]) {
                auto e = h_.masks()[i];
                if (e & ma)
                    continue;
                if (! edge_set_.contains((e & ~mb) | ma))
                    return false;
            }
            return true;
        }

        auto search(const Colouring & start) -> void
        {
            auto colours = refine(start);
            const auto cells = count_cells(colours);
            if (cells == h_.n()) {
                leaf(colours);
                return;
            }
            std::vector<std::size_t> cell_size(cells, 0);
            for (auto c : colours)
                ++cell_size[c];
            std::uint32_t target = 0;
            while (cell_size[target] == 1)
                ++target;

            std::vector<Vertex> members;
            for (Vertex v = 0; v < h_.n(); ++v)
                if (colours[v] == target)
                    members.push_back(v);
            std::vector<Vertex> representatives;
            for (auto v : members) {
                bool twin = std::any_of(representatives.begin(), representatives.end(),
                    [&](Vertex u) { return transposition_is_automorphism(u, v); });
                if (! twin)
                    representatives.push_back(v);
            }

            for (auto v : representatives) {
                Colouring next(colours);
                for (Vertex u = 0; u < h_.n(); ++u)
                    if (colours[u] > target || (colours[u] == target && u != v))
                        ++next[u];
                search(next);
            }
        }

        auto leaf(const Colouring & colours) -> void
        {
            std::vector<std::vector<Vertex>> edges;
            edges.reserve(h_.edge_count());
            for (std::size_t i = 0; i < h_.edge_count(); ++i) {
                std::vector<Vertex> e;
                for (auto v : h_.edge(i))
                    e.push_back(colours[v]);
                std::sort(e.begin(), e.end());
                edges.push_back(std::move(e));
            }
            std::sort(edges.begin(), edges.end());
            std::vector<Vertex> flat;
            flat.reserve(h_.edge_count() * h_.r());
            for (const auto & e : edges)
                flat.insert(flat.end(), e.begin(), e.end());
            if (! have_best_ || flat < best_edges_) {
                have_best_ = true;
                best_edges_ = std::move(flat);
                best_relabel_.assign(colours.begin(), colours.end());
            }
        }

        const Hypergraph & h_;
        std::vector<std::vector<std::size_t>> incident_;
        std::unordered_set<std::uint64_t> edge_set_;
        bool have_best_ = false;
        std::vector<Vertex> best_edges_;
        std::vector<Vertex> best_relabel_;
    };

} // namespace

auto canonical_form(const Hypergraph & h) -> CanonicalForm
{
    if (h.n() == 0)
        return CanonicalForm{{}, h};
    return Canonicaliser(h).run();
}

auto is_isomorphic(const Hypergraph & a, const Hypergraph & b) -> bool
{
    if (a.n() != b.n() || a.r() != b.r() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a).graph == canonical_form(b).graph;
}

} // namespace hyperturan
