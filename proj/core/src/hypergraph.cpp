#include <hyperturan/canonical.hpp>
#include <hyperturan/errors.hpp>
#include <hyperturan/hypergraph.hpp>
#include <hyperturan/limits.hpp>

#include "matching.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <string>

namespace hyperturan {

namespace {

    auto describe(std::span<const Vertex> edge) -> std::string
    {
        std::ostringstream out;
        out << '[';
        for (std::size_t i = 0; i < edge.size(); ++i)
            out << (i ? "," : "") << edge[i];
        out << ']';
        return out.str();
    }

    auto require_masks(const Hypergraph & h, const char * what) -> void
    {
        if (! h.has_masks())
            throw CapacityError(std::string(what) + " supports at most 64 vertices (got " + std::to_string(h.n()) + ")");
    }

    auto mask_to_vertices(std::uint64_t m) -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        while (m) {
            out.push_back(static_cast<Vertex>(std::countr_zero(m)));
            m &= m - 1;
        }
        return out;
    }

    // Edges of an r-graph on n <= 64 vertices selected by predicate, in order.
    template <typename Keep>
    auto filter_subsets(std::size_t n, std::size_t r, Keep && keep) -> Hypergraph
    {
        std::vector<Vertex> flat;
        for_each_combination(static_cast<unsigned>(n), static_cast<unsigned>(r), [&](std::span<const unsigned> c) {
            if (keep(c))
                flat.insert(flat.end(), c.begin(), c.end());
            return true;
        });
        return Hypergraph::from_sorted_flat(n, r, std::move(flat));
    }

} // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members))
{
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

auto VertexSet::contains(Vertex v) const -> bool
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

auto VertexSet::mask() const -> std::uint64_t
{
    std::uint64_t m = 0;
    for (auto v : members_) {
        if (v >= 64)
            throw CapacityError("vertex set mask supports vertices below 64");
        m |= std::uint64_t{1} << v;
    }
    return m;
}

Hypergraph::Hypergraph(std::size_t n, std::size_t r, std::vector<Vertex> flat) :
    n_(n), r_(r), flat_(std::move(flat))
{
    if (n_ <= 64) {
        masks_.reserve(edge_count());
        for (std::size_t i = 0; i < edge_count(); ++i) {
            std::uint64_t m = 0;
            for (auto v : edge(i))
                m |= std::uint64_t{1} << v;
            masks_.push_back(m);
        }
    }
}

auto Hypergraph::from_sorted_flat(std::size_t n, std::size_t r, std::vector<Vertex> flat) -> Hypergraph
{
    return Hypergraph(n, r, std::move(flat));
}

auto Hypergraph::masks() const -> std::span<const std::uint64_t>
{
    if (! has_masks())
        throw CapacityError("edge bitmasks need n <= 64 (got " + std::to_string(n_) + ")");
    return masks_;
}

auto Hypergraph::contains_edge(std::span<const Vertex> sorted_edge) const -> bool
{
    if (sorted_edge.size() != r_)
        return false;
    std::size_t lo = 0, hi = edge_count();
    while (lo < hi) {
        auto mid = (lo + hi) / 2;
        auto e = edge(mid);
        if (std::lexicographical_compare(e.begin(), e.end(), sorted_edge.begin(), sorted_edge.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < edge_count() && std::equal(sorted_edge.begin(), sorted_edge.end(), edge(lo).begin());
}

auto Hypergraph::edge_list() const -> EdgeList
{
    EdgeList out;
    out.reserve(edge_count());
    for (std::size_t i = 0; i < edge_count(); ++i) {
        auto e = edge(i);
        out.emplace_back(e.begin(), e.end());
    }
    return out;
}

auto make_hypergraph(std::size_t n, std::size_t r, const EdgeList & edges) -> Hypergraph
{
    if (r < 1)
        throw ValidationError("uniformity r must be at least 1");
    std::vector<std::vector<Vertex>> sorted;
    sorted.reserve(edges.size());
    for (const auto & raw : edges) {
        if (raw.size() != r)
            throw ValidationError("edge " + describe(raw) + " has " + std::to_string(raw.size()) + " vertices, expected " +
                std::to_string(r));
        for (auto v : raw)
            if (v >= n)
                throw ValidationError("vertex " + std::to_string(v) + " out of range in edge " + describe(raw) +
                    " (n = " + std::to_string(n) + ")");
        auto e = raw;
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw ValidationError("repeated vertex " + std::to_string(*std::adjacent_find(e.begin(), e.end())) +
                " in edge " + describe(raw));
        sorted.push_back(std::move(e));
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Vertex> flat;
    flat.reserve(sorted.size() * r);
    for (const auto & e : sorted)
        flat.insert(flat.end(), e.begin(), e.end());
    return Hypergraph::from_sorted_flat(n, r, std::move(flat));
}

auto expansion(const Hypergraph & graph, std::size_t r) -> Hypergraph
{
    if (graph.r() != 2)
        throw ValidationError("expansion needs a 2-uniform graph");
    if (r < 2)
        throw ParameterError("expansion needs r >= 2");
    const std::size_t extras = r - 2;
    const std::size_t n = graph.n() + extras * graph.edge_count();
    EdgeList edges;
    for (std::size_t i = 0; i < graph.edge_count(); ++i) {
        auto e = graph.edge(i);
        std::vector<Vertex> out(e.begin(), e.end());
        for (std::size_t j = 0; j < extras; ++j)
            out.push_back(static_cast<Vertex>(graph.n() + i * extras + j));
        edges.push_back(std::move(out));
    }
    return make_hypergraph(n, r, edges);
}

auto complete_multipartite(std::size_t n, std::size_t parts, std::size_t r) -> Hypergraph
{
    if (r < 1)
        throw ParameterError("complete_multipartite needs r >= 1");
    if (parts < 1 || parts > n)
        throw ParameterError("complete_multipartite needs 1 <= parts <= n");
    if (r > parts)
        return Hypergraph::from_sorted_flat(n, r, {});
    auto sizes = balanced_part_sizes(static_cast<Count>(n), static_cast<Count>(parts));
    std::vector<std::size_t> part_of(n);
    std::size_t v = 0;
    for (std::size_t p = 0; p < sizes.size(); ++p)
        for (Count i = 0; i < sizes[p]; ++i)
            part_of[v++] = p;
    return filter_subsets(n, r, [&](std::span<const unsigned> c) {
        // vertices are sorted and parts contiguous, so distinct parts means strictly increasing parts
        for (std::size_t i = 1; i < c.size(); ++i)
            if (part_of[c[i]] == part_of[c[i - 1]])
                return false;
        return true;
    });
}

auto star_cover(std::size_t n, std::size_t r, std::size_t s) -> Hypergraph
{
    if (r < 1)
        throw ParameterError("star_cover needs r >= 1");
    if (s > n)
        throw ParameterError("star_cover needs s <= n");
    return filter_subsets(n, r, [&](std::span<const unsigned> c) { return c[0] < s; });
}

auto complete_hypergraph(std::size_t n, std::size_t r) -> Hypergraph
{
    if (r < 1)
        throw ParameterError("complete_hypergraph needs r >= 1");
    return filter_subsets(n, r, [](std::span<const unsigned>) { return true; });
}

auto matching_number(const Hypergraph & h) -> std::size_t
{
    require_masks(h, "matching_number");
    return detail::max_matching_size(h.masks());
}

auto degree(const Hypergraph & h, const VertexSet & s) -> std::size_t
{
    for (auto v : s.members())
        if (v >= h.n())
            throw ValidationError("vertex " + std::to_string(v) + " out of range");
    std::size_t count = 0;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        if (std::includes(e.begin(), e.end(), s.members().begin(), s.members().end()))
            ++count;
    }
    return count;
}

auto link(const Hypergraph & h, Vertex v) -> Hypergraph
{
    if (h.r() < 2)
        throw ParameterError("link needs r >= 2");
    if (v >= h.n())
        throw ValidationError("vertex " + std::to_string(v) + " out of range");
    std::vector<Vertex> flat;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        if (! std::binary_search(e.begin(), e.end(), v))
            continue;
        for (auto u : e)
            if (u != v)
                flat.push_back(u);
    }
    // removing a common vertex preserves lexicographic order and distinctness
    return Hypergraph::from_sorted_flat(h.n(), h.r() - 1, std::move(flat));
}

auto induced(const Hypergraph & h, const VertexSet & s) -> Hypergraph
{
    std::vector<Vertex> relabel(h.n(), static_cast<Vertex>(-1));
    Vertex next = 0;
    for (auto v : s.members()) {
        if (v >= h.n())
            throw ValidationError("vertex " + std::to_string(v) + " out of range");
        relabel[v] = next++;
    }
    std::vector<Vertex> flat;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        if (std::all_of(e.begin(), e.end(), [&](Vertex u) { return relabel[u] != static_cast<Vertex>(-1); }))
            for (auto u : e)
                flat.push_back(relabel[u]);
    }
    // order-preserving relabelling keeps the lexicographic order
    return Hypergraph::from_sorted_flat(s.size(), h.r(), std::move(flat));
}

auto delete_vertices(const Hypergraph & h, const VertexSet & u) -> Hypergraph
{
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < h.n(); ++v)
        if (! u.contains(v))
            keep.push_back(v);
    for (auto v : u.members())
        if (v >= h.n())
            throw ValidationError("vertex " + std::to_string(v) + " out of range");
    return induced(h, VertexSet(std::move(keep)));
}

auto permute(const Hypergraph & h, std::span<const Vertex> perm) -> Hypergraph
{
    if (perm.size() != h.n())
        throw ValidationError("permutation size does not match vertex count");
    std::vector<bool> seen(h.n(), false);
    for (auto v : perm) {
        if (v >= h.n() || seen[v])
            throw ValidationError("relabelling is not a permutation");
        seen[v] = true;
    }
    EdgeList edges;
    edges.reserve(h.edge_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        std::vector<Vertex> e;
        for (auto v : h.edge(i))
            e.push_back(perm[v]);
        edges.push_back(std::move(e));
    }
    return make_hypergraph(h.n(), h.r(), edges);
}

namespace {

    class ColouringSearch {
      public:
        explicit ColouringSearch(const Hypergraph & h) : n_(h.n()), closing_(h.n())
        {
            for (std::size_t i = 0; i < h.edge_count(); ++i) {
                auto e = h.edge(i);
                closing_[e.back()].push_back(h.masks()[i]);
            }
        }

        auto colourable(std::size_t colours) -> bool
        {
            colours_ = colours;
            class_masks_.assign(colours, 0);
            return assign(0, 0);
        }

      private:
        auto assign(std::size_t v, std::size_t used) -> bool
        {
            if (v == n_)
                return true;
            const auto limit = std::min(colours_, used + 1);
            for (std::size_t c = 0; c < limit; ++c) {
                class_masks_[c] |= std::uint64_t{1} << v;
                bool ok = true;
                for (auto e : closing_[v])
                    if ((e & class_masks_[c]) == e) {
                        ok = false;
                        break;
                    }
                if (ok && assign(v + 1, std::max(used, c + 1)))
                    return true;
                class_masks_[c] &= ~(std::uint64_t{1} << v);
            }
            return false;
        }

        std::size_t n_;
        std::size_t colours_ = 0;
        std::vector<std::vector<std::uint64_t>> closing_;
        std::vector<std::uint64_t> class_masks_;
    };

} // namespace

auto weak_chromatic_number(const Hypergraph & h) -> std::size_t
{
    const auto limits = Limits::current();
    if (h.n() > limits.chromatic_max_n)
        throw CapacityError("weak_chromatic_number is exact only for n <= " + std::to_string(limits.chromatic_max_n) +
            " (got " + std::to_string(h.n()) + ")");
    if (h.empty())
        return 1;
    if (h.r() < 2)
        throw ValidationError("a 1-uniform edge is monochromatic under every colouring");
    ColouringSearch search(h);
    for (std::size_t c = 2; c <= h.n(); ++c)
        if (search.colourable(c))
            return c;
    return h.n();
}

auto independent_deletion_family(const Hypergraph & h) -> std::vector<Hypergraph>
{
    const auto limits = Limits::current();
    if (h.n() > limits.deletion_family_max_n)
        throw CapacityError("independent_deletion_family supports n <= " + std::to_string(limits.deletion_family_max_n) +
            " (got " + std::to_string(h.n()) + ")");
    const auto masks = h.masks();
    const std::uint64_t all = h.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << h.n()) - 1;

    std::set<std::pair<std::size_t, std::vector<Vertex>>> seen;
    std::vector<std::pair<std::pair<std::size_t, std::vector<Vertex>>, Hypergraph>> family;

    // enumerate independent sets T (no edge inside T) by extension in vertex order
    auto visit = [&](std::uint64_t independent) {
        auto keep = mask_to_vertices(all & ~independent);
        auto sub = induced(h, VertexSet(std::move(keep)));
        auto canon = canonical_form(sub).graph;
        std::vector<Vertex> key;
        for (std::size_t i = 0; i < canon.edge_count(); ++i)
            for (auto v : canon.edge(i))
                key.push_back(v);
        auto full_key = std::make_pair(canon.n(), std::move(key));
        if (seen.insert(full_key).second)
            family.emplace_back(std::move(full_key), std::move(canon));
    };
    auto extend = [&](auto && self, std::uint64_t current, std::size_t next) -> void {
        visit(current);
        for (std::size_t v = next; v < h.n(); ++v) {
            auto candidate = current | (std::uint64_t{1} << v);
            bool independent = true;
            for (auto e : masks)
                if ((e & candidate) == e) {
                    independent = false;
                    break;
                }
            if (independent)
                self(self, candidate, v + 1);
        }
    };
    extend(extend, 0, 0);

    std::sort(family.begin(), family.end(), [](const auto & a, const auto & b) { return a.first < b.first; });
    std::vector<Hypergraph> out;
    out.reserve(family.size());
    for (auto & [key, g] : family)
        out.push_back(std::move(g));
    return out;
}

} // namespace hyperturan
