#include <hyperturan/detectors.hpp>
#include <hyperturan/errors.hpp>
#include <hyperturan/limits.hpp>

#include "expansion_finder.hpp"
#include "matching.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace hyperturan {

LayeredInstance::LayeredInstance(std::size_t n, std::size_t r, std::vector<Hypergraph> layers) :
    n_(n), r_(r), layers_(std::move(layers))
{
    if (layers_.empty())
        throw ValidationError("a layered instance needs at least one layer");
    for (std::size_t i = 0; i < layers_.size(); ++i)
        if (layers_[i].n() != n_ || layers_[i].r() != r_)
            throw ValidationError("layer " + std::to_string(i) + " does not share (n, r) = (" + std::to_string(n_) + ", " +
                std::to_string(r_) + ")");
}

auto LayeredInstance::total_size() const -> std::size_t
{
    std::size_t total = 0;
    for (const auto & layer : layers_)
        total += layer.edge_count();
    return total;
}

auto LayeredInstance::union_graph() const -> Hypergraph
{
    EdgeList edges;
    for (const auto & layer : layers_)
        for (std::size_t i = 0; i < layer.edge_count(); ++i) {
            auto e = layer.edge(i);
            edges.emplace_back(e.begin(), e.end());
        }
    return make_hypergraph(n_, r_, edges);
}

auto LayeredInstance::colour_masks() const -> std::vector<std::uint64_t>
{
    if (layers_.size() > 64)
        throw CapacityError("colour masks support at most 64 layers");
    const auto g = union_graph();
    std::vector<std::uint64_t> out(g.edge_count(), 0);
    for (std::size_t c = 0; c < layers_.size(); ++c)
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            if (layers_[c].contains_edge(g.edge(i)))
                out[i] |= std::uint64_t{1} << c;
    return out;
}

auto LayeredInstance::multiplicity(std::span<const Vertex> sorted_edge) const -> std::size_t
{
    return static_cast<std::size_t>(std::count_if(layers_.begin(), layers_.end(),
        [&](const Hypergraph & layer) { return layer.contains_edge(sorted_edge); }));
}

WeightMatrix::WeightMatrix(std::size_t t, std::vector<double> weights) : t_(t), w_(std::move(weights))
{
    if (t_ < 1)
        throw ValidationError("weight matrix needs t >= 1");
    if (w_.size() != t_ * t_)
        throw ValidationError("weight matrix needs t*t entries");
    for (auto x : w_)
        if (! std::isfinite(x))
            throw ValidationError("weight matrix entries must be finite");
}

auto WeightMatrix::from_rows(const std::vector<std::vector<double>> & rows) -> WeightMatrix
{
    std::vector<double> flat;
    for (const auto & row : rows) {
        if (row.size() != rows.size())
            throw ValidationError("weight matrix must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return WeightMatrix(rows.size(), std::move(flat));
}

auto WeightMatrix::row_sum(std::size_t row) const -> double
{
    double sum = 0.0;
    for (std::size_t j = 0; j < t_; ++j)
        sum += at(row, j);
    return sum;
}

namespace {

    auto pair_count(std::size_t q) -> std::size_t { return q * (q - 1) / 2; }

    auto edge_mask(std::span<const Vertex> e) -> std::uint64_t
    {
        std::uint64_t m = 0;
        for (auto v : e)
            m |= std::uint64_t{1} << v;
        return m;
    }

    auto check_core(std::size_t n, std::size_t q, const Embedding & e) -> std::string
    {
        if (e.core.size() != q)
            return "core has " + std::to_string(e.core.size()) + " vertices, expected " + std::to_string(q);
        std::set<Vertex> distinct(e.core.begin(), e.core.end());
        if (distinct.size() != q)
            return "core vertices are not distinct";
        for (auto v : e.core)
            if (v >= n || v >= 64)
                return "core vertex out of range";
        if (e.edge_assignment.size() != pair_count(q))
            return "edge assignment does not cover every core pair exactly once";
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        for (const auto & pe : e.edge_assignment) {
            if (pe.i >= pe.j || pe.j >= q)
                return "malformed core pair";
            pairs.emplace(pe.i, pe.j);
        }
        if (pairs.size() != pair_count(q))
            return "edge assignment repeats a core pair";
        return {};
    }

    auto check_expansion_against(const Hypergraph & h, std::size_t q, const Embedding & e) -> std::string
    {
        if (auto why = check_core(h.n(), q, e); ! why.empty())
            return why;
        std::uint64_t core_mask = 0;
        for (auto v : e.core)
            core_mask |= std::uint64_t{1} << v;
        std::uint64_t extras_seen = 0;
        for (const auto & pe : e.edge_assignment) {
            auto sorted = pe.edge;
            std::sort(sorted.begin(), sorted.end());
            if (! h.contains_edge(sorted))
                return "assigned edge is not an edge of the host";
            auto m = edge_mask(sorted);
            auto pair_mask = (std::uint64_t{1} << e.core[pe.i]) | (std::uint64_t{1} << e.core[pe.j]);
            if ((m & core_mask) != pair_mask)
                return "edge for a core pair meets the core outside that pair";
            auto extras = m & ~core_mask;
            if (extras & extras_seen)
                return "extra vertices of two edges overlap";
            extras_seen |= extras;
        }
        return {};
    }

} // namespace

auto check_expansion_embedding(const Hypergraph & h, std::size_t clique, const Embedding & e) -> std::string
{
    if (auto why = check_expansion_against(h, clique, e); ! why.empty())
        return why;
    if (e.color_assignment) {
        std::set<std::size_t> used(e.color_assignment->begin(), e.color_assignment->end());
        if (e.color_assignment->size() != e.edge_assignment.size() || used.size() != e.edge_assignment.size())
            return "colour assignment is not injective";
    }
    return {};
}

auto check_covering_embedding(const Hypergraph & h, std::size_t q, const Embedding & e) -> std::string
{
    if (auto why = check_core(h.n(), q, e); ! why.empty())
        return why;
    for (const auto & pe : e.edge_assignment) {
        auto sorted = pe.edge;
        std::sort(sorted.begin(), sorted.end());
        if (! h.contains_edge(sorted))
            return "covering edge is not an edge of the host";
        if (! std::binary_search(sorted.begin(), sorted.end(), e.core[pe.i]) ||
            ! std::binary_search(sorted.begin(), sorted.end(), e.core[pe.j]))
            return "covering edge misses its core pair";
    }
    return {};
}

auto check_rainbow_embedding(const LayeredInstance & layers, std::size_t clique, const Embedding & e,
    std::optional<std::size_t> excluded_layer) -> std::string
{
    if (auto why = check_expansion_against(layers.union_graph(), clique, e); ! why.empty())
        return why;
    if (! e.color_assignment)
        return "rainbow embedding lacks a colour assignment";
    const auto & colours = *e.color_assignment;
    if (colours.size() != e.edge_assignment.size())
        return "colour assignment size mismatch";
    std::set<std::size_t> used(colours.begin(), colours.end());
    if (used.size() != colours.size())
        return "colour assignment is not injective";
    for (std::size_t p = 0; p < colours.size(); ++p) {
        if (colours[p] >= layers.k())
            return "colour out of range";
        if (excluded_layer && colours[p] == *excluded_layer)
            return "colour assignment uses the excluded layer";
        auto sorted = e.edge_assignment[p].edge;
        std::sort(sorted.begin(), sorted.end());
        if (! layers.layers()[colours[p]].contains_edge(sorted))
            return "edge is not present in its assigned layer";
    }
    return {};
}

auto contains_expansion_clique(const Hypergraph & h, std::size_t clique) -> std::optional<Embedding>
{
    if (clique < 2)
        throw ParameterError("clique size must be at least 2");
    if (h.r() < 2)
        throw ParameterError("expansions need r >= 2");
    const auto limits = Limits::current();
    if (h.n() > limits.expansion_detector_max_n)
        throw CapacityError("contains_expansion_clique is exact only for n <= " +
            std::to_string(limits.expansion_detector_max_n) + " (got " + std::to_string(h.n()) + ")");

    detail::ExpansionFinder finder(h.masks(), h.n(), h.r(), clique);
    std::optional<Embedding> found;
    finder.search([&](const detail::ExpansionCopy & copy) {
        Embedding emb;
        emb.core.assign(copy.core.begin(), copy.core.end());
        for (std::size_t p = 0; p < copy.pairs.size(); ++p) {
            auto e = h.edge(copy.edges[p]);
            emb.edge_assignment.push_back({copy.pairs[p].first, copy.pairs[p].second, {e.begin(), e.end()}});
        }
        found = std::move(emb);
        return true;
    });
    if (found)
        if (auto why = check_expansion_embedding(h, clique, *found); ! why.empty())
            throw std::logic_error("expansion detector produced an invalid embedding: " + why);
    return found;
}

auto contains_covering_clique(const Hypergraph & h, std::size_t q) -> std::optional<Embedding>
{
    if (q < 2)
        throw ParameterError("covering clique size must be at least 2");
    const auto masks = h.masks();
    const auto n = h.n();
    std::vector<std::uint64_t> adjacency(n, 0);
    for (auto m : masks)
        for (auto a = m; a; a &= a - 1) {
            auto u = std::countr_zero(a);
            adjacency[static_cast<std::size_t>(u)] |= m & ~(std::uint64_t{1} << u);
        }

    std::vector<Vertex> clique;
    auto grow = [&](auto && self, std::uint64_t candidates) -> bool {
        if (clique.size() == q)
            return true;
        while (candidates) {
            if (static_cast<std::size_t>(std::popcount(candidates)) + clique.size() < q)
                return false;
            auto v = static_cast<Vertex>(std::countr_zero(candidates));
            candidates &= candidates - 1;
            clique.push_back(v);
            if (self(self, candidates & adjacency[v]))
                return true;
            clique.pop_back();
        }
        return false;
    };
    const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (! grow(grow, all))
        return std::nullopt;

    Embedding emb;
    emb.core = clique;
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j) {
            const auto pair = (std::uint64_t{1} << clique[i]) | (std::uint64_t{1} << clique[j]);
            for (std::size_t e = 0; e < masks.size(); ++e)
                if ((masks[e] & pair) == pair) {
                    auto edge = h.edge(e);
                    emb.edge_assignment.push_back({i, j, {edge.begin(), edge.end()}});
                    break;
                }
        }
    if (auto why = check_covering_embedding(h, q, emb); ! why.empty())
        throw std::logic_error("covering detector produced an invalid embedding: " + why);
    return emb;
}

auto find_sunflower(const Hypergraph & h, std::size_t t, std::size_t k) -> std::optional<Sunflower>
{
    if (k < 1)
        throw ParameterError("a sunflower needs at least one petal");
    if (t > h.r())
        return std::nullopt;
    const auto masks = h.masks();

    // candidate cores: t-subsets of edges, by descending codegree then lexicographically
    std::map<std::vector<Vertex>, std::size_t> codegree;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        auto edge = h.edge(e);
        for_each_combination(static_cast<unsigned>(h.r()), static_cast<unsigned>(t), [&](std::span<const unsigned> idx) {
            std::vector<Vertex> core;
            for (auto i : idx)
                core.push_back(edge[i]);
            ++codegree[core];
            return true;
        });
    }
    std::vector<std::pair<std::vector<Vertex>, std::size_t>> cores(codegree.begin(), codegree.end());
    std::stable_sort(cores.begin(), cores.end(), [](const auto & a, const auto & b) { return a.second > b.second; });

    for (const auto & [core, count] : cores) {
        if (count < k)
            break;
        const auto core_mask = edge_mask(core);
        std::vector<std::size_t> owners;
        std::vector<std::uint64_t> residuals;
        for (std::size_t e = 0; e < masks.size(); ++e)
            if ((masks[e] & core_mask) == core_mask) {
                owners.push_back(e);
                residuals.push_back(masks[e] & ~core_mask);
            }
        auto matching = detail::find_matching(residuals, k);
        if (! matching)
            continue;
        Sunflower out;
        out.core = VertexSet(core);
        for (auto i : *matching) {
            auto edge = h.edge(owners[i]);
            out.petals.emplace_back(edge.begin(), edge.end());
        }
        std::sort(out.petals.begin(), out.petals.end());
        return out;
    }
    return std::nullopt;
}

auto heavy_matching(const WeightMatrix & w, double s) -> HeavyMatching
{
    const auto t = w.t();
    for (std::size_t i = 0; i < t; ++i)
        if (w.row_sum(i) < s)
            throw PreconditionError("row " + std::to_string(i) + " sums to " + std::to_string(w.row_sum(i)) +
                    ", below the threshold " + std::to_string(s),
                i);

    HeavyMatching out;
    out.column_of_row.assign(t, 0);
    std::vector<char> row_live(t, 1), column_live(t, 1);
    for (std::size_t step = 0; step < t; ++step) {
        std::size_t best_row = t, best_column = t;
        for (std::size_t i = 0; i < t; ++i) {
            if (! row_live[i])
                continue;
            for (std::size_t j = 0; j < t; ++j) {
                if (! column_live[j])
                    continue;
                // strict comparison keeps the smallest (row, column) among ties
                if (best_row == t || w.at(i, j) > w.at(best_row, best_column)) {
                    best_row = i;
                    best_column = j;
                }
            }
        }
        out.column_of_row[best_row] = best_column;
        out.weight += w.at(best_row, best_column);
        row_live[best_row] = 0;
        column_live[best_column] = 0;
    }
    return out;
}

} // namespace hyperturan
