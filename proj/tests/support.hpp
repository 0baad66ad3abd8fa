#pragma once

// Independent brute-force oracles and random generators shared by the tests.
// Nothing here calls the search module; detectors are only used where noted.

#include <hyperturan/canonical.hpp>
#include <hyperturan/detectors.hpp>
#include <hyperturan/hypergraph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace testing_support {

using hyperturan::Count;
using hyperturan::EdgeList;
using hyperturan::Hypergraph;
using hyperturan::Vertex;

inline auto choose(Count n, Count k) -> Count
{
    if (k < 0 || k > n)
        return 0;
    Count out = 1;
    for (Count i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

/// All k-subsets of [0, n) as sorted vectors, lexicographic.
inline auto subsets(unsigned n, unsigned k) -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur;
    std::function<void(Vertex)> rec = [&](Vertex from) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = from; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

inline auto mask_of(std::span<const Vertex> e) -> std::uint64_t
{
    std::uint64_t m = 0;
    for (auto v : e)
        m |= std::uint64_t{1} << v;
    return m;
}

inline auto masks_of(const Hypergraph & h) -> std::vector<std::uint64_t>
{
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        out.push_back(mask_of(h.edge(i)));
    return out;
}

/// Does h contain K_3^{(3)+}? Every vertex triple against every edge triple.
inline auto naive_has_expanded_triangle(const Hypergraph & h) -> bool
{
    auto masks = masks_of(h);
    const auto m = masks.size();
    for (const auto & core : subsets(static_cast<unsigned>(h.n()), 3)) {
        const auto a = std::uint64_t{1} << core[0], b = std::uint64_t{1} << core[1], c = std::uint64_t{1} << core[2];
        const auto all = a | b | c;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k) {
                    if (i == j || j == k || i == k)
                        continue;
                    if ((masks[i] & all) != (a | b) || (masks[j] & all) != (a | c) || (masks[k] & all) != (b | c))
                        continue;
                    const auto xi = masks[i] & ~all, xj = masks[j] & ~all, xk = masks[k] & ~all;
                    if ((xi & xj) == 0 && (xi & xk) == 0 && (xj & xk) == 0)
                        return true;
                }
    }
    return false;
}

/// Largest number of pairwise disjoint edges, by plain recursion.
inline auto naive_matching_number(const Hypergraph & h) -> std::size_t
{
    auto masks = masks_of(h);
    std::size_t best = 0;
    std::function<void(std::size_t, std::uint64_t, std::size_t)> rec = [&](std::size_t from, std::uint64_t used,
                                                                          std::size_t size) {
        best = std::max(best, size);
        for (std::size_t i = from; i < masks.size(); ++i)
            if (! (masks[i] & used))
                rec(i + 1, used | masks[i], size + 1);
    };
    rec(0, 0, 0);
    return best;
}

/// Vertex colourings with c colours leaving no monochromatic edge.
inline auto naive_colourable(const Hypergraph & h, unsigned c) -> bool
{
    const auto n = h.n();
    std::vector<unsigned> colour(n, 0);
    auto masks = masks_of(h);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= c;
    for (std::uint64_t code = 0; code < total; ++code) {
        auto x = code;
        for (std::size_t v = 0; v < n; ++v) {
            colour[v] = static_cast<unsigned>(x % c);
            x /= c;
        }
        bool ok = true;
        for (auto m : masks) {
            std::set<unsigned> seen;
            for (auto a = m; a; a &= a - 1)
                seen.insert(colour[static_cast<std::size_t>(std::countr_zero(a))]);
            if (seen.size() == 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    }
    return false;
}

/// Uniformly random r-graph: each r-set kept with probability p.
inline auto random_hypergraph(std::mt19937 & rng, std::size_t n, std::size_t r, double p) -> Hypergraph
{
    std::bernoulli_distribution keep(p);
    EdgeList edges;
    for (auto & e : subsets(static_cast<unsigned>(n), static_cast<unsigned>(r)))
        if (keep(rng))
            edges.push_back(e);
    return hyperturan::make_hypergraph(n, r, edges);
}

inline auto random_permutation(std::mt19937 & rng, std::size_t n) -> std::vector<Vertex>
{
    std::vector<Vertex> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = static_cast<Vertex>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline auto add_edge(const Hypergraph & h, const std::vector<Vertex> & e) -> Hypergraph
{
    auto edges = h.edge_list();
    edges.push_back(e);
    return hyperturan::make_hypergraph(h.n(), h.r(), edges);
}

/// One representative per isomorphism class of r-graphs on n vertices with
/// at most max_edges edges, grown edge by edge and deduplicated by
/// canonical form.
inline auto graphs_up_to_isomorphism(std::size_t n, std::size_t r, std::size_t max_edges) -> std::vector<Hypergraph>
{
    auto all = subsets(static_cast<unsigned>(n), static_cast<unsigned>(r));
    std::vector<Hypergraph> out;
    std::vector<Hypergraph> level{hyperturan::make_hypergraph(n, r, {})};
    out.push_back(level.front());
    for (std::size_t e = 1; e <= max_edges && e <= all.size(); ++e) {
        std::set<std::vector<Vertex>> seen;
        std::vector<Hypergraph> next;
        for (const auto & h : level)
            for (const auto & edge : all) {
                if (h.contains_edge(edge))
                    continue;
                auto g = hyperturan::canonical_form(add_edge(h, edge)).graph;
                std::vector<Vertex> key;
                for (std::size_t i = 0; i < g.edge_count(); ++i)
                    key.insert(key.end(), g.edge(i).begin(), g.edge(i).end());
                if (seen.insert(key).second)
                    next.push_back(std::move(g));
            }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

} // namespace testing_support
