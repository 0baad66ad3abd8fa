#include "support.hpp"

#include <hyperturan/canonical.hpp>
#include <hyperturan/constructions.hpp>
#include <hyperturan/errors.hpp>
#include <hyperturan/hypergraph.hpp>

#include <gtest/gtest.h>

using namespace hyperturan;
using namespace testing_support;

namespace {

auto k2(std::size_t n) -> Hypergraph { return complete_hypergraph(n, 2); }

} // namespace

TEST(MakeHypergraph, TriangleAndDedup)
{
    auto k3 = make_hypergraph(3, 2, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(k3.edge_count(), 3U);
    auto one = make_hypergraph(4, 3, {{0, 1, 2}, {0, 1, 2}});
    EXPECT_EQ(one.edge_count(), 1U);
}

TEST(MakeHypergraph, NormalizesOrder)
{
    auto h = make_hypergraph(5, 3, {{4, 2, 0}, {3, 1, 0}});
    ASSERT_EQ(h.edge_count(), 2U);
    EXPECT_EQ(h.edge_list(), (EdgeList{{0, 1, 3}, {0, 2, 4}}));
}

TEST(MakeHypergraph, RejectsBadEdges)
{
    try {
        make_hypergraph(3, 3, {{0, 1, 3}});
        FAIL() << "expected a validation error";
    }
    catch (const ValidationError & e) {
        EXPECT_NE(std::string(e.what()).find("vertex 3 out of range"), std::string::npos) << e.what();
    }
    EXPECT_THROW(make_hypergraph(4, 3, {{0, 1}}), ValidationError);
    EXPECT_THROW(make_hypergraph(4, 3, {{0, 1, 1}}), ValidationError);
    EXPECT_THROW(make_hypergraph(4, 0, {}), ValidationError);
}

TEST(Expansion, Examples)
{
    auto k3 = k2(3);
    EXPECT_EQ(expansion(k3, 2), k3);

    auto t = expansion(k3, 3);
    EXPECT_EQ(t.n(), 6U);
    EXPECT_EQ(t.edge_count(), 3U);
    auto masks = masks_of(t);
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j) {
            EXPECT_EQ(std::popcount(masks[i] & masks[j]), 1);
            EXPECT_LT(std::countr_zero(masks[i] & masks[j]), 3);
        }

    auto k4 = expansion(k2(4), 3);
    EXPECT_EQ(k4.n(), 10U);
    EXPECT_EQ(k4.edge_count(), 6U);
    EXPECT_THROW(expansion(k3, 1), ParameterError);
    EXPECT_THROW(expansion(complete_hypergraph(4, 3), 3), ValidationError);
}

TEST(CompleteMultipartite, Examples)
{
    auto t = complete_multipartite(6, 3, 3);
    // independent count: triples with one vertex in each of {0,1},{2,3},{4,5}
    std::size_t direct = 0;
    for (auto & e : subsets(6, 3))
        if (e[0] / 2 != e[1] / 2 && e[1] / 2 != e[2] / 2 && e[0] / 2 != e[2] / 2)
            ++direct;
    EXPECT_EQ(direct, 8U);
    EXPECT_EQ(t.edge_count(), direct);

    EXPECT_EQ(complete_multipartite(5, 2, 2).edge_count(), 6U);
    // parts {0,1,2},{3,4},{5,6}
    auto part = [](Vertex v) { return v < 3 ? 0 : v < 5 ? 1 : 2; };
    std::size_t pairs = 0;
    for (auto & e : subsets(7, 2))
        if (part(e[0]) != part(e[1]))
            ++pairs;
    EXPECT_EQ(pairs, 16U);
    EXPECT_EQ(complete_multipartite(7, 3, 2).edge_count(), pairs);
    EXPECT_EQ(complete_multipartite(6, 2, 3).edge_count(), 0U);
}

TEST(StarCover, Examples)
{
    EXPECT_EQ(star_cover(6, 3, 1).edge_count(), 10U);
    EXPECT_EQ(star_cover(6, 3, 2).edge_count(), static_cast<std::size_t>(choose(6, 3) - choose(4, 3)));
    EXPECT_EQ(star_cover(6, 3, 2).edge_count(), 16U);
    EXPECT_EQ(star_cover(5, 3, 0).edge_count(), 0U);
}

TEST(MatchingNumber, Examples)
{
    EXPECT_EQ(matching_number(complete_multipartite(6, 3, 3)), 2U);
    auto s = star_cover(9, 3, 2);
    EXPECT_EQ(naive_matching_number(s), 2U);
    EXPECT_EQ(matching_number(s), 2U);
    EXPECT_EQ(matching_number(make_hypergraph(5, 3, {{0, 1, 2}})), 1U);
    EXPECT_EQ(matching_number(make_hypergraph(5, 3, {})), 0U);
}

TEST(Degree, Examples)
{
    auto s = star_cover(6, 3, 1);
    EXPECT_EQ(degree(s, VertexSet{0}), 10U);
    EXPECT_EQ(degree(k2(3), VertexSet{0, 1}), 1U);
    EXPECT_EQ(degree(s, VertexSet{}), s.edge_count());
}

TEST(Link, Examples)
{
    auto l = link(star_cover(6, 3, 1), 0);
    EXPECT_EQ(l.n(), 6U);
    EXPECT_EQ(l.r(), 2U);
    EXPECT_EQ(l.edge_count(), 10U);
    EXPECT_EQ(degree(l, VertexSet{0}), 0U);

    auto isolated = make_hypergraph(5, 3, {{1, 2, 3}});
    EXPECT_TRUE(link(isolated, 0).empty());

    // parts {0,1},{2,3},{4,5}: pairs from the other two parts
    auto lt = link(complete_multipartite(6, 3, 3), 0);
    EXPECT_EQ(lt.edge_list(), (EdgeList{{2, 4}, {2, 5}, {3, 4}, {3, 5}}));
}

TEST(Induced, Examples)
{
    auto t = complete_multipartite(6, 3, 3);
    EXPECT_EQ(induced(t, VertexSet{0, 1, 2}).edge_count(), 0U);
    EXPECT_EQ(delete_vertices(star_cover(6, 3, 1), VertexSet{0}).edge_count(), 0U);
    EXPECT_EQ(induced(t, VertexSet{0, 1, 2, 3, 4, 5}), t);

    auto h = make_hypergraph(6, 3, {{1, 3, 5}, {0, 1, 2}});
    auto sub = induced(h, VertexSet{1, 3, 5});
    EXPECT_EQ(sub.n(), 3U);
    EXPECT_EQ(sub.edge_list(), (EdgeList{{0, 1, 2}}));
    EXPECT_EQ(delete_vertices(h, VertexSet{0, 2, 4}), sub);
}

TEST(WeakChromatic, Examples)
{
    EXPECT_EQ(weak_chromatic_number(expansion(k2(3), 3)), 2U);

    auto k5 = complete_hypergraph(5, 3);
    EXPECT_FALSE(naive_colourable(k5, 2));
    EXPECT_TRUE(naive_colourable(k5, 3));
    EXPECT_EQ(weak_chromatic_number(k5), 3U);

    EXPECT_EQ(weak_chromatic_number(k2(4)), 4U);
    EXPECT_EQ(weak_chromatic_number(make_hypergraph(4, 3, {})), 1U);
}

TEST(WeakChromatic, ExpandedCliqueIsTwoColourable)
{
    for (std::size_t l = 3; l <= 5; ++l)
        for (std::size_t r = 3; r <= 4; ++r) {
            auto h = expansion(k2(l + 1), r);
            if (h.n() > 16)
                continue;
            EXPECT_EQ(weak_chromatic_number(h), 2U) << "l=" << l << " r=" << r;
        }
}

TEST(WeakChromatic, Capacity)
{
    EXPECT_THROW(weak_chromatic_number(make_hypergraph(17, 3, {{0, 1, 2}})), CapacityError);
}

TEST(IndependentDeletion, Triangle)
{
    // V \ S independent iff |V \ S| <= 1
    auto family = independent_deletion_family(k2(3));
    ASSERT_EQ(family.size(), 2U);
    std::vector<Hypergraph> expected{k2(2), k2(3)};
    for (const auto & e : expected)
        EXPECT_TRUE(std::any_of(family.begin(), family.end(), [&](const auto & f) { return is_isomorphic(f, e); }));
}

TEST(IndependentDeletion, Edgeless)
{
    auto family = independent_deletion_family(make_hypergraph(4, 3, {}));
    for (const auto & f : family)
        EXPECT_TRUE(f.empty());
    EXPECT_EQ(family.size(), 5U);
}

TEST(IndependentDeletion, CompleteTriples)
{
    // V \ S independent iff |V \ S| <= 2: complete 3-graphs on 3, 4, 5 vertices
    auto family = independent_deletion_family(complete_hypergraph(5, 3));
    ASSERT_EQ(family.size(), 3U);
    for (std::size_t m = 3; m <= 5; ++m)
        EXPECT_TRUE(std::any_of(family.begin(), family.end(),
            [&](const auto & f) { return is_isomorphic(f, complete_hypergraph(m, 3)); }));
}

TEST(Canonical, Examples)
{
    std::mt19937 rng(7);
    auto h = random_hypergraph(rng, 7, 3, 0.3);
    auto perm = random_permutation(rng, 7);
    EXPECT_EQ(canonical_form(permute(h, perm)).graph, canonical_form(h).graph);

    EXPECT_NE(complete_multipartite(6, 3, 3).edge_count(), star_cover(6, 3, 2).edge_count());
    EXPECT_FALSE(is_isomorphic(complete_multipartite(6, 3, 3), star_cover(6, 3, 2)));

    auto e = expansion(k2(3), 3);
    EXPECT_TRUE(is_isomorphic(e, permute(e, random_permutation(rng, 6))));
}

TEST(Canonical, RelabelingReproducesGraph)
{
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        auto h = random_hypergraph(rng, 8, 3, 0.25);
        auto cf = canonical_form(h);
        EXPECT_EQ(permute(h, cf.relabeling), cf.graph);
    }
}

TEST(Canonical, DistinguishesSameDegreeSequences)
{
    // C6 versus two triangles: both 2-regular on 6 vertices
    auto c6 = make_hypergraph(6, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    auto tt = make_hypergraph(6, 2, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    EXPECT_FALSE(is_isomorphic(c6, tt));
    EXPECT_FALSE(is_isomorphic(make_hypergraph(5, 3, {}), make_hypergraph(6, 3, {})));
}

// --- invariants ----------------------------------------------------------------------

TEST(HypergraphProperty, ExpansionOfSmallGraphs)
{
    for (unsigned v = 1; v <= 5; ++v) {
        auto pairs = subsets(v, 2);
        for (std::uint32_t code = 0; code < (1U << pairs.size()); ++code) {
            EdgeList edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (code & (1U << i))
                    edges.push_back(pairs[i]);
            auto f = make_hypergraph(v, 2, edges);
            for (std::size_t r = 2; r <= 4; ++r) {
                auto x = expansion(f, r);
                ASSERT_EQ(x.n(), v + (r - 2) * f.edge_count());
                ASSERT_EQ(x.edge_count(), f.edge_count());
                const std::uint64_t core = (std::uint64_t{1} << v) - 1;
                auto masks = masks_of(x);
                for (std::size_t i = 0; i < masks.size(); ++i)
                    for (std::size_t j = i + 1; j < masks.size(); ++j)
                        ASSERT_EQ(masks[i] & masks[j] & ~core, 0U);
            }
        }
    }
}

TEST(HypergraphProperty, MultipartiteCountMatchesClosedForm)
{
    for (std::size_t n = 1; n <= 30; ++n)
        for (std::size_t l = 1; l <= n; ++l)
            for (std::size_t r = 1; r <= std::min<std::size_t>(l, 4); ++r) {
                if (choose(static_cast<Count>(n), static_cast<Count>(r)) > 30000)
                    continue;
                ASSERT_EQ(static_cast<Count>(complete_multipartite(n, l, r).edge_count()),
                    turan_partite_count(static_cast<Count>(n), static_cast<Count>(l), static_cast<Count>(r)))
                    << n << " " << l << " " << r;
            }
}

TEST(HypergraphProperty, StarCoverVandermonde)
{
    for (Count n = 1; n <= 30; ++n)
        for (Count r = 1; r <= std::min<Count>(n, 4); ++r)
            for (Count s = 0; s <= n; ++s) {
                Count sum = 0;
                for (Count i = 1; i <= s; ++i)
                    sum += choose(s, i) * choose(n - s, r - i);
                const auto direct = choose(n, r) - choose(n - s, r);
                ASSERT_EQ(sum, direct);
                if (choose(n, r) <= 30000) {
                    ASSERT_EQ(static_cast<Count>(
                                  star_cover(static_cast<std::size_t>(n), static_cast<std::size_t>(r),
                                      static_cast<std::size_t>(s))
                                      .edge_count()),
                        direct);
                }
            }
}

TEST(HypergraphProperty, StarCoverMatchingNumber)
{
    for (std::size_t r = 2; r <= 3; ++r)
        for (std::size_t s = 1; s <= 3; ++s)
            for (std::size_t n = s + s * (r - 1); n <= 10; ++n)
                EXPECT_EQ(matching_number(star_cover(n, r, s)), s) << n << " " << r << " " << s;
}

TEST(HypergraphProperty, MatchingNumberAgreesWithRecursion)
{
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto h = random_hypergraph(rng, 4 + i % 7, 2 + i % 3, 0.15 + 0.1 * (i % 4));
        ASSERT_EQ(matching_number(h), naive_matching_number(h));
    }
}

TEST(HypergraphProperty, CanonicalFormInvariance)
{
    std::mt19937 rng(5);
    std::vector<Hypergraph> cases{complete_multipartite(7, 3, 3), star_cover(7, 3, 2), expansion(k2(4), 3),
        random_hypergraph(rng, 8, 3, 0.3), random_hypergraph(rng, 9, 2, 0.4), make_hypergraph(6, 3, {})};
    for (const auto & h : cases) {
        const auto reference = canonical_form(h).graph;
        for (int i = 0; i < 100; ++i)
            ASSERT_EQ(canonical_form(permute(h, random_permutation(rng, h.n()))).graph, reference);
    }
}

TEST(HypergraphProperty, LinkDegreeConsistency)
{
    std::mt19937 rng(9);
    for (int i = 0; i < 50; ++i) {
        auto h = random_hypergraph(rng, 8, 2 + i % 3, 0.3);
        for (Vertex v = 0; v < h.n(); ++v)
            ASSERT_EQ(link(h, v).edge_count(), degree(h, VertexSet{v}));
    }
}
