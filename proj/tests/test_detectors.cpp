#include "support.hpp"

#include <hyperturan/detectors.hpp>
#include <hyperturan/errors.hpp>
#include <hyperturan/hypergraph.hpp>

#include <gtest/gtest.h>

#include <numeric>

using namespace hyperturan;
using namespace testing_support;

namespace {

/// Validation written against the definitions, separate from the library's.
auto valid_expansion(const Hypergraph & h, std::size_t l, const Embedding & e) -> bool
{
    if (e.core.size() != l || e.edge_assignment.size() != l * (l - 1) / 2)
        return false;
    std::uint64_t core = 0;
    for (auto v : e.core)
        core |= std::uint64_t{1} << v;
    if (static_cast<std::size_t>(std::popcount(core)) != l)
        return false;
    std::uint64_t extras = 0;
    for (const auto & pe : e.edge_assignment) {
        if (! h.contains_edge(pe.edge))
            return false;
        const auto m = mask_of(pe.edge);
        const auto want = (std::uint64_t{1} << e.core[pe.i]) | (std::uint64_t{1} << e.core[pe.j]);
        if ((m & core) != want || (m & extras))
            return false;
        extras |= m & ~core;
    }
    return true;
}

auto identical_layers(std::size_t count, const Hypergraph & h) -> LayeredInstance
{
    return LayeredInstance(h.n(), h.r(), std::vector<Hypergraph>(count, h));
}

auto random_layers(std::mt19937 & rng, std::size_t n, std::size_t r, std::size_t k, double p) -> LayeredInstance
{
    std::vector<Hypergraph> layers;
    for (std::size_t i = 0; i < k; ++i)
        layers.push_back(random_hypergraph(rng, n, r, p));
    return LayeredInstance(n, r, std::move(layers));
}

} // namespace

// --- expansion cliques ------------------------------------------------------------------

TEST(ExpansionClique, CompleteTriplesOnSeven)
{
    auto h = complete_hypergraph(7, 3);
    auto e = contains_expansion_clique(h, 3);
    ASSERT_TRUE(e);
    EXPECT_TRUE(valid_expansion(h, 3, *e));
    EXPECT_EQ(check_expansion_embedding(h, 3, *e), "");
}

TEST(ExpansionClique, PartiteGraphAvoidsNextClique)
{
    EXPECT_FALSE(contains_expansion_clique(complete_multipartite(9, 3, 3), 4));
}

TEST(ExpansionClique, StarAvoidsTriangle)
{
    auto s = star_cover(8, 3, 1);
    EXPECT_FALSE(naive_has_expanded_triangle(s));
    EXPECT_FALSE(contains_expansion_clique(s, 3));
}

TEST(ExpansionClique, TooFewVertices)
{
    EXPECT_FALSE(contains_expansion_clique(complete_hypergraph(5, 3), 3));
    EXPECT_TRUE(contains_expansion_clique(complete_hypergraph(6, 3), 3));
}

TEST(ExpansionClique, GraphCase)
{
    auto c5 = make_hypergraph(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    EXPECT_FALSE(contains_expansion_clique(c5, 3));
    EXPECT_TRUE(contains_expansion_clique(add_edge(c5, {0, 2}), 3));
}

TEST(ExpansionClique, Errors)
{
    EXPECT_THROW(contains_expansion_clique(complete_hypergraph(5, 3), 1), ParameterError);
    EXPECT_THROW(contains_expansion_clique(make_hypergraph(25, 3, {{0, 1, 2}}), 3), CapacityError);
}

// --- covering cliques ---------------------------------------------------------------------

TEST(CoveringClique, StarCoversThroughCentre)
{
    auto h = star_cover(7, 3, 1);
    auto e = contains_covering_clique(h, 4);
    ASSERT_TRUE(e);
    EXPECT_EQ(check_covering_embedding(h, 4, *e), "");
    for (const auto & pe : e->edge_assignment) {
        EXPECT_TRUE(h.contains_edge(pe.edge));
        auto m = mask_of(pe.edge);
        EXPECT_TRUE(m & (std::uint64_t{1} << e->core[pe.i]));
        EXPECT_TRUE(m & (std::uint64_t{1} << e->core[pe.j]));
    }
}

TEST(CoveringClique, Examples)
{
    EXPECT_FALSE(contains_covering_clique(complete_multipartite(8, 4, 3), 5));
    EXPECT_TRUE(contains_covering_clique(make_hypergraph(3, 3, {{0, 1, 2}}), 3));
    EXPECT_FALSE(contains_covering_clique(make_hypergraph(4, 3, {{0, 1, 2}}), 4));
}

// --- sunflowers -------------------------------------------------------------------------------

TEST(Sunflower, Examples)
{
    auto h = make_hypergraph(8, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}});
    auto s = find_sunflower(h, 1, 3);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->core, VertexSet{1});
    EXPECT_EQ(s->petals.size(), 3U);

    auto m = make_hypergraph(9, 3, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    EXPECT_FALSE(find_sunflower(m, 1, 2));
    auto z = find_sunflower(m, 0, 3);
    ASSERT_TRUE(z);
    EXPECT_TRUE(z->core.empty());
}

TEST(Sunflower, PetalsDisjoint)
{
    std::mt19937 rng(2);
    for (int i = 0; i < 100; ++i) {
        auto h = random_hypergraph(rng, 9, 3, 0.2);
        for (std::size_t t = 0; t <= 2; ++t)
            if (auto s = find_sunflower(h, t, 3)) {
                ASSERT_EQ(s->core.size(), t);
                std::uint64_t seen = 0;
                const auto core = s->core.mask();
                for (const auto & p : s->petals) {
                    ASSERT_TRUE(h.contains_edge(p));
                    auto m = mask_of(p);
                    ASSERT_EQ(m & core, core);
                    ASSERT_EQ(m & ~core & seen, 0U);
                    seen |= m & ~core;
                }
            }
    }
}

// --- heavy matchings ------------------------------------------------------------------------------

TEST(HeavyMatching, Examples)
{
    EXPECT_DOUBLE_EQ(heavy_matching(WeightMatrix::from_rows({{2, 2}, {2, 2}}), 4).weight, 4.0);

    auto w = WeightMatrix::from_rows({{3, 1}, {1, 3}});
    // both matchings by hand: 3+3 against 1+1
    EXPECT_GT(w.at(0, 0) + w.at(1, 1), w.at(0, 1) + w.at(1, 0));
    auto m = heavy_matching(w, 4);
    EXPECT_EQ(m.column_of_row, (std::vector<std::size_t>{0, 1}));
    EXPECT_DOUBLE_EQ(m.weight, 6.0);

    EXPECT_DOUBLE_EQ(heavy_matching(WeightMatrix::from_rows({{5}}), 5).weight, 5.0);
}

TEST(HeavyMatching, RefusesDeficientRow)
{
    try {
        heavy_matching(WeightMatrix::from_rows({{3, 3}, {1, 1}}), 4);
        FAIL() << "expected a precondition failure";
    }
    catch (const PreconditionError & e) {
        EXPECT_EQ(e.offending_index(), 1U);
    }
}

TEST(HeavyMatching, RandomGuarantee)
{
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> weight(-5.0, 10.0);
    for (int i = 0; i < 500; ++i) {
        const std::size_t t = 1 + static_cast<std::size_t>(i % 6);
        std::vector<std::vector<double>> rows(t, std::vector<double>(t));
        for (auto & row : rows)
            for (auto & x : row)
                x = weight(rng);
        auto w = WeightMatrix::from_rows(rows);
        double s = w.row_sum(0);
        for (std::size_t r = 1; r < t; ++r)
            s = std::min(s, w.row_sum(r));
        auto m = heavy_matching(w, s);
        std::vector<std::size_t> sorted = m.column_of_row;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t c = 0; c < t; ++c)
            ASSERT_EQ(sorted[c], c);
        double total = 0;
        for (std::size_t r = 0; r < t; ++r)
            total += w.at(r, m.column_of_row[r]);
        ASSERT_NEAR(total, m.weight, 1e-9);
        ASSERT_GE(m.weight, s - 1e-9);
    }
}

// --- rainbow assignments -------------------------------------------------------------------------

TEST(RainbowAssignment, Examples)
{
    auto ok = rainbow_assignment({{1}, {2}, {3}});
    ASSERT_TRUE(std::holds_alternative<RainbowAssignment>(ok));
    EXPECT_EQ(std::get<RainbowAssignment>(ok).colours, (std::vector<int>{1, 2, 3}));

    auto bad = rainbow_assignment({{1, 2}, {1, 2}, {1, 2}});
    ASSERT_TRUE(std::holds_alternative<HallViolator>(bad));
    EXPECT_EQ(std::get<HallViolator>(bad).positions.size(), 3U);

    auto forbidden = rainbow_assignment({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}, 3);
    ASSERT_TRUE(std::holds_alternative<HallViolator>(forbidden));
    const auto & v = std::get<HallViolator>(forbidden);
    EXPECT_EQ(v.positions.size(), 3U);
    EXPECT_LT(v.neighbourhood.size(), v.positions.size());
}

TEST(RainbowAssignment, ViolatorsAreGenuine)
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> colour(0, 4);
    for (int i = 0; i < 300; ++i) {
        std::vector<std::vector<int>> sets(1 + i % 6);
        for (auto & s : sets) {
            for (int j = 0; j < 1 + i % 3; ++j)
                s.push_back(colour(rng));
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
        auto result = rainbow_assignment(sets);
        if (auto * a = std::get_if<RainbowAssignment>(&result)) {
            std::set<int> used(a->colours.begin(), a->colours.end());
            ASSERT_EQ(used.size(), sets.size());
            for (std::size_t p = 0; p < sets.size(); ++p)
                ASSERT_TRUE(std::count(sets[p].begin(), sets[p].end(), a->colours[p]));
        }
        else {
            const auto & v = std::get<HallViolator>(result);
            std::set<int> union_;
            for (auto p : v.positions)
                union_.insert(sets[p].begin(), sets[p].end());
            ASSERT_LT(union_.size(), v.positions.size());
        }
    }
}

/// Multiplicities meeting the weighted rainbow-clique hypotheses, with colour
/// sets drawn either at random or nested (the worst case for Hall's
/// condition). k is taken from the range where the hypotheses are used.
TEST(RainbowAssignment, WeightedCliqueHypotheses)
{
    std::mt19937 rng(29);
    std::size_t violators = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int l = 3 + trial % 3;
        const int pairs = l * (l - 1) / 2;
        const int k_lo = pairs, k_hi = (l * l - 2) / 2; // 2k < l^2 - 1
        const int k = std::uniform_int_distribution<int>(k_lo, k_hi)(rng);
        std::vector<std::vector<int>> m(l, std::vector<int>(l, 0));
        m[0][1] = std::uniform_int_distribution<int>(pairs, k)(rng);
        for (int i = 2; i < l; ++i) {
            const int need = i * (pairs - 1);
            int sum = 0;
            for (int j = 0; j < i; ++j) {
                m[j][i] = std::uniform_int_distribution<int>(0, k)(rng);
                sum += m[j][i];
            }
            while (sum < need) {
                const int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
                if (m[j][i] < k) {
                    ++m[j][i];
                    ++sum;
                }
            }
        }
        const bool nested = trial % 2 == 0;
        std::vector<std::vector<int>> sets;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j) {
                std::vector<int> all(static_cast<std::size_t>(k));
                std::iota(all.begin(), all.end(), 0);
                if (! nested)
                    std::shuffle(all.begin(), all.end(), rng);
                all.resize(static_cast<std::size_t>(m[i][j]));
                std::sort(all.begin(), all.end());
                sets.push_back(all);
            }
        if (std::holds_alternative<HallViolator>(rainbow_assignment(sets)))
            ++violators;
    }
    EXPECT_EQ(violators, 0U);
}

// --- rainbow and super-rainbow copies ------------------------------------------------------------

TEST(RainbowClique, Examples)
{
    auto k9 = complete_hypergraph(9, 3);
    auto three = identical_layers(3, k9);
    auto e = contains_rainbow_expansion_clique(three, 3);
    ASSERT_TRUE(e);
    EXPECT_EQ(check_rainbow_embedding(three, 3, *e), "");

    EXPECT_FALSE(contains_rainbow_expansion_clique(identical_layers(2, k9), 3));
    EXPECT_FALSE(contains_rainbow_expansion_clique(identical_layers(5, complete_multipartite(12, 2, 3)), 3));
}

TEST(SuperRainbow, Examples)
{
    auto k9 = complete_hypergraph(9, 3);
    auto four = identical_layers(4, k9);
    auto w = contains_super_rainbow(four, 3);
    ASSERT_TRUE(w);
    ASSERT_EQ(w->avoiding.size(), 4U);
    for (std::size_t i = 0; i < 4; ++i) {
        Embedding e = w->copy;
        e.color_assignment = w->avoiding[i];
        EXPECT_EQ(check_rainbow_embedding(four, 3, e, i), "");
    }

    // with three layers, dropping one leaves two colours for three edges
    auto three = identical_layers(3, k9);
    auto copy = contains_expansion_clique(k9, 3);
    ASSERT_TRUE(copy);
    std::vector<std::vector<int>> sets(3, {0, 1, 2});
    EXPECT_TRUE(std::holds_alternative<HallViolator>(rainbow_assignment(sets, 0)));
    EXPECT_FALSE(contains_super_rainbow(three, 3));

    EXPECT_FALSE(contains_super_rainbow(identical_layers(1, k9), 3));
}

TEST(RainbowProperty, SuperRainbowImpliesRainbow)
{
    std::mt19937 rng(31);
    int supers = 0;
    for (int i = 0; i < 200; ++i) {
        auto layers = random_layers(rng, 6 + i % 2, 3, 3 + i % 3, 0.35 + 0.1 * (i % 4));
        auto super = contains_super_rainbow(layers, 3);
        if (super) {
            ++supers;
            ASSERT_TRUE(contains_rainbow_expansion_clique(layers, 3));
        }
    }
    EXPECT_GT(supers, 0);
}

TEST(RainbowProperty, WitnessesValidate)
{
    std::mt19937 rng(37);
    for (int i = 0; i < 100; ++i) {
        auto layers = random_layers(rng, 7, 3, 3 + i % 2, 0.3);
        if (auto e = contains_rainbow_expansion_clique(layers, 3)) {
            ASSERT_EQ(check_rainbow_embedding(layers, 3, *e), "");
            ASSERT_TRUE(e->color_assignment);
            std::set<std::size_t> used(e->color_assignment->begin(), e->color_assignment->end());
            ASSERT_EQ(used.size(), 3U);
        }
    }
}

TEST(RainbowProperty, AddingEdgesKeepsCopies)
{
    std::mt19937 rng(41);
    auto all = subsets(7, 3);
    for (int i = 0; i < 100; ++i) {
        auto layers = random_layers(rng, 7, 3, 3, 0.3);
        if (! contains_rainbow_expansion_clique(layers, 3))
            continue;
        auto grown = layers.layers();
        auto which = std::uniform_int_distribution<std::size_t>(0, grown.size() - 1)(rng);
        auto edge = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
        grown[which] = add_edge(grown[which], edge);
        ASSERT_TRUE(contains_rainbow_expansion_clique(LayeredInstance(7, 3, grown), 3));
    }
}

// --- detector soundness and completeness ------------------------------------------------------------

TEST(DetectorProperty, ExpansionWitnessesValidate)
{
    std::mt19937 rng(43);
    for (int i = 0; i < 150; ++i) {
        const std::size_t r = 2 + i % 3;
        auto h = random_hypergraph(rng, 6 + i % 6, r, 0.3);
        for (std::size_t l = 3; l <= 4; ++l)
            if (auto e = contains_expansion_clique(h, l)) {
                ASSERT_TRUE(valid_expansion(h, l, *e));
                ASSERT_EQ(check_expansion_embedding(h, l, *e), "");
            }
    }
}

TEST(DetectorProperty, CoveringWitnessesValidate)
{
    std::mt19937 rng(47);
    for (int i = 0; i < 100; ++i) {
        auto h = random_hypergraph(rng, 8, 3, 0.1);
        for (std::size_t q = 3; q <= 5; ++q)
            if (auto e = contains_covering_clique(h, q)) {
                ASSERT_EQ(check_covering_embedding(h, q, *e), "");
            }
    }
}

TEST(DetectorProperty, CompleteOnSmallTripleSystems)
{
    auto graphs = graphs_up_to_isomorphism(7, 3, 8);
    std::size_t positives = 0;
    for (const auto & h : graphs) {
        const bool expected = naive_has_expanded_triangle(h);
        positives += expected;
        ASSERT_EQ(contains_expansion_clique(h, 3).has_value(), expected) << h.edge_count();
    }
    EXPECT_GT(positives, 0U);
}
