#include "support.hpp"

#include <hyperturan/errors.hpp>
#include <hyperturan/json_io.hpp>

#include <gtest/gtest.h>

using namespace hyperturan;
using namespace testing_support;

TEST(Json, HypergraphShape)
{
    auto h = make_hypergraph(4, 3, {{2, 1, 0}, {0, 1, 3}});
    auto j = to_json(h);
    EXPECT_EQ(j.dump(), R"({"n":4,"r":3,"edges":[[0,1,2],[0,1,3]]})");
}

TEST(Json, HypergraphRoundTrip)
{
    std::mt19937 rng(59);
    for (int i = 0; i < 50; ++i) {
        auto h = random_hypergraph(rng, 3 + i % 8, 1 + i % 4, 0.3);
        EXPECT_EQ(hypergraph_from_json(Json::parse(to_json(h).dump())), h);
    }
}

TEST(Json, LayeredRoundTrip)
{
    std::mt19937 rng(61);
    for (int i = 0; i < 20; ++i) {
        std::vector<Hypergraph> layers;
        for (int k = 0; k < 1 + i % 4; ++k)
            layers.push_back(random_hypergraph(rng, 6, 3, 0.3));
        LayeredInstance inst(6, 3, layers);
        EXPECT_EQ(layered_from_json(Json::parse(to_json(inst).dump())), inst);
    }
}

TEST(Json, RejectsMalformedDocuments)
{
    for (const char * text : {
             R"({"r":3,"edges":[]})",
             R"({"n":-1,"r":3,"edges":[]})",
             R"({"n":4,"r":3})",
             R"({"n":4,"r":3,"edges":[[0,1]]})",
             R"({"n":4,"r":3,"edges":[[0,1,4]]})",
             R"({"n":4,"r":3,"edges":[[0,1,1]]})",
             R"({"n":4,"r":3,"edges":[["a",1,2]]})",
             R"({"n":4,"r":3,"edges":{}})",
         })
        EXPECT_THROW(hypergraph_from_json(Json::parse(text)), ValidationError) << text;
    EXPECT_THROW(layered_from_json(Json::parse(R"({"n":4,"r":3,"layers":[[[0,1,2]],[[0,1]]]})")), ValidationError);
    EXPECT_THROW(layered_from_json(Json::parse(R"({"n":4,"r":3})")), ValidationError);
}

TEST(Json, FormulaResult)
{
    auto j = to_json(small_s_value(20, 3, 4, 6));
    EXPECT_EQ(j["value"], 546);
    EXPECT_EQ(j["case"], "i");
    EXPECT_EQ(j["window_ok"], true);

    auto uncovered = to_json(small_s_value(20, 3, 5, 20));
    EXPECT_TRUE(uncovered["value"].is_null());
    EXPECT_TRUE(uncovered["case"].is_null());
    EXPECT_EQ(uncovered["window_ok"], "not_covered");

    EXPECT_EQ(to_json(large_s_value(11, 3, 3, 2))["window_ok"], "unknown");
}

TEST(Json, SearchOutcome)
{
    SearchOutcome o;
    o.value = 2;
    o.proven_optimal = true;
    o.nodes_explored = 7;
    o.witness = make_hypergraph(4, 2, {{0, 1}, {2, 3}});
    auto j = to_json(o);
    EXPECT_EQ(j["value"], 2);
    EXPECT_EQ(j["proven_optimal"], true);
    EXPECT_EQ(j["nodes"], 7);
    EXPECT_EQ(hypergraph_from_json(j["witness"]), std::get<Hypergraph>(o.witness));
}

TEST(Json, Embedding)
{
    Embedding e;
    e.core = {0, 1, 2};
    e.edge_assignment = {{0, 1, {0, 1, 3}}, {0, 2, {0, 2, 4}}, {1, 2, {1, 2, 5}}};
    auto j = to_json(e);
    EXPECT_EQ(j["core"].size(), 3U);
    EXPECT_EQ(j["edge_assignment"][2]["edge"], Json::parse("[1,2,5]"));
    EXPECT_TRUE(j["color_assignment"].is_null());
}
