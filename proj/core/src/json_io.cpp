#include <hyperturan/errors.hpp>
#include <hyperturan/json_io.hpp>

namespace hyperturan {

namespace {

    auto edges_json(const Hypergraph & h) -> Json
    {
        auto edges = Json::array();
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            auto e = h.edge(i);
            edges.push_back(std::vector<Vertex>(e.begin(), e.end()));
        }
        return edges;
    }

    auto read_count(const Json & j, const char * key) -> std::size_t
    {
        if (! j.is_object() || ! j.contains(key))
            throw ValidationError(std::string("missing field \"") + key + "\"");
        const auto & v = j.at(key);
        if (! v.is_number_integer() || v.get<long long>() < 0)
            throw ValidationError(std::string("field \"") + key + "\" must be a nonnegative integer");
        return v.get<std::size_t>();
    }

    auto read_edges(const Json & j, const char * where) -> EdgeList
    {
        if (! j.is_array())
            throw ValidationError(std::string(where) + " must be an array of edges");
        EdgeList edges;
        for (const auto & e : j) {
            if (! e.is_array())
                throw ValidationError(std::string(where) + ": every edge must be an array of vertex indices");
            std::vector<Vertex> edge;
            for (const auto & v : e) {
                if (! v.is_number_integer() || v.get<long long>() < 0)
                    throw ValidationError(std::string(where) + ": vertex indices must be nonnegative integers");
                edge.push_back(v.get<Vertex>());
            }
            edges.push_back(std::move(edge));
        }
        return edges;
    }

} // namespace

auto to_json(const Hypergraph & h) -> Json
{
    Json j;
    j["n"] = h.n();
    j["r"] = h.r();
    j["edges"] = edges_json(h);
    return j;
}

auto hypergraph_from_json(const Json & j) -> Hypergraph
{
    const auto n = read_count(j, "n");
    const auto r = read_count(j, "r");
    if (! j.contains("edges"))
        throw ValidationError("missing field \"edges\"");
    return make_hypergraph(n, r, read_edges(j.at("edges"), "edges"));
}

auto to_json(const LayeredInstance & layers) -> Json
{
    Json j;
    j["n"] = layers.n();
    j["r"] = layers.r();
    auto arr = Json::array();
    for (const auto & layer : layers.layers())
        arr.push_back(edges_json(layer));
    j["layers"] = std::move(arr);
    return j;
}

auto layered_from_json(const Json & j) -> LayeredInstance
{
    const auto n = read_count(j, "n");
    const auto r = read_count(j, "r");
    if (! j.contains("layers") || ! j.at("layers").is_array())
        throw ValidationError("field \"layers\" must be an array");
    std::vector<Hypergraph> layers;
    for (const auto & layer : j.at("layers"))
        layers.push_back(make_hypergraph(n, r, read_edges(layer, "layer")));
    return LayeredInstance(n, r, std::move(layers));
}

auto to_json(const Embedding & e) -> Json
{
    Json j;
    j["core"] = e.core;
    auto pairs = Json::array();
    for (const auto & pe : e.edge_assignment)
        pairs.push_back(Json{{"pair", {pe.i, pe.j}}, {"edge", pe.edge}});
    j["edge_assignment"] = std::move(pairs);
    if (e.color_assignment)
        j["color_assignment"] = *e.color_assignment;
    else
        j["color_assignment"] = nullptr;
    return j;
}

auto to_json(const Sunflower & s) -> Json
{
    Json j;
    j["core"] = std::vector<Vertex>(s.core.members().begin(), s.core.members().end());
    j["petals"] = s.petals;
    return j;
}

auto to_json(const SearchOutcome & outcome) -> Json
{
    Json j;
    j["value"] = outcome.value;
    j["proven_optimal"] = outcome.proven_optimal;
    j["nodes"] = outcome.nodes_explored;
    std::visit([&](const auto & w) { j["witness"] = to_json(w); }, outcome.witness);
    return j;
}

auto to_json(const FormulaResult & result) -> Json
{
    Json j;
    j["value"] = result.value ? Json(*result.value) : Json(nullptr);
    j["case"] = result.case_id.empty() ? Json(nullptr) : Json(result.case_id);
    switch (result.window) {
    case WindowStatus::ok: j["window_ok"] = true; break;
    case WindowStatus::outside: j["window_ok"] = false; break;
    default: j["window_ok"] = std::string(to_string(result.window)); break;
    }
    if (! result.note.empty())
        j["note"] = result.note;
    return j;
}

} // namespace hyperturan
