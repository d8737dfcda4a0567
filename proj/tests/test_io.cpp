#include <doctest.h>

#include <sstream>

#include "p3hull/constructions.hpp"
#include "p3hull/decycling.hpp"
#include "p3hull/error.hpp"
#include "p3hull/graph.hpp"
#include "p3hull/infection.hpp"
#include "p3hull/io.hpp"
#include "p3hull/search.hpp"

using namespace p3hull;
using nlohmann::json;

TEST_CASE("graph JSON shape") {
    const auto doc = graph_to_json(build_generalized_petersen(5, 2));
    CHECK(doc["family"] == "gp");
    CHECK(doc["n"] == 5);
    CHECK(doc["k"] == 2);
    CHECK(doc["vertices"] == 10);
    REQUIRE(doc["edges"].size() == 15);
    for (const auto& e : doc["edges"]) CHECK(e[0].get<int>() < e[1].get<int>());

    const auto ggp = graph_to_json(build_ggp(parse_permutation("(0 1 2)(3 4 5)(6 7 8)", 9)));
    CHECK(ggp["family"] == "ggp");
    CHECK(ggp["vertices"] == 18);
    CHECK(ggp["cycles"] == json::array({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}));
}

TEST_CASE("graph JSON round trip") {
    for (const auto& g : {build_generalized_petersen(7, 3), build_surgery(5, 2),
                          build_ggp(parse_permutation("(0 4 1 5)(2 6 3 7)", 8))}) {
        const auto back = graph_from_json(json::parse(graph_to_json(g).dump()));
        CHECK(back == g);
        CHECK(back.family() == g.family());
        CHECK(back.labels() == g.labels());
    }
    const std::vector<Edge> edges{{0, 1}, {1, 2}};
    const auto custom = Graph::from_edges(4, edges);
    const auto back = graph_from_json(graph_to_json(custom));
    CHECK(back == custom);
    CHECK(back.vertex_count() == 4);

    const auto labelled = graph_from_json(json::parse(R"({"vertices":2,"edges":[[0,1]],"labels":["a","b"]})"));
    CHECK(labelled.find_label("b") == 1);

    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"family":"gp","n":4,"k":2})")), InvalidParams);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"family":"wheel"})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":3,"edges":[[0,1,2]]})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":3})")), ParseError);
}

TEST_CASE("DOT export") {
    const auto dot = to_dot(build_generalized_petersen(5, 2));
    std::istringstream in(dot);
    std::string line;
    std::getline(in, line);
    CHECK(line == "graph G {");
    int vertices = 0;
    int edges = 0;
    while (std::getline(in, line)) {
        if (line.find(" -- ") != std::string::npos) ++edges;
        else if (line != "}") ++vertices;
    }
    CHECK(vertices == 10);
    CHECK(edges == 15);
    CHECK(dot.find("  u0 -- u1;\n") != std::string::npos);
    CHECK(dot.find("  v0 -- v2;\n") != std::string::npos);
    CHECK(to_dot(build_surgery(4, 1)).find("  u0 -- u0b;\n") != std::string::npos);
}

TEST_CASE("vertex set parsing") {
    const auto g = build_surgery(5, 2);
    const auto s = parse_vertex_set(g, "u0, v2 u1b 7");
    CHECK(s.to_indices() == std::vector<Vertex>{0, 7, 11});
    CHECK(parse_vertex_set(g, "").empty());
    CHECK_THROWS_AS(parse_vertex_set(g, "w3"), ParseError);
    CHECK_THROWS_AS(parse_vertex_set(g, "20"), ParseError);
}

TEST_CASE("result documents") {
    const auto g = build_generalized_petersen(12, 4);
    const auto trace = trace_to_json(hull_closure(g, canonical_infecting_set(12, 4)));
    CHECK(trace["infecting"] == true);
    CHECK(trace["time"] == 5);
    CHECK(trace["initial"].size() == 7);
    CHECK(trace["steps"].size() == 5);
    CHECK(trace["steps"][0]["t"] == 1);
    CHECK(trace_to_json(hull_closure(g, VertexSet(24)))["time"].is_null());

    const auto g11 = build_generalized_petersen(11, 1);
    const auto profile = profile_to_json(forest_profile(g11, VertexSet(22, {0, 13, 15, 17, 19, 21})));
    CHECK(profile == json{{"components", 1}, {"diameters", {11}}, {"max_diameter", 11}, {"adjacent_pairs_in_S", 0}});

    const auto result = result_to_json(min_hull_number(build_generalized_petersen(5, 2)));
    CHECK(result["optimum"] == 3);
    CHECK(result["witness"].size() == 3);
    CHECK(result["examined"].is_number_integer());
    CHECK(result["ms"].is_number_float());

    const auto spectrum = spectrum_to_json(diameter_spectrum_gn1(7));
    CHECK(spectrum == json{{"n", 7}, {"diameters", {7, 9}}, {"min_sets_count", 56}});

    const auto bounds = bounds_to_json(ggp_hull_bounds(parse_permutation("(0 1 2)(3 4 5)(6 7 8)", 9)));
    CHECK(bounds == json{{"n", 9}, {"odd_cycles", 3}, {"lower", 5}, {"upper", 6}, {"exact", nullptr}});
}
