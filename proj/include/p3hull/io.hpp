#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "p3hull/constructions.hpp"
#include "p3hull/decycling.hpp"
#include "p3hull/graph.hpp"
#include "p3hull/infection.hpp"
#include "p3hull/search.hpp"

namespace p3hull {

std::string family_name(Family family);

// {"family", "n", "k" | "cycles", "vertices", "edges": [[i, j], ...]} with i < j.
nlohmann::json graph_to_json(const Graph& g);
// Inverse of graph_to_json. Throws ParseError on malformed documents.
Graph graph_from_json(const nlohmann::json& doc);

// Undirected DOT, one edge per line with endpoints in index order.
std::string to_dot(const Graph& g);

// {"initial", "steps": [{"t", "new"}], "infecting", "time": int | null}
nlohmann::json trace_to_json(const InfectionTrace& trace);
// {"components", "diameters", "max_diameter", "adjacent_pairs_in_S"}
nlohmann::json profile_to_json(const ForestProfile& profile);
// {"optimum", "witness", "examined", "ms"}
nlohmann::json result_to_json(const SearchResult& result);
// {"n", "diameters", "min_sets_count"}
nlohmann::json spectrum_to_json(const DiameterSpectrum& spectrum);
// {"n", "odd_cycles", "lower", "upper", "exact": int | null}
nlohmann::json bounds_to_json(const GGPBounds& bounds);

// Comma- or space-separated vertex indices or labels ("0,12,3" or "u0 v2 v3").
VertexSet parse_vertex_set(const Graph& g, std::string_view text);

}  // namespace p3hull
