#pragma once

#include <vector>

#include "p3hull/graph.hpp"
#include "p3hull/vertex_set.hpp"

namespace p3hull {

// Structure of the forest G[V - S] left after removing a decycling set S.
struct ForestProfile {
    bool is_forest = true;
    int component_count = 0;
    // Edge-count diameter per tree, ordered by each tree's smallest vertex.
    // Isolated vertices are trees of diameter 0.
    std::vector<int> tree_diameters;
    // 0 when the complement is empty.
    int max_diameter = 0;
    // Edges of g with both endpoints in S.
    int removed_adjacent_pairs = 0;
};

// True iff G[V - s] is acyclic.
bool is_decycling_set(const Graph& g, const VertexSet& s);

// Throws NotAForest when G[V - s] contains a cycle.
ForestProfile forest_profile(const Graph& g, const VertexSet& s);

// ceil((d + 1) / 2): rounds for the infection to consume a tree of
// diameter d from its leaves inward.
constexpr int diameter_to_time(int d) { return (d + 2) / 2; }

}  // namespace p3hull
