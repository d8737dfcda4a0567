#pragma once

#include <optional>
#include <vector>

#include "p3hull/graph.hpp"
#include "p3hull/vertex_set.hpp"

namespace p3hull {

// Synchronous run of the 2-neighbor infection rule from an initial set.
struct InfectionTrace {
    // steps[p] is the infected set after p rounds; steps[0] is the seed.
    std::vector<VertexSet> steps;
    // newly_infected[p] lists the vertices first infected in round p
    // (newly_infected[0] is the seed itself).
    std::vector<std::vector<Vertex>> newly_infected;
    VertexSet fixed_point;
    int time_to_fixed_point = 0;

    bool infects_all() const { return fixed_point.count() == fixed_point.universe(); }
};

// One round: s plus every vertex with at least two neighbors in s.
VertexSet p3_interval(const Graph& g, const VertexSet& s);

// Rounds of p3_interval until nothing changes. Runs in O(|V| + |E|) using
// per-vertex infected-neighbor counters.
InfectionTrace hull_closure(const Graph& g, const VertexSet& s);

// The closure alone, without recording rounds.
VertexSet hull(const Graph& g, const VertexSet& s);

bool is_hull_set(const Graph& g, const VertexSet& s);

// Rounds until every vertex is infected; nullopt if s never infects all of g.
std::optional<int> infecting_time(const Graph& g, const VertexSet& s);

}  // namespace p3hull
