#include "p3hull/infection.hpp"

#include <algorithm>
#include <stdexcept>

namespace p3hull {

namespace {

void require_universe(const Graph& g, const VertexSet& s) {
    if (s.universe() != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("vertex set universe does not match the graph");
}

}  // namespace

VertexSet p3_interval(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    VertexSet out = s;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (s.contains(v)) continue;
        int hits = 0;
        for (Vertex w : g.neighbors(v))
            if (s.contains(w) && ++hits == 2) break;
        if (hits >= 2) out.insert(v);
    }
    return out;
}

InfectionTrace hull_closure(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    const auto n = static_cast<std::size_t>(g.vertex_count());

    InfectionTrace trace;
    trace.steps.push_back(s);
    trace.newly_infected.push_back(s.to_indices());

    std::vector<int> infected_neighbors(n, 0);
    std::vector<char> infected(n, 0);
    for (Vertex v : trace.newly_infected.front()) infected[static_cast<std::size_t>(v)] = 1;

    // Counters only ever see vertices from completed rounds, so a vertex that
    // crosses the threshold during round p joins in round p+1.
    std::vector<Vertex> frontier = trace.newly_infected.front();
    VertexSet current = s;
    for (;;) {
        std::vector<Vertex> next;
        for (Vertex v : frontier) {
            for (Vertex w : g.neighbors(v)) {
                const auto wi = static_cast<std::size_t>(w);
                if (infected[wi]) continue;
                if (++infected_neighbors[wi] == 2) next.push_back(w);
            }
        }
        if (next.empty()) break;
        for (Vertex w : next) {
            infected[static_cast<std::size_t>(w)] = 1;
            current.insert(w);
        }
        std::sort(next.begin(), next.end());
        trace.steps.push_back(current);
        trace.newly_infected.push_back(next);
        frontier = std::move(next);
    }
    trace.fixed_point = current;
    trace.time_to_fixed_point = static_cast<int>(trace.steps.size()) - 1;
    return trace;
}

VertexSet hull(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> infected_neighbors(n, 0);
    VertexSet out = s;
    std::vector<Vertex> stack = s.to_indices();
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (out.contains(w)) continue;
            if (++infected_neighbors[static_cast<std::size_t>(w)] == 2) {
                out.insert(w);
                stack.push_back(w);
            }
        }
    }
    return out;
}

bool is_hull_set(const Graph& g, const VertexSet& s) {
    return hull(g, s).count() == static_cast<std::size_t>(g.vertex_count());
}

std::optional<int> infecting_time(const Graph& g, const VertexSet& s) {
    const auto trace = hull_closure(g, s);
    if (!trace.infects_all()) return std::nullopt;
    return trace.time_to_fixed_point;
}

}  // namespace p3hull
