#include "p3hull/decycling.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "p3hull/error.hpp"

namespace p3hull {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }

    // False if a and b were already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        return true;
    }

private:
    std::vector<int> parent_;
};

void require_universe(const Graph& g, const VertexSet& s) {
    if (s.universe() != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("vertex set universe does not match the graph");
}

// BFS distances from source within the vertices not in removed; returns the
// farthest vertex and its distance.
std::pair<Vertex, int> farthest(const Graph& g, const VertexSet& removed, Vertex source, std::vector<int>& dist) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> queue;
    queue.push(source);
    dist[static_cast<std::size_t>(source)] = 0;
    std::pair<Vertex, int> best{source, 0};
    while (!queue.empty()) {
        const Vertex a = queue.front();
        queue.pop();
        const int da = dist[static_cast<std::size_t>(a)];
        if (da > best.second) best = {a, da};
        for (Vertex b : g.neighbors(a)) {
            if (removed.contains(b) || dist[static_cast<std::size_t>(b)] >= 0) continue;
            dist[static_cast<std::size_t>(b)] = da + 1;
            queue.push(b);
        }
    }
    return best;
}

}  // namespace

bool is_decycling_set(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    DisjointSets sets(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& [a, b] : g.edges()) {
        if (s.contains(a) || s.contains(b)) continue;
        if (!sets.unite(a, b)) return false;
    }
    return true;
}

ForestProfile forest_profile(const Graph& g, const VertexSet& s) {
    if (!is_decycling_set(g, s)) throw NotAForest("complement of the given set contains a cycle");

    ForestProfile profile;
    for (const auto& [a, b] : g.edges())
        if (s.contains(a) && s.contains(b)) ++profile.removed_adjacent_pairs;

    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> dist(n, -1);
    std::vector<char> done(n, 0);
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (s.contains(root) || done[static_cast<std::size_t>(root)]) continue;
        // Double BFS: the farthest vertex from any vertex of a tree is an
        // endpoint of a longest path.
        const auto [end, unused] = farthest(g, s, root, dist);
        for (std::size_t v = 0; v < n; ++v)
            if (dist[v] >= 0) done[v] = 1;
        const int diameter = farthest(g, s, end, dist).second;
        profile.tree_diameters.push_back(diameter);
        profile.max_diameter = std::max(profile.max_diameter, diameter);
        ++profile.component_count;
    }
    return profile;
}

}  // namespace p3hull
