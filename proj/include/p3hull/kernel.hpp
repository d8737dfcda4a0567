#pragma once

#include <cstdint>
#include <vector>

#include "p3hull/graph.hpp"

namespace p3hull {

// Flattened copy of a graph with at most 64 vertices, used by the search
// inner loops. Vertex sets are plain 64-bit masks.
class MaskGraph {
public:
    static constexpr int kMaxVertices = 64;

    // Throws ExceedsCapacity for graphs with more than 64 vertices.
    explicit MaskGraph(const Graph& g);

    int vertex_count() const { return n_; }
    std::uint64_t all() const { return all_; }

    // Closure of seed under the 2-neighbor rule.
    std::uint64_t hull(std::uint64_t seed) const;
    bool infects(std::uint64_t seed) const { return hull(seed) == all_; }
    // Synchronous rounds to infect everything, or -1.
    int infecting_time(std::uint64_t seed) const;
    // True iff the complement of removed induces a forest.
    bool acyclic_without(std::uint64_t removed) const;

private:
    int n_ = 0;
    std::uint64_t all_ = 0;
    std::vector<int> offsets_;
    std::vector<int> targets_;
    std::vector<std::pair<int, int>> edges_;
};

}  // namespace p3hull
