#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "p3hull/permutation.hpp"
#include "p3hull/vertex_set.hpp"

namespace p3hull {

// Graphs larger than this are rejected with ExceedsCapacity.
inline constexpr int kMaxGraphVertices = 256;

enum class Family { GeneralizedPetersen, Surgery, GGP, Custom };

// Which builder produced a graph. k is meaningful for GeneralizedPetersen and
// Surgery; cycles for GGP.
struct FamilyTag {
    Family family = Family::Custom;
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> cycles;

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// Validated parameters of G(n,k): n >= 3, 1 <= k < n/2, c = gcd(n,k), l = n/c.
struct GPParams {
    int n = 0;
    int k = 0;
    int c = 0;
    int l = 0;

    // Throws InvalidParams.
    static GPParams make(int n, int k);
};

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph with sorted adjacency lists.
class Graph {
public:
    Graph() = default;

    // Duplicate pairs (in either orientation) are merged; self-loops and
    // out-of-range endpoints throw InvalidGraph. Missing labels default to
    // the decimal index.
    static Graph from_edges(int vertex_count, std::span<const Edge> edges, std::vector<std::string> labels = {},
                            FamilyTag family = {});

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Vertex a, Vertex b) const;

    // All edges as (i, j) with i < j, sorted.
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
    // -1 if no vertex carries this label.
    Vertex find_label(const std::string& name) const;

    const FamilyTag& family() const { return family_; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::string> labels_;
    FamilyTag family_;
    std::size_t edge_count_ = 0;
};

// u_i -> i, v_i -> n + i; edges u_i u_{i+1}, u_i v_i, v_i v_{i+k} (mod n).
Graph build_generalized_petersen(const GPParams& params);
Graph build_generalized_petersen(int n, int k);

// Two copies of G(n,k) (copy B offset by 2n) with u_0u_1 and u_0'u_1'
// replaced by u_0u_0' and u_1u_1'.
Graph build_surgery(const GPParams& params);
Graph build_surgery(int n, int k);

// Exterior cycle and spokes as in G(n,k); interior edges v_i v_{sigma(i)}.
Graph build_ggp(const Permutation& perm);

struct InducedSubgraph {
    Graph graph;
    // original[new_index] = index in the source graph.
    std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

struct GraphReport {
    // True iff exactly one component (the empty graph is not connected).
    bool connected = false;
    // True iff nonempty and every vertex has degree 3.
    bool is_cubic = false;
    int component_count = 0;
};

GraphReport connectivity_and_degree_report(const Graph& g);

// Vertex index of u_i / v_i in G(n,k) or GGP(n, sigma); copy selects the
// surgery copy (0 = A, 1 = B).
inline Vertex u_vertex(int n, int i, int copy = 0) { return 2 * n * copy + ((i % n) + n) % n; }
inline Vertex v_vertex(int n, int i, int copy = 0) { return 2 * n * copy + n + ((i % n) + n) % n; }

}  // namespace p3hull
