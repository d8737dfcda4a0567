#include "p3hull/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "p3hull/error.hpp"

namespace p3hull {

namespace {

std::vector<std::string> petersen_labels(int n, const std::string& suffix) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i) + suffix);
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i) + suffix);
    return labels;
}

void append_petersen_edges(std::vector<Edge>& edges, int n, int k, int copy) {
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(u_vertex(n, i, copy), u_vertex(n, i + 1, copy));
        edges.emplace_back(u_vertex(n, i, copy), v_vertex(n, i, copy));
        edges.emplace_back(v_vertex(n, i, copy), v_vertex(n, i + k, copy));
    }
}

}  // namespace

GPParams GPParams::make(int n, int k) {
    if (n < 3) throw InvalidParams("n must be at least 3 (got " + std::to_string(n) + ")");
    if (k < 1 || 2 * k >= n)
        throw InvalidParams("k must satisfy 1 <= k < n/2 (got n = " + std::to_string(n) +
                            ", k = " + std::to_string(k) + ")");
    GPParams p;
    p.n = n;
    p.k = k;
    p.c = std::gcd(n, k);
    p.l = n / p.c;
    return p;
}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges, std::vector<std::string> labels,
                        FamilyTag family) {
    if (vertex_count < 0) throw InvalidGraph("negative vertex count");
    if (vertex_count > kMaxGraphVertices)
        throw ExceedsCapacity("graph has " + std::to_string(vertex_count) + " vertices; the cap is " +
                              std::to_string(kMaxGraphVertices));
    if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count)
        throw InvalidGraph("label count does not match vertex count");

    Graph g;
    g.adjacency_.resize(static_cast<std::size_t>(vertex_count));
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw InvalidGraph("edge (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range");
        if (a == b) throw InvalidGraph("self-loop at vertex " + std::to_string(a));
        g.adjacency_[static_cast<std::size_t>(a)].push_back(b);
        g.adjacency_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count_ += nbrs.size();
    }
    g.edge_count_ /= 2;

    if (labels.empty()) {
        labels.reserve(static_cast<std::size_t>(vertex_count));
        for (int i = 0; i < vertex_count; ++i) labels.push_back(std::to_string(i));
    }
    g.labels_ = std::move(labels);
    g.family_ = std::move(family);
    return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    const auto& nbrs = neighbors(a);
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex a = 0; a < vertex_count(); ++a)
        for (Vertex b : neighbors(a))
            if (a < b) out.emplace_back(a, b);
    return out;
}

Vertex Graph::find_label(const std::string& name) const {
    const auto it = std::find(labels_.begin(), labels_.end(), name);
    return it == labels_.end() ? -1 : static_cast<Vertex>(it - labels_.begin());
}

Graph build_generalized_petersen(const GPParams& params) {
    std::vector<Edge> edges;
    append_petersen_edges(edges, params.n, params.k, 0);
    return Graph::from_edges(2 * params.n, edges, petersen_labels(params.n, ""),
                             FamilyTag{Family::GeneralizedPetersen, params.n, params.k, {}});
}

Graph build_generalized_petersen(int n, int k) { return build_generalized_petersen(GPParams::make(n, k)); }

Graph build_surgery(const GPParams& params) {
    const int n = params.n;
    std::vector<Edge> edges;
    append_petersen_edges(edges, n, params.k, 0);
    append_petersen_edges(edges, n, params.k, 1);
    const auto cut = [&](Vertex a, Vertex b) {
        std::erase_if(edges, [&](const Edge& e) { return (e.first == a && e.second == b) || (e.first == b && e.second == a); });
    };
    cut(u_vertex(n, 0, 0), u_vertex(n, 1, 0));
    cut(u_vertex(n, 0, 1), u_vertex(n, 1, 1));
    edges.emplace_back(u_vertex(n, 0, 0), u_vertex(n, 0, 1));
    edges.emplace_back(u_vertex(n, 1, 0), u_vertex(n, 1, 1));

    auto labels = petersen_labels(n, "");
    auto labels_b = petersen_labels(n, "b");
    labels.insert(labels.end(), labels_b.begin(), labels_b.end());
    return Graph::from_edges(4 * n, edges, std::move(labels), FamilyTag{Family::Surgery, n, params.k, {}});
}

Graph build_surgery(int n, int k) { return build_surgery(GPParams::make(n, k)); }

Graph build_ggp(const Permutation& perm) {
    const int n = perm.size();
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(u_vertex(n, i), u_vertex(n, i + 1));
        edges.emplace_back(u_vertex(n, i), v_vertex(n, i));
        edges.emplace_back(v_vertex(n, i), v_vertex(n, perm(i)));
    }
    return Graph::from_edges(2 * n, edges, petersen_labels(n, ""), FamilyTag{Family::GGP, n, 0, perm.cycles()});
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedSubgraph out;
    out.original = keep.to_indices();
    std::vector<Vertex> renumber(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < out.original.size(); ++i)
        renumber[static_cast<std::size_t>(out.original[i])] = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (Vertex a : out.original) {
        labels.push_back(g.label(a));
        for (Vertex b : g.neighbors(a))
            if (a < b && renumber[static_cast<std::size_t>(b)] >= 0)
                edges.emplace_back(renumber[static_cast<std::size_t>(a)], renumber[static_cast<std::size_t>(b)]);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.original.size()), edges, std::move(labels));
    return out;
}

GraphReport connectivity_and_degree_report(const Graph& g) {
    GraphReport report;
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        ++report.component_count;
        std::queue<Vertex> queue;
        queue.push(root);
        seen[static_cast<std::size_t>(root)] = 1;
        while (!queue.empty()) {
            const Vertex a = queue.front();
            queue.pop();
            for (Vertex b : g.neighbors(a)) {
                if (seen[static_cast<std::size_t>(b)]) continue;
                seen[static_cast<std::size_t>(b)] = 1;
                queue.push(b);
            }
        }
    }
    report.connected = report.component_count == 1;
    report.is_cubic = n > 0;
    for (Vertex v = 0; v < n && report.is_cubic; ++v) report.is_cubic = g.degree(v) == 3;
    return report;
}

}  // namespace p3hull
