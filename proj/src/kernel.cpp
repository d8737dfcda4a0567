#include "p3hull/kernel.hpp"

#include <array>

#include "p3hull/error.hpp"

namespace p3hull {

MaskGraph::MaskGraph(const Graph& g) : n_(g.vertex_count()) {
    if (n_ > kMaxVertices)
        throw ExceedsCapacity("mask kernel supports at most 64 vertices (graph has " + std::to_string(n_) + ")");
    all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    offsets_.reserve(static_cast<std::size_t>(n_) + 1);
    offsets_.push_back(0);
    for (Vertex v = 0; v < n_; ++v) {
        for (Vertex w : g.neighbors(v)) targets_.push_back(w);
        offsets_.push_back(static_cast<int>(targets_.size()));
    }
    edges_ = g.edges();
}

std::uint64_t MaskGraph::hull(std::uint64_t seed) const {
    std::array<std::uint8_t, kMaxVertices> hits{};
    std::array<int, kMaxVertices> stack;
    int top = 0;
    for (std::uint64_t bits = seed; bits != 0; bits &= bits - 1) stack[top++] = __builtin_ctzll(bits);

    std::uint64_t infected = seed;
    while (top > 0) {
        const int v = stack[--top];
        for (int e = offsets_[v]; e < offsets_[v + 1]; ++e) {
            const int w = targets_[e];
            if ((infected >> w) & 1U) continue;
            if (++hits[w] == 2) {
                infected |= std::uint64_t{1} << w;
                stack[top++] = w;
            }
        }
    }
    return infected;
}

int MaskGraph::infecting_time(std::uint64_t seed) const {
    std::array<std::uint8_t, kMaxVertices> hits{};
    std::uint64_t infected = seed;
    std::uint64_t frontier = seed;
    int rounds = 0;
    while (infected != all_) {
        std::uint64_t next = 0;
        for (std::uint64_t bits = frontier; bits != 0; bits &= bits - 1) {
            const int v = __builtin_ctzll(bits);
            for (int e = offsets_[v]; e < offsets_[v + 1]; ++e) {
                const int w = targets_[e];
                if ((infected >> w) & 1U) continue;
                if (++hits[w] == 2) next |= std::uint64_t{1} << w;
            }
        }
        if (next == 0) return -1;
        infected |= next;
        frontier = next;
        ++rounds;
    }
    return rounds;
}

bool MaskGraph::acyclic_without(std::uint64_t removed) const {
    std::array<std::int8_t, kMaxVertices> parent;
    for (int v = 0; v < n_; ++v) parent[v] = static_cast<std::int8_t>(v);
    const auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [a, b] : edges_) {
        if (((removed >> a) | (removed >> b)) & 1U) continue;
        const int ra = find(a);
        const int rb = find(b);
        if (ra == rb) return false;
        parent[ra] = static_cast<std::int8_t>(rb);
    }
    return true;
}

}  // namespace p3hull
