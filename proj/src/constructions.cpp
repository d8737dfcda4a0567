#include "p3hull/constructions.hpp"

#include <set>
#include <string>

#include "p3hull/error.hpp"
#include "p3hull/infection.hpp"

namespace p3hull {

namespace {

VertexSet verified(const Graph& g, VertexSet s, const std::string& what) {
    if (!is_hull_set(g, s)) throw ConstructionFailed(what + " does not infect the whole graph");
    return s;
}

// Canonical set in index coordinates: ring 0 = u, ring 1 = v.
std::vector<std::pair<int, int>> canonical_members(const GPParams& p) {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < p.c; ++j)
        for (int i = 1; i < p.l; i += 2) out.emplace_back(1, j + i * p.k);
    if (p.l % 2 == 0) {
        out.emplace_back(0, 0);
    } else {
        out.emplace_back(0, p.c - 1);
        for (int j = 0; j < p.c; j += 2)
            if (j != p.c - 1) out.emplace_back(0, j);
    }
    return out;
}

void insert_member(VertexSet& s, int n, const std::pair<int, int>& member, int shift, int copy) {
    const auto [ring, i] = member;
    s.insert(ring == 0 ? u_vertex(n, i + shift, copy) : v_vertex(n, i + shift, copy));
}

// True iff u_start..u_{start+m-1} attach to m distinct odd cycles.
bool valid_path_start(const Permutation& perm, int start) {
    const int n = perm.size();
    const int m = perm.odd_cycle_count();
    std::set<int> hit;
    for (int t = 0; t < m; ++t) {
        const int cycle = perm.cycle_of((start + t) % n);
        if (perm.cycles()[static_cast<std::size_t>(cycle)].size() % 2 == 0) return false;
        if (!hit.insert(cycle).second) return false;
    }
    return true;
}

}  // namespace

int predicted_hull_number_gp(int n, int k) {
    GPParams::make(n, k);
    return (n + 2) / 2;
}

VertexSet canonical_infecting_set(int n, int k) {
    const GPParams p = GPParams::make(n, k);
    VertexSet s(static_cast<std::size_t>(2 * n));
    for (const auto& member : canonical_members(p)) insert_member(s, n, member, 0, 0);
    return verified(build_generalized_petersen(p), std::move(s), "canonical G(n,k) set");
}

int predicted_infecting_time(int n, int k) {
    const GPParams p = GPParams::make(n, k);
    return p.l % 2 == 0 ? n / 2 : (n - p.c) / 2 + 1;
}

std::vector<int> predicted_diameter_set_gn1(int n) {
    if (n < 3) throw InvalidParams("n must be at least 3 (got " + std::to_string(n) + ")");
    std::vector<int> out;
    if (n % 2 == 1) {
        for (int bumps = 0; bumps <= (n - 3) / 4; ++bumps) out.push_back(n + 2 * bumps);
    } else {
        for (int d = n / 2; d <= 3 * n / 2 - 2; ++d)
            if (d != n - 1) out.push_back(d);
    }
    return out;
}

int predicted_hull_surgery(int n, int k) {
    GPParams::make(n, k);
    return n + 1;
}

VertexSet surgery_infecting_set(int n, int k) {
    const GPParams p = GPParams::make(n, k);
    VertexSet s(static_cast<std::size_t>(4 * n));
    if (n % 2 == 0 && p.l % 2 == 0) {
        s.insert(u_vertex(n, 0));
        for (int copy = 0; copy < 2; ++copy)
            for (int j = 0; j < p.c; ++j)
                for (int i = 0; i < p.l; i += 2) s.insert(v_vertex(n, j + i * p.k, copy));
    } else {
        // Rotate so the canonical set's u_{c-1}u_c lands on the surgered
        // edge u_0u_1.
        const int shift = -(p.c - 1);
        for (int copy = 0; copy < 2; ++copy)
            for (const auto& member : canonical_members(p)) insert_member(s, n, member, shift, copy);
        if (n % 2 == 0) s.erase(u_vertex(n, 0, 1));
    }
    return verified(build_surgery(p), std::move(s), "surgery set");
}

GGPBounds ggp_hull_bounds(const Permutation& perm) {
    GGPBounds b;
    b.n = perm.size();
    b.odd_cycle_count = perm.odd_cycle_count();
    b.lower = (b.n + 2) / 2;
    switch (b.odd_cycle_count) {
        case 0:
        case 2:
            b.exact = (b.n + 2) / 2;
            break;
        case 1:
            b.exact = (b.n + 1) / 2;
            break;
        default:
            break;
    }
    b.upper = b.exact.value_or((b.n + b.odd_cycle_count) / 2);
    return b;
}

std::optional<int> ggp_path_condition(const Permutation& perm) {
    if (perm.odd_cycle_count() == 0) return 0;
    for (int j = 0; j < perm.size(); ++j)
        if (valid_path_start(perm, j)) return j;
    return std::nullopt;
}

VertexSet ggp_infecting_set(const Permutation& perm, int start) {
    const int n = perm.size();
    if (start < 0 || start >= n || !valid_path_start(perm, start))
        throw PathConditionUnmet("no path of exterior vertices to distinct odd cycles starts at u" +
                                 std::to_string(start));
    const int m = perm.odd_cycle_count();

    std::vector<int> anchor(perm.cycles().size(), -1);
    for (int t = 0; t < m; ++t) anchor[static_cast<std::size_t>(perm.cycle_of((start + t) % n))] = (start + t) % n;

    VertexSet s(static_cast<std::size_t>(2 * n));
    for (std::size_t c = 0; c < perm.cycles().size(); ++c) {
        const auto& cycle = perm.cycles()[c];
        // Odd cycles start at their path vertex; positions 0 and len-1 stay
        // out so the anchor can be infected from the exterior.
        int x = anchor[c] >= 0 ? anchor[c] : cycle.front();
        for (std::size_t pos = 0; pos + (cycle.size() % 2) < cycle.size(); ++pos, x = perm(x))
            if (pos % 2 == 1) s.insert(v_vertex(n, x));
    }
    if (m == 0) {
        s.insert(u_vertex(n, start));
    } else {
        s.insert(u_vertex(n, start + m - 1));
        for (int j = 0; j < m; j += 2) s.insert(u_vertex(n, start + j));
    }
    return verified(build_ggp(perm), std::move(s), "GGP path-condition set");
}

}  // namespace p3hull
