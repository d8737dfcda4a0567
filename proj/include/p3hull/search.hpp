#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "p3hull/graph.hpp"
#include "p3hull/vertex_set.hpp"

namespace p3hull {

enum class Objective { Hull, Decycling };

// Exhaustive-mode vertex cap: P3HULL_MAX_VERTICES if set, else 32; always
// clamped to [1, 64].
int default_search_cap();

// ceil((n+1)/2) for a connected cubic graph on 2n vertices, else 1.
int default_lower_bound(const Graph& g);

struct SearchOptions {
    // Starting cardinality; defaults to default_lower_bound(g).
    std::optional<int> lower_bound_hint;
    // Skip the exhaustive refutation of the level below the start. The
    // optimum is then only an upper bound (certified = false).
    bool early_exit = false;
    int parallelism = 1;
    // 0 selects default_search_cap().
    int max_vertices = 0;
};

struct LevelStats {
    int cardinality = 0;
    std::uint64_t examined = 0;
    bool feasible = false;

    friend bool operator==(const LevelStats&, const LevelStats&) = default;
};

struct SearchResult {
    int optimum = 0;
    // Lexicographically least feasible set of size optimum.
    VertexSet witness;
    std::uint64_t sets_examined = 0;
    // Every level swept, in sweep order.
    std::vector<LevelStats> levels;
    // True iff level optimum-1 was exhaustively refuted (or optimum == 0).
    bool certified = false;
    std::chrono::duration<double, std::milli> wall_time{};
};

SearchResult min_hull_number(const Graph& g, const SearchOptions& options = {});
SearchResult min_decycling_number(const Graph& g, const SearchOptions& options = {});
SearchResult min_feasible_set(const Graph& g, Objective objective, const SearchOptions& options = {});

struct EnumerateOptions {
    int parallelism = 1;
    int max_vertices = 0;
    // Keep only sets that are lexicographically least in their orbit under
    // the rotations and reflections of G(n,k). Requires a GP-family graph.
    bool dihedral_filter = false;
};

// Calls visit on every hull set of the given cardinality, once each, in
// lexicographic order. Returns the number of sets visited.
std::uint64_t for_each_hull_set(const Graph& g, int cardinality, const std::function<void(const VertexSet&)>& visit,
                                const EnumerateOptions& options = {});

// All hull sets of size optimum (pass min_hull_number(g).optimum).
std::vector<VertexSet> enumerate_min_hull_sets(const Graph& g, int optimum, const EnumerateOptions& options = {});

struct DiameterSpectrum {
    int n = 0;
    // Distinct maximum tree diameters over all minimum hull sets, ascending.
    std::vector<int> diameters;
    std::uint64_t set_count = 0;
};

inline constexpr int kMaxSpectrumN = 12;

// Enumerates every minimum hull set of G(n,1), 3 <= n <= 12.
DiameterSpectrum diameter_spectrum_gn1(int n, int parallelism = 1);

}  // namespace p3hull
