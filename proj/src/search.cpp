#include "p3hull/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>

#include "p3hull/combinations.hpp"
#include "p3hull/decycling.hpp"
#include "p3hull/error.hpp"
#include "p3hull/kernel.hpp"

namespace p3hull {

namespace {

constexpr std::uint64_t kNone = ~std::uint64_t{0};

int resolve_cap(int requested) {
    const int cap = requested > 0 ? requested : default_search_cap();
    return std::clamp(cap, 1, MaskGraph::kMaxVertices);
}

void check_capacity(const Graph& g, int requested_cap) {
    const int cap = resolve_cap(requested_cap);
    if (g.vertex_count() > cap)
        throw ExceedsCapacity("exhaustive search is capped at " + std::to_string(cap) + " vertices (graph has " +
                              std::to_string(g.vertex_count()) + "); set P3HULL_MAX_VERTICES to raise it (max 64)");
}

struct ChunkPlan {
    std::uint64_t total = 0;
    std::uint64_t chunk = 1;
    std::uint64_t chunks = 0;
};

ChunkPlan plan_chunks(int n, int k, int workers) {
    ChunkPlan plan;
    plan.total = Combinations::binomial(n, k);
    const std::uint64_t target = static_cast<std::uint64_t>(std::max(workers, 1)) * 16;
    plan.chunk = std::max<std::uint64_t>(4096, (plan.total + target - 1) / target);
    plan.chunks = (plan.total + plan.chunk - 1) / plan.chunk;
    return plan;
}

// Runs body(chunk_index) over all chunks on up to `workers` threads. Chunks
// are handed out in ascending order.
template <class Body>
void run_chunks(std::uint64_t chunks, int workers, Body&& body) {
    workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(workers, 1)), chunks));
    if (workers <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) body(c);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) body(c);
        });
    }
    for (auto& t : pool) t.join();
}

// Least rank in [0, C(n,k)) whose combination mask satisfies pred, or kNone.
template <class Pred>
std::uint64_t least_feasible_rank(int n, int k, int workers, const Pred& pred) {
    const ChunkPlan plan = plan_chunks(n, k, workers);
    std::atomic<std::uint64_t> best{kNone};
    run_chunks(plan.chunks, workers, [&](std::uint64_t c) {
        const std::uint64_t begin = c * plan.chunk;
        if (begin >= best.load(std::memory_order_relaxed)) return;
        const std::uint64_t end = std::min(plan.total, begin + plan.chunk);
        Combinations combo(n, k, begin);
        for (std::uint64_t rank = begin; rank < end; ++rank, combo.next()) {
            if (!pred(combo.mask())) continue;
            std::uint64_t seen = best.load();
            while (rank < seen && !best.compare_exchange_weak(seen, rank)) {
            }
            return;
        }
    });
    return best.load();
}

template <class Pred>
std::vector<std::uint64_t> all_feasible(int n, int k, int workers, const Pred& pred) {
    const ChunkPlan plan = plan_chunks(n, k, workers);
    std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(plan.chunks));
    run_chunks(plan.chunks, workers, [&](std::uint64_t c) {
        const std::uint64_t begin = c * plan.chunk;
        const std::uint64_t end = std::min(plan.total, begin + plan.chunk);
        Combinations combo(n, k, begin);
        auto& out = found[static_cast<std::size_t>(c)];
        for (std::uint64_t rank = begin; rank < end; ++rank, combo.next())
            if (pred(combo.mask())) out.push_back(combo.mask());
    });
    std::vector<std::uint64_t> merged;
    for (auto& part : found) merged.insert(merged.end(), part.begin(), part.end());
    return merged;
}

std::vector<int> sorted_indices(std::uint64_t mask) {
    std::vector<int> out;
    for (; mask != 0; mask &= mask - 1) out.push_back(__builtin_ctzll(mask));
    return out;
}

// Images of a mask under the 2n symmetries i -> +-i + s of G(n,k).
bool is_orbit_least(std::uint64_t mask, int n) {
    const auto mine = sorted_indices(mask);
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (int shift = 0; shift < n; ++shift) {
            if (reflect == 0 && shift == 0) continue;
            std::uint64_t image = 0;
            for (int v : mine) {
                const int ring = v / n;
                const int i = v % n;
                const int j = ((reflect ? -i : i) + shift + n) % n;
                image |= std::uint64_t{1} << (ring * n + j);
            }
            const auto theirs = sorted_indices(image);
            if (std::lexicographical_compare(theirs.begin(), theirs.end(), mine.begin(), mine.end())) return false;
        }
    }
    return true;
}

}  // namespace

int default_search_cap() {
    if (const char* env = std::getenv("P3HULL_MAX_VERTICES"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0') return static_cast<int>(std::clamp<long>(value, 1, MaskGraph::kMaxVertices));
    }
    return 32;
}

int default_lower_bound(const Graph& g) {
    const auto report = connectivity_and_degree_report(g);
    if (!report.connected || !report.is_cubic) return 1;
    const int n = g.vertex_count() / 2;
    return (n + 2) / 2;
}

SearchResult min_feasible_set(const Graph& g, Objective objective, const SearchOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    check_capacity(g, options.max_vertices);
    const MaskGraph kernel(g);
    const int n = kernel.vertex_count();

    const auto feasible = [&](std::uint64_t mask) {
        return objective == Objective::Hull ? kernel.infects(mask) : kernel.acyclic_without(mask);
    };

    SearchResult result;
    const auto sweep = [&](int k) -> std::uint64_t {
        const std::uint64_t rank = least_feasible_rank(n, k, options.parallelism, feasible);
        LevelStats stats{k, rank == kNone ? Combinations::binomial(n, k) : rank + 1, rank != kNone};
        result.levels.push_back(stats);
        result.sets_examined += stats.examined;
        return rank == kNone ? kNone : Combinations(n, k, rank).mask();
    };

    const int start = std::clamp(options.lower_bound_hint.value_or(default_lower_bound(g)), 0, n);
    std::optional<std::pair<int, std::uint64_t>> best;

    if (!options.early_exit) {
        // Feasible sets are upward closed, so refuting one level refutes all
        // smaller ones. Walk down until a level fails.
        int level = start;
        while (level > 0) {
            const std::uint64_t witness = sweep(level - 1);
            if (witness == kNone) break;
            best = {level - 1, witness};
            --level;
        }
        result.certified = true;
    }
    if (!best) {
        for (int k = start; k <= n; ++k) {
            const std::uint64_t witness = sweep(k);
            if (witness != kNone) {
                best = {k, witness};
                break;
            }
        }
    }
    // The full vertex set is always feasible, so best is set here.
    result.optimum = best->first;
    result.witness = VertexSet::from_mask(static_cast<std::size_t>(n), best->second);
    if (result.optimum == 0) result.certified = true;
    result.wall_time = std::chrono::steady_clock::now() - started;
    return result;
}

SearchResult min_hull_number(const Graph& g, const SearchOptions& options) {
    return min_feasible_set(g, Objective::Hull, options);
}

SearchResult min_decycling_number(const Graph& g, const SearchOptions& options) {
    return min_feasible_set(g, Objective::Decycling, options);
}

std::uint64_t for_each_hull_set(const Graph& g, int cardinality, const std::function<void(const VertexSet&)>& visit,
                                const EnumerateOptions& options) {
    check_capacity(g, options.max_vertices);
    if (options.dihedral_filter && g.family().family != Family::GeneralizedPetersen)
        throw InvalidParams("dihedral filter requires a generalized Petersen graph");
    const MaskGraph kernel(g);
    const int n = kernel.vertex_count();
    if (cardinality < 0 || cardinality > n) return 0;

    const int ring = g.family().n;
    const auto masks = all_feasible(n, cardinality, options.parallelism, [&](std::uint64_t mask) {
        return kernel.infects(mask) && (!options.dihedral_filter || is_orbit_least(mask, ring));
    });
    for (std::uint64_t mask : masks) visit(VertexSet::from_mask(static_cast<std::size_t>(n), mask));
    return masks.size();
}

std::vector<VertexSet> enumerate_min_hull_sets(const Graph& g, int optimum, const EnumerateOptions& options) {
    std::vector<VertexSet> out;
    for_each_hull_set(g, optimum, [&](const VertexSet& s) { out.push_back(s); }, options);
    return out;
}

DiameterSpectrum diameter_spectrum_gn1(int n, int parallelism) {
    if (n < 3) throw InvalidParams("diameter spectrum needs n >= 3 (got " + std::to_string(n) + ")");
    if (n > kMaxSpectrumN)
        throw ExceedsCapacity("diameter spectrum is capped at n = " + std::to_string(kMaxSpectrumN));
    const Graph g = build_generalized_petersen(n, 1);
    SearchOptions search;
    search.parallelism = parallelism;
    search.max_vertices = MaskGraph::kMaxVertices;
    const int optimum = min_hull_number(g, search).optimum;

    DiameterSpectrum spectrum;
    spectrum.n = n;
    std::set<int> seen;
    EnumerateOptions enumerate;
    enumerate.parallelism = parallelism;
    enumerate.max_vertices = MaskGraph::kMaxVertices;
    spectrum.set_count = for_each_hull_set(
        g, optimum, [&](const VertexSet& s) { seen.insert(forest_profile(g, s).max_diameter); }, enumerate);
    spectrum.diameters.assign(seen.begin(), seen.end());
    return spectrum;
}

}  // namespace p3hull
