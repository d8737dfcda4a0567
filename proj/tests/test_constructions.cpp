#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "p3hull/constructions.hpp"
#include "p3hull/error.hpp"
#include "p3hull/graph.hpp"
#include "p3hull/infection.hpp"
#include "p3hull/search.hpp"

using namespace p3hull;

namespace {

VertexSet named(const Graph& g, std::initializer_list<const char*> names) {
    VertexSet s(static_cast<std::size_t>(g.vertex_count()));
    for (const char* name : names) s.insert(g.find_label(name));
    return s;
}

bool oracle_infects(const Graph& g, const VertexSet& s) {
    return oracle::infects(oracle::adjacency_of(g), oracle::to_set(s.to_indices()));
}

// Smallest window start whose m consecutive exterior vertices attach to m
// distinct odd cycles, found by walking the image array directly.
std::optional<int> naive_window(const std::vector<int>& image) {
    const int n = static_cast<int>(image.size());
    std::vector<int> cycle_id(static_cast<std::size_t>(n), -1);
    std::vector<int> cycle_len;
    for (int i = 0; i < n; ++i) {
        if (cycle_id[i] >= 0) continue;
        int len = 0;
        for (int x = i; cycle_id[x] < 0; x = image[x]) {
            cycle_id[x] = static_cast<int>(cycle_len.size());
            ++len;
        }
        cycle_len.push_back(len);
    }
    int m = 0;
    for (int len : cycle_len) m += len % 2;
    if (m == 0) return 0;
    for (int j = 0; j < n; ++j) {
        std::set<int> seen;
        bool ok = true;
        for (int t = 0; t < m && ok; ++t) {
            const int c = cycle_id[(j + t) % n];
            ok = cycle_len[c] % 2 == 1 && seen.insert(c).second;
        }
        if (ok) return j;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("predicted hull numbers") {
    CHECK(predicted_hull_number_gp(5, 2) == 3);
    CHECK(predicted_hull_number_gp(12, 2) == 7);
    CHECK(predicted_hull_number_gp(4, 1) == 3);
    CHECK_THROWS_AS(predicted_hull_number_gp(6, 3), InvalidParams);
}

TEST_CASE("canonical infecting sets") {
    const auto g12_2 = build_generalized_petersen(12, 2);
    CHECK(canonical_infecting_set(12, 2) == named(g12_2, {"u0", "v2", "v3", "v6", "v7", "v10", "v11"}));
    const auto g12_4 = build_generalized_petersen(12, 4);
    CHECK(canonical_infecting_set(12, 4) == named(g12_4, {"u0", "u2", "u3", "v4", "v5", "v6", "v7"}));
    const auto g5 = build_generalized_petersen(5, 2);
    const auto s5 = canonical_infecting_set(5, 2);
    CHECK(s5 == named(g5, {"u0", "v1", "v2"}));
    CHECK(oracle_infects(g5, s5));
    CHECK_THROWS_AS(canonical_infecting_set(4, 2), InvalidParams);
}

TEST_CASE("predicted infecting times") {
    CHECK(predicted_infecting_time(12, 2) == 6);
    CHECK(predicted_infecting_time(12, 4) == 5);
    CHECK(predicted_infecting_time(5, 2) == 3);
}

TEST_CASE("canonical sets over the grid") {
    for (int n = 3; n <= 12; ++n)
        for (int k = 1; 2 * k < n; ++k) {
            const auto g = build_generalized_petersen(n, k);
            const auto s = canonical_infecting_set(n, k);
            CHECK(static_cast<int>(s.count()) == (n + 2) / 2);
            CHECK(oracle_infects(g, s));
            const auto [hull, rounds] = oracle::closure(oracle::adjacency_of(g), oracle::to_set(s.to_indices()));
            CHECK(rounds == predicted_infecting_time(n, k));
        }
}

TEST_CASE("second round adds at most two exterior vertices") {
    for (int n = 3; n <= 12; ++n)
        for (int k = 1; 2 * k < n; ++k) {
            const auto trace = hull_closure(build_generalized_petersen(n, k), canonical_infecting_set(n, k));
            if (trace.newly_infected.size() < 3) continue;
            int exterior = 0;
            for (Vertex v : trace.newly_infected[2]) exterior += v < n ? 1 : 0;
            CHECK(exterior <= 2);
        }
}

TEST_CASE("predicted diameter sets") {
    CHECK(predicted_diameter_set_gn1(5) == std::vector<int>{5});
    CHECK(predicted_diameter_set_gn1(7) == std::vector<int>{7, 9});
    CHECK(predicted_diameter_set_gn1(6) == std::vector<int>{3, 4, 6, 7});
    CHECK(predicted_diameter_set_gn1(8) == std::vector<int>{4, 5, 6, 8, 9, 10});
    CHECK_THROWS_AS(predicted_diameter_set_gn1(2), InvalidParams);
}

TEST_CASE("surgery predictions and sets") {
    CHECK(predicted_hull_surgery(5, 2) == 6);
    CHECK(predicted_hull_surgery(4, 1) == 5);
    CHECK(predicted_hull_surgery(12, 2) == 13);

    const auto s52 = surgery_infecting_set(5, 2);
    CHECK(s52.count() == 6);
    CHECK(oracle_infects(build_surgery(5, 2), s52));

    const auto s62 = surgery_infecting_set(6, 2);
    CHECK(s62.count() == 7);
    CHECK(oracle_infects(build_surgery(6, 2), s62));

    const auto s41 = surgery_infecting_set(4, 1);
    CHECK(s41 == VertexSet(16, {u_vertex(4, 0), v_vertex(4, 0), v_vertex(4, 2), v_vertex(4, 0, 1), v_vertex(4, 2, 1)}));
    CHECK(oracle_infects(build_surgery(4, 1), s41));
}

TEST_CASE("surgery sets across small instances") {
    for (int n = 3; n <= 12; ++n)
        for (int k = 1; 2 * k < n; ++k) {
            const auto s = surgery_infecting_set(n, k);
            CHECK(static_cast<int>(s.count()) == n + 1);
            CHECK(oracle_infects(build_surgery(n, k), s));
        }
    for (int n = 3; n <= 5; ++n)
        for (int k = 1; 2 * k < n; ++k) CHECK(min_hull_number(build_surgery(n, k)).optimum == n + 1);
}

TEST_CASE("generalized bounds") {
    const auto tri = ggp_hull_bounds(parse_permutation("(0 1 2)(3 4 5)(6 7 8)", 9));
    CHECK(tri.odd_cycle_count == 3);
    CHECK(tri.lower == 5);
    CHECK(tri.upper == 6);
    CHECK_FALSE(tri.exact.has_value());

    const auto even = ggp_hull_bounds(parse_permutation("(0 1 2 3)(4 5 6 7)", 8));
    CHECK(even.exact == 5);
    CHECK(even.odd_cycle_count == 0);

    const auto single = ggp_hull_bounds(Permutation::rotation(9, 1));
    CHECK(single.exact == 5);
    CHECK(single.odd_cycle_count == 1);

    const auto two = ggp_hull_bounds(parse_permutation("(0 1 2)(3 4 5 6 7)", 8));
    CHECK(two.exact == 5);
}

TEST_CASE("path condition") {
    const auto tri = parse_permutation("(0 1 2)(3 4 5)(6 7 8)", 9);
    CHECK_FALSE(ggp_path_condition(tri).has_value());
    CHECK_FALSE(naive_window(tri.image()).has_value());

    const auto spread = parse_permutation("(0 3 6)(1 4 7)(2 5 8)", 9);
    CHECK(ggp_path_condition(spread) == 0);
    CHECK(ggp_path_condition(parse_permutation("(0 1 2 3)(4 5 6 7)", 8)) == 0);

    std::mt19937 rng(29);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 14);
        const auto perm = Permutation::from_cycles(n, oracle::random_cycles(n, rng));
        CHECK(ggp_path_condition(perm) == naive_window(perm.image()));
    }
}

TEST_CASE("generalized infecting sets") {
    const auto spread = parse_permutation("(0 3 6)(1 4 7)(2 5 8)", 9);
    const auto s = ggp_infecting_set(spread, 0);
    CHECK(s.count() == 5);
    CHECK(oracle_infects(build_ggp(spread), s));

    const auto even = parse_permutation("(0 1 2 3)(4 5 6 7)", 8);
    const auto e = ggp_infecting_set(even, 0);
    CHECK(e.count() == 5);
    CHECK(oracle_infects(build_ggp(even), e));

    CHECK_THROWS_AS(ggp_infecting_set(parse_permutation("(0 1 2)(3 4 5)(6 7 8)", 9), 0), PathConditionUnmet);
    CHECK_THROWS_AS(ggp_infecting_set(spread, 1 + 9), PathConditionUnmet);
}

TEST_CASE("generalized sets on random permutations meeting the path condition") {
    std::mt19937 rng(31);
    int built = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 20);
        const auto perm = Permutation::from_cycles(n, oracle::random_cycles(n, rng));
        const auto start = ggp_path_condition(perm);
        if (!start) continue;
        const auto s = ggp_infecting_set(perm, *start);
        CHECK(static_cast<int>(s.count()) == (n + 2) / 2);
        CHECK(oracle_infects(build_ggp(perm), s));
        ++built;
    }
    CHECK(built > 50);
}
