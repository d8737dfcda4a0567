#pragma once

#include <optional>
#include <vector>

#include "p3hull/graph.hpp"
#include "p3hull/permutation.hpp"
#include "p3hull/vertex_set.hpp"

namespace p3hull {

// Closed-form values and explicit infecting sets for the generalized
// Petersen family and its variants. All arithmetic is exact integer
// arithmetic. Every constructed set is checked with the closure before it is
// returned; a set that fails raises ConstructionFailed.

// ceil((n+1)/2).
int predicted_hull_number_gp(int n, int k);

// With c = gcd(n,k) and l = n/c: v_{j+ik} for odd i, plus u_0 when l is
// even, or u_{c-1} and the even-indexed u_j (j < c) when l is odd.
VertexSet canonical_infecting_set(int n, int k);

// Infecting time of canonical_infecting_set: n/2 if l is even, else
// (n-c)/2 + 1.
int predicted_infecting_time(int n, int k);

// Maximum tree diameters realised by minimum hull sets of G(n,1):
// {n, n+2, ..., n + 2*floor((n-3)/4)} for odd n, and
// {d : floor(n/2) <= d <= 3n/2 - 2, d != n-1} for even n.
std::vector<int> predicted_diameter_set_gn1(int n);

// n + 1.
int predicted_hull_surgery(int n, int k);

// An infecting set of size n+1 on build_surgery(n,k).
VertexSet surgery_infecting_set(int n, int k);

struct GGPBounds {
    int n = 0;
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;
    int odd_cycle_count = 0;
};

// lower = ceil((n+1)/2); with m odd cycles, exact = (n+2)/2 for m = 0 or 2,
// (n+1)/2 for m = 1; otherwise upper = (n+m)/2.
GGPBounds ggp_hull_bounds(const Permutation& perm);

// Smallest j such that u_j, ..., u_{j+m-1} (cyclically, m = number of odd
// cycles) attach to m pairwise distinct odd cycles. 0 when m = 0.
std::optional<int> ggp_path_condition(const Permutation& perm);

// Alternate vertices of every interior cycle (odd cycles anchored at the
// path), plus exterior vertices on the path in the pattern of the canonical
// G(n,k) set. Throws PathConditionUnmet if start is not a valid path start.
VertexSet ggp_infecting_set(const Permutation& perm, int start);

}  // namespace p3hull
