#pragma once

#include <array>
#include <cstdint>

namespace p3hull {

// k-subsets of {0..n-1} (n <= 64) in lexicographic order of their ascending
// index tuples, with ranking in the combinatorial number system.
class Combinations {
public:
    static constexpr int kMax = 64;

    // C(n, k); 0 when k > n. Exact for every n <= 64 used here (C(64,32) < 2^63).
    static std::uint64_t binomial(int n, int k);

    // Positions the cursor on the combination of the given rank.
    Combinations(int n, int k, std::uint64_t rank);

    std::uint64_t mask() const { return mask_; }
    const int* indices() const { return idx_.data(); }

    // Advances to the next combination; false after the last one.
    bool next();

private:
    int n_;
    int k_;
    std::array<int, kMax> idx_{};
    std::uint64_t mask_ = 0;
};

}  // namespace p3hull
