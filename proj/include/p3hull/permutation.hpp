#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace p3hull {

// Fixed-point-free permutation of {0..n-1} whose disjoint cycles all have
// length >= 3. Cycles are normalized to start at their minimum element and
// are listed by minimum element ascending.
class Permutation {
public:
    // Throws InvalidPermutation unless image is a bijection satisfying the
    // cycle constraints.
    static Permutation from_image(std::vector<int> image);
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    // sigma(i) = i + k mod n, the interior rule of G(n,k).
    static Permutation rotation(int n, int k);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& image() const { return image_; }
    const std::vector<std::vector<int>>& cycles() const { return cycles_; }

    // Index into cycles() of the cycle containing i.
    int cycle_of(int i) const { return cycle_index_[static_cast<std::size_t>(i)]; }
    int odd_cycle_count() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.image_ == b.image_; }

private:
    Permutation() = default;

    std::vector<int> image_;
    std::vector<std::vector<int>> cycles_;
    std::vector<int> cycle_index_;
};

// Whitespace-insensitive cycle notation, e.g. "(0 1 2)(3 4 5)". Commas are
// accepted as separators inside a cycle.
Permutation parse_permutation(std::string_view text, int n);

// Inverse of parse_permutation: "(0 1 2)(3 4 5)".
std::string render(const Permutation& perm);

}  // namespace p3hull
