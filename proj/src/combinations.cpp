#include "p3hull/combinations.hpp"

#include <stdexcept>

namespace p3hull {

namespace {

struct BinomialTable {
    std::array<std::array<std::uint64_t, Combinations::kMax + 1>, Combinations::kMax + 1> c{};

    BinomialTable() {
        for (int n = 0; n <= Combinations::kMax; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const BinomialTable& table() {
    static const BinomialTable t;
    return t;
}

}  // namespace

std::uint64_t Combinations::binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n > kMax) throw std::out_of_range("binomial: n exceeds 64");
    return table().c[n][k];
}

Combinations::Combinations(int n, int k, std::uint64_t rank) : n_(n), k_(k) {
    if (n < 0 || n > kMax || k < 0 || k > n) throw std::out_of_range("Combinations: bad (n, k)");
    if (rank >= binomial(n, k)) throw std::out_of_range("Combinations: rank out of range");
    // Walk the lexicographic tree: at each slot, skip whole blocks of
    // combinations that start with a smaller element.
    int candidate = 0;
    for (int slot = 0; slot < k; ++slot) {
        for (;;) {
            const std::uint64_t block = binomial(n - candidate - 1, k - slot - 1);
            if (rank < block) break;
            rank -= block;
            ++candidate;
        }
        idx_[slot] = candidate;
        mask_ |= std::uint64_t{1} << candidate;
        ++candidate;
    }
}

bool Combinations::next() {
    int i = k_ - 1;
    while (i >= 0 && idx_[i] == n_ - k_ + i) --i;
    if (i < 0) return false;
    ++idx_[i];
    for (int j = i + 1; j < k_; ++j) idx_[j] = idx_[j - 1] + 1;
    mask_ = 0;
    for (int j = 0; j < k_; ++j) mask_ |= std::uint64_t{1} << idx_[j];
    return true;
}

}  // namespace p3hull
