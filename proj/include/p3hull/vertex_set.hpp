#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace p3hull {

using Vertex = int;

// Dense bitset over the vertex indices 0..size()-1.
//
// Binary operators require both operands to have the same universe size.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet full(std::size_t universe);
    static VertexSet from_indices(std::size_t universe, std::span<const Vertex> members);
    // Bit i of mask is vertex i; universe must be <= 64.
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

    std::size_t universe() const { return universe_; }
    std::size_t count() const;
    bool empty() const { return count() == 0; }

    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);

    bool is_subset_of(const VertexSet& other) const;
    VertexSet complement() const;

    std::vector<Vertex> to_indices() const;
    // Low 64 bits; only meaningful when universe <= 64.
    std::uint64_t to_mask() const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = __builtin_ctzll(bits);
                f(static_cast<Vertex>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

private:
    void check_same_universe(const VertexSet& other) const;
    void check_member(Vertex v) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

// Lexicographic comparison of the ascending index lists.
bool lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace p3hull
