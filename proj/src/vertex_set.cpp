#include "p3hull/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace p3hull {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

VertexSet VertexSet::from_indices(std::size_t universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
    if (universe < 64 && (mask >> universe) != 0)
        throw std::out_of_range("VertexSet::from_mask: mask has bits outside the universe");
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
}

std::size_t VertexSet::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::contains(Vertex v) const {
    check_member(v);
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
    check_member(v);
    words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
    check_member(v);
    words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

std::vector<Vertex> VertexSet::to_indices() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::uint64_t VertexSet::to_mask() const { return words_.empty() ? 0 : words_[0]; }

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw std::invalid_argument("VertexSet: universe mismatch (" + std::to_string(universe_) + " vs " +
                                    std::to_string(other.universe_) + ")");
}

void VertexSet::check_member(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_)
        throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe_));
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    const auto ia = a.to_indices();
    const auto ib = b.to_indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace p3hull
