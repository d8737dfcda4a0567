#include "p3hull/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "p3hull/error.hpp"

namespace p3hull {

namespace {

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

Permutation Permutation::from_image(std::vector<int> image) {
    const int n = static_cast<int>(image.size());
    if (n == 0) throw InvalidPermutation("permutation is empty");

    std::vector<char> hit(image.size(), 0);
    for (int i = 0; i < n; ++i) {
        const int j = image[static_cast<std::size_t>(i)];
        if (j < 0 || j >= n)
            throw InvalidPermutation("image of " + std::to_string(i) + " is out of range: " + std::to_string(j));
        if (hit[static_cast<std::size_t>(j)])
            throw InvalidPermutation("not a bijection: " + std::to_string(j) + " is hit twice");
        hit[static_cast<std::size_t>(j)] = 1;
        if (j == i) throw InvalidPermutation("fixed point at " + std::to_string(i));
    }

    Permutation p;
    p.image_ = std::move(image);
    p.cycle_index_.assign(static_cast<std::size_t>(n), -1);
    // Scanning i ascending makes each cycle start at its minimum and lists
    // cycles by minimum ascending.
    for (int start = 0; start < n; ++start) {
        if (p.cycle_index_[static_cast<std::size_t>(start)] >= 0) continue;
        std::vector<int> cycle;
        for (int i = start; p.cycle_index_[static_cast<std::size_t>(i)] < 0; i = p(i)) {
            p.cycle_index_[static_cast<std::size_t>(i)] = static_cast<int>(p.cycles_.size());
            cycle.push_back(i);
        }
        if (cycle.size() < 3)
            throw InvalidPermutation("cycle (" + join(cycle) + ") has length " + std::to_string(cycle.size()) +
                                     " < 3");
        p.cycles_.push_back(std::move(cycle));
    }
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    if (n <= 0) throw InvalidPermutation("permutation size must be positive");
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    for (const auto& cycle : cycles) {
        if (cycle.size() < 3)
            throw InvalidPermutation("cycle (" + join(cycle) + ") has length " + std::to_string(cycle.size()) +
                                     " < 3");
        for (std::size_t t = 0; t < cycle.size(); ++t) {
            const int i = cycle[t];
            if (i < 0 || i >= n)
                throw InvalidPermutation("index " + std::to_string(i) + " out of range for n = " +
                                         std::to_string(n));
            if (image[static_cast<std::size_t>(i)] >= 0)
                throw InvalidPermutation("index " + std::to_string(i) + " appears more than once");
            image[static_cast<std::size_t>(i)] = cycle[(t + 1) % cycle.size()];
        }
    }
    for (int i = 0; i < n; ++i)
        if (image[static_cast<std::size_t>(i)] < 0)
            throw InvalidPermutation("index " + std::to_string(i) + " is not covered (fixed point)");
    return from_image(std::move(image));
}

Permutation Permutation::rotation(int n, int k) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = ((i + k) % n + n) % n;
    return from_image(std::move(image));
}

int Permutation::odd_cycle_count() const {
    return static_cast<int>(
        std::count_if(cycles_.begin(), cycles_.end(), [](const auto& c) { return c.size() % 2 == 1; }));
}

Permutation parse_permutation(std::string_view text, int n) {
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError("cycle notation, offset " + std::to_string(pos) + ": " + what);
    };

    skip_space();
    if (pos == text.size()) throw fail("empty input");
    while (pos < text.size()) {
        if (text[pos] != '(') throw fail("expected '('");
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            skip_space();
            if (pos == text.size()) throw fail("unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] == ',') {
                if (cycle.empty()) throw fail("unexpected ','");
                ++pos;
                skip_space();
            }
            int value = 0;
            const auto* first = text.data() + pos;
            const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
            if (ec != std::errc{} || ptr == first) throw fail("expected a non-negative integer");
            if (value < 0) throw fail("negative index");
            pos += static_cast<std::size_t>(ptr - first);
            cycle.push_back(value);
        }
        if (cycle.empty()) throw fail("empty cycle");
        cycles.push_back(std::move(cycle));
        skip_space();
    }
    return Permutation::from_cycles(n, cycles);
}

std::string render(const Permutation& perm) {
    std::string out;
    for (const auto& cycle : perm.cycles()) out += "(" + join(cycle) + ")";
    return out;
}

}  // namespace p3hull
