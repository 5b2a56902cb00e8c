#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

namespace sge {

// Dynamic bitset sized once, used for edge-cover state. Word-level ops only,
// no bounds checks beyond construction.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_(static_cast<size_t>((nbits + 63) / 64), 0) {}

    void set(int i) { words_[static_cast<size_t>(i >> 6)] |= 1ull << (i & 63); }
    void reset(int i) { words_[static_cast<size_t>(i >> 6)] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (words_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1ull; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool all_of(int n) const { return count() == n; }

    int size_bits() const { return nbits_; }

    bool operator==(const Bitset&) const = default;

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

inline uint64_t saturating_add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s < a ? std::numeric_limits<uint64_t>::max() : s;
}

inline uint64_t saturating_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<uint64_t>::max() / b) return std::numeric_limits<uint64_t>::max();
    return a * b;
}

// Fixed-size subsets of {0..n-1} in colexicographic order: {0,1,2}, {0,1,3},
// {0,2,3}, {1,2,3}, {0,1,4}, ... Order is total: A before B iff the largest
// element where they differ belongs to B.
class ColexCombinations {
public:
    ColexCombinations(int n, int r) : n_(n), r_(r) {
        done_ = r > n || r < 0;
        current_.resize(static_cast<size_t>(r > 0 ? r : 0));
        for (int i = 0; i < r; ++i) current_[static_cast<size_t>(i)] = i;
    }

    bool done() const { return done_; }
    const std::vector<int>& current() const { return current_; }

    void advance() {
        if (done_) return;
        int r = r_;
        if (r == 0) {  // single empty subset
            done_ = true;
            return;
        }
        int i = 0;
        while (i + 1 < r && current_[static_cast<size_t>(i)] + 1 == current_[static_cast<size_t>(i + 1)]) ++i;
        if (current_[static_cast<size_t>(i)] + 1 >= n_ && i + 1 == r) {
            done_ = true;
            return;
        }
        ++current_[static_cast<size_t>(i)];
        for (int j = 0; j < i; ++j) current_[static_cast<size_t>(j)] = j;
    }

private:
    int n_;
    int r_;
    bool done_ = false;
    std::vector<int> current_;
};

}  // namespace sge
