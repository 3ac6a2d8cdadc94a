#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace hamlink {

// Dynamic fixed-width bitset sized at construction. Vertex sets inside the
// solver are represented this way so that adjacency tests, intersections and
// component sweeps stay word-parallel.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : words_) w = 0; }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    bool none() const {
        for (auto w : words_) if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    // First set bit at position >= from, or -1.
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        int wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + __builtin_ctzll(w);
            if (++wi >= (int)words_.size()) return -1;
            w = words_[wi];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this \ o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = next(0); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(nbits_);
        for (auto w : words_) h = h * 1000003u ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    void trim() {
        int r = nbits_ & 63;
        if (r && !words_.empty()) words_.back() &= (std::uint64_t{1} << r) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace hamlink
