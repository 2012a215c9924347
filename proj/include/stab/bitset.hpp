#pragma once

#include <cstdint>
#include <vector>

#if defined(__GNUC__) || defined(__clang__)
#define STAB_POPCOUNT64(x) __builtin_popcountll(x)
#define STAB_CTZ64(x) __builtin_ctzll(x)
#else
#include <bit>
#define STAB_POPCOUNT64(x) std::popcount(x)
#define STAB_CTZ64(x) std::countr_zero(x)
#endif

namespace stab {

// Fixed-universe dynamic bitset used for adjacency rows and vertex sets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void clear()
    {
        for (auto& x : w_)
            x = 0;
    }

    int count() const
    {
        int c = 0;
        for (uint64_t x : w_)
            c += STAB_POPCOUNT64(x);
        return c;
    }

    bool any() const
    {
        for (uint64_t x : w_)
            if (x)
                return true;
        return false;
    }

    bool none() const { return !any(); }

    // Lowest set bit, or -1 when empty.
    int first() const
    {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i])
                return int(i * 64 + STAB_CTZ64(w_[i]));
        return -1;
    }

    // Next set bit strictly after i, or -1.
    int next(int i) const
    {
        ++i;
        if (i >= n_)
            return -1;
        size_t word = size_t(i) >> 6;
        uint64_t x = w_[word] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (x)
                return int(word * 64 + STAB_CTZ64(x));
            if (++word >= w_.size())
                return -1;
            x = w_[word];
        }
    }

    bool is_subset_of(const Bitset& other) const
    {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~other.w_[i])
                return false;
        return true;
    }

    bool intersects(const Bitset& other) const
    {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & other.w_[i])
                return true;
        return false;
    }

    int intersection_count(const Bitset& other) const
    {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i)
            c += STAB_POPCOUNT64(w_[i] & other.w_[i]);
        return c;
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (size_t i = 0; i < w_.size(); ++i)
            w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& and_not(const Bitset& o)
    {
        for (size_t i = 0; i < w_.size(); ++i)
            w_[i] &= ~o.w_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    template <typename Fn> void for_each(Fn fn) const
    {
        for (size_t word = 0; word < w_.size(); ++word) {
            uint64_t x = w_[word];
            while (x) {
                int b = STAB_CTZ64(x);
                fn(int(word * 64 + b));
                x &= x - 1;
            }
        }
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace stab
