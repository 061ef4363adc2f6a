#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace lklab {

// Dynamic bit set over vertex indices [0, size). Backed by 64-bit words;
// all hot solver loops (candidate sets, adjacency rows) run on this.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((static_cast<size_t>(n) + 63) / 64, 0) {}

    int size() const { return n_; }

    bool test(int i) const
    {
        assert(i >= 0 && i < n_);
        return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i)
    {
        assert(i >= 0 && i < n_);
        w_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i)
    {
        assert(i >= 0 && i < n_);
        w_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    int count() const
    {
        int c = 0;
        for (uint64_t w : w_)
            c += std::popcount(w);
        return c;
    }
    bool any() const
    {
        for (uint64_t w : w_)
            if (w)
                return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o)
    {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o)
    {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            w_[i] &= ~o.w_[i];
        return *this;
    }

    bool intersects(const Bitset& o) const
    {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i])
                return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const
    {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }

    // Lowest set index, or -1 when empty.
    int first() const
    {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i])
                return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    template <class F> void for_each(F&& f) const
    {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                f(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    friend Bitset operator&(Bitset a, const Bitset& b)
    {
        a &= b;
        return a;
    }
    friend Bitset operator|(Bitset a, const Bitset& b)
    {
        a |= b;
        return a;
    }

    bool operator==(const Bitset&) const = default;
    // Word-wise order; used only to keep set-of-sets containers deterministic.
    auto operator<=>(const Bitset& o) const
    {
        if (auto c = n_ <=> o.n_; c != 0)
            return c;
        return w_ <=> o.w_;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace lklab
