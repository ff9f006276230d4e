#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace zr {

// Subset of a universe of `size` elements, packed into 64-bit words.
// Elements are 0-based internally; I/O layers shift to 1-based naming.
// Bits above the universe stay zero, so whole-word operations are exact.
class BitSet {
  public:
    BitSet() : n_(0) {}
    explicit BitSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    bool intersects(const BitSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int intersection_count(const BitSet& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool is_subset_of(const BitSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    BitSet& operator|=(const BitSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    BitSet& operator&=(const BitSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
    friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }

    // Complement within the universe.
    BitSet complement() const {
        BitSet r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool operator==(const BitSet& o) const { return n_ == o.n_ && w_ == o.w_; }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                out.push_back(int(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    void for_each(auto&& f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                f(int(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    static BitSet from_mask(int n, uint64_t mask) {
        BitSet b(n);
        if (!b.w_.empty()) b.w_[0] = mask;
        b.trim();
        return b;
    }

    uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

    uint64_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ uint64_t(n_);
        for (uint64_t w : w_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

  private:
    void trim() {
        if (n_ % 64 && !w_.empty()) w_.back() &= (uint64_t(1) << (n_ % 64)) - 1;
    }

    int n_;
    std::vector<uint64_t> w_;
};

} // namespace zr
