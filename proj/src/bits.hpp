#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace tpk {

/// Fixed-width bitset sized at runtime. Binary operations require equal widths.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    std::size_t width() const noexcept { return width_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    Bits &operator|=(const Bits &o) {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] |= o.words_[w];
        }
        return *this;
    }
    Bits &operator&=(const Bits &o) {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] &= o.words_[w];
        }
        return *this;
    }
    /// this \ o
    Bits &operator-=(const Bits &o) {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] &= ~o.words_[w];
        }
        return *this;
    }
    friend Bits operator|(Bits a, const Bits &b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits &b) { return a &= b; }
    friend Bits operator-(Bits a, const Bits &b) { return a -= b; }

    bool any() const {
        for (auto w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    bool none() const { return !any(); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    bool is_subset_of(const Bits &o) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] & ~o.words_[w]) {
                return false;
            }
        }
        return true;
    }
    bool is_proper_subset_of(const Bits &o) const { return is_subset_of(o) && *this != o; }
    bool intersects(const Bits &o) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] & o.words_[w]) {
                return true;
            }
        }
        return false;
    }
    /// (this \ mask) == other
    bool equals_outside(const Bits &mask, const Bits &other) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if ((words_[w] & ~mask.words_[w]) != other.words_[w]) {
                return false;
            }
        }
        return true;
    }

    template <typename F>
    void for_each(F &&f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                f(w * 64 + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
    }

    /// Stops at the first member for which f returns false.
    template <typename F>
    bool all_of(F &&f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                if (!f(w * 64 + static_cast<std::size_t>(b))) {
                    return false;
                }
                bits &= bits - 1;
            }
        }
        return true;
    }

    std::size_t hash() const {
        std::size_t h = width_;
        for (auto w : words_) {
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    friend bool operator==(const Bits &, const Bits &) = default;

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsHash {
    std::size_t operator()(const Bits &b) const { return b.hash(); }
};

}  // namespace tpk
