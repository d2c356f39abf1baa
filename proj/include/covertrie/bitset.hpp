#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace covertrie {

/// Dynamically sized bitset over state ids. Word-packed so that
/// per-node role sets stay a handful of machine words.
class StateBitset {
public:
    StateBitset() = default;

    explicit StateBitset(std::uint32_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::uint32_t size() const { return nbits_; }

    void set(std::uint32_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::uint32_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::uint32_t count() const {
        std::uint32_t n = 0;
        for (auto w : words_) n += static_cast<std::uint32_t>(std::popcount(w));
        return n;
    }

    bool intersects(const StateBitset& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    bool is_subset_of(const StateBitset& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    /// Calls f(i) for every set bit, ascending.
    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                std::uint32_t bit = static_cast<std::uint32_t>(std::countr_zero(w));
                f(static_cast<std::uint32_t>(k * 64 + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_vector() const {
        std::vector<std::uint32_t> v;
        for_each_set([&](std::uint32_t i) { v.push_back(i); });
        return v;
    }

    bool operator==(const StateBitset&) const = default;

private:
    void trim() {
        if (nbits_ % 64 != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
        }
    }

    std::uint32_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace covertrie
