#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigidsep {

/** Fixed-length dynamic bit vector with value semantics.
 *
 * Trailing bits of the last word are kept zero, so equality and hashing
 * work directly on the word array.
 */
class BitVec {
public:
    BitVec() = default;

    explicit BitVec(int size) : size_(size), words_((size + 63) / 64, 0) {
        if (size < 0) throw std::invalid_argument("BitVec: negative size");
    }

    int size() const { return size_; }

    bool test(int i) const {
        check(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i, bool v = true) {
        check(i);
        if (v)
            words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    /** All bits flipped (within size). */
    BitVec complemented() const {
        BitVec r(size_);
        for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = ~words_[w];
        r.trim();
        return r;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    /** Pointwise <= in the product order. */
    bool subset_of(const BitVec& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) = default;

    /** Lexicographic from bit 0, for deterministic ordering. */
    friend bool operator<(const BitVec& a, const BitVec& b) {
        if (a.size_ != b.size_) return a.size_ < b.size_;
        for (std::size_t w = 0; w < a.words_.size(); ++w) {
            // reverse bits so bit 0 is most significant in the comparison
            auto x = bit_reverse(a.words_[w]), y = bit_reverse(b.words_[w]);
            if (x != y) return x < y;
        }
        return false;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(size_));
    }

    std::string to_string() const {
        std::string s;
        s.reserve(size_);
        for (int i = 0; i < size_; ++i) s.push_back(test(i) ? '1' : '0');
        return s;
    }

private:
    void check(int i) const {
        if (i < 0 || i >= size_) throw std::out_of_range("BitVec: index out of range");
    }

    void trim() {
        if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    static std::uint64_t bit_reverse(std::uint64_t v) {
        v = ((v >> 1) & 0x5555555555555555ull) | ((v & 0x5555555555555555ull) << 1);
        v = ((v >> 2) & 0x3333333333333333ull) | ((v & 0x3333333333333333ull) << 2);
        v = ((v >> 4) & 0x0F0F0F0F0F0F0F0Full) | ((v & 0x0F0F0F0F0F0F0F0Full) << 4);
        v = ((v >> 8) & 0x00FF00FF00FF00FFull) | ((v & 0x00FF00FF00FF00FFull) << 8);
        v = ((v >> 16) & 0x0000FFFF0000FFFFull) | ((v & 0x0000FFFF0000FFFFull) << 16);
        return (v >> 32) | (v << 32);
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& b) const { return b.hash(); }
};

}  // namespace rigidsep
