#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "z2k/errors.hpp"

namespace z2k {

inline constexpr int max_rank = 32;

// A k-bit vector over GF(2), for 1 <= k <= 32. One representation serves both
// group elements (column vectors) and linear functionals (row vectors); which
// role a value plays is decided by how it is used.
//
// Coordinate i (1-based) sits at bit (k - i) of the word, so the word value
// equals the coordinate string "b1 b2 ... bk" read as a binary number. Word
// comparison is therefore the lexicographic comparison of the text form.
class BitVector {
  public:
    BitVector() = default; // rank-0 sentinel, not usable in arithmetic

    BitVector(int rank, std::uint32_t word) : rank_(rank), word_(word) {
        if (rank < 1 || rank > max_rank)
            throw input_error("BitVector rank must be in [1, 32], got " + std::to_string(rank));
        if (rank < 32 && (word >> rank) != 0)
            throw input_error("BitVector word has bits beyond rank " + std::to_string(rank));
    }

    static BitVector zero(int rank) { return {rank, 0}; }

    // Coordinate functional/vector with a single 1 at 1-based position i.
    static BitVector unit(int rank, int i) {
        if (i < 1 || i > rank)
            throw input_error("BitVector coordinate out of range");
        return {rank, std::uint32_t{1} << (rank - i)};
    }

    static BitVector from_string(std::string_view text) {
        const int k = static_cast<int>(text.size());
        if (k < 1 || k > max_rank)
            throw input_error("bit string length must be in [1, 32]");
        std::uint32_t word = 0;
        for (char c : text) {
            if (c != '0' && c != '1')
                throw input_error("bit string may contain only '0' and '1'");
            word = (word << 1) | static_cast<std::uint32_t>(c - '0');
        }
        return {k, word};
    }

    int rank() const { return rank_; }
    std::uint32_t word() const { return word_; }
    bool is_zero() const { return word_ == 0; }

    // 1-based coordinate access.
    bool bit(int i) const { return (word_ >> (rank_ - i)) & 1u; }

    std::string str() const {
        std::string s(static_cast<std::size_t>(rank_), '0');
        for (int i = 0; i < rank_; ++i)
            if ((word_ >> (rank_ - 1 - i)) & 1u)
                s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    BitVector operator+(BitVector other) const {
        require_same_rank(other);
        return {rank_, word_ ^ other.word_};
    }
    BitVector &operator+=(BitVector other) {
        *this = *this + other;
        return *this;
    }

    // Evaluation pairing <f, g> = sum_i f_i g_i over GF(2).
    friend bool pairing(BitVector f, BitVector g) {
        f.require_same_rank(g);
        return std::popcount(f.word_ & g.word_) & 1;
    }

    // Orders by (rank, word); equal rank makes this the lexicographic order on bit strings.
    auto operator<=>(const BitVector &) const = default;

  private:
    void require_same_rank(BitVector other) const {
        if (rank_ != other.rank_)
            throw input_error("rank mismatch: " + std::to_string(rank_) + " vs " +
                              std::to_string(other.rank_));
    }

    int rank_ = 0;
    std::uint32_t word_ = 0;
};

// Role alias: a linear function on (Z_2)^k, i.e. a row vector.
using Functional = BitVector;

} // namespace z2k
