#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "z2k/bitvec.hpp"
#include "z2k/errors.hpp"

namespace z2k {

// A linear subspace of (Z_2)^k, stored as a reduced row echelon basis.
// Rows are ordered by strictly increasing pivot column (equivalently,
// strictly decreasing word value), each pivot column is zero in every
// other row, and no row is zero. Two subspaces are equal iff their
// echelon bases are identical, so equality is structural.
class Subspace {
  public:
    // The zero subspace of the given ambient rank.
    explicit Subspace(int rank) : rank_(check_rank(rank)) {}

    static Subspace zero(int rank) { return Subspace(rank); }

    static Subspace full(int rank) {
        Subspace s(rank);
        for (int i = 1; i <= rank; ++i)
            s.basis_.push_back(BitVector::unit(rank, i));
        return s;
    }

    static Subspace span(std::span<const BitVector> vectors, int rank) {
        Subspace s(rank);
        for (BitVector v : vectors) {
            if (v.rank() != rank)
                throw input_error("span: vector rank " + std::to_string(v.rank()) +
                                  " does not match ambient rank " + std::to_string(rank));
            s.insert(v);
        }
        return s;
    }

    static Subspace span(std::initializer_list<BitVector> vectors, int rank) {
        return span(std::span<const BitVector>(vectors.begin(), vectors.size()), rank);
    }

    int rank() const { return rank_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BitVector> &basis() const { return basis_; }

    // Canonical representative of v modulo this subspace.
    BitVector reduce(BitVector v) const {
        if (v.rank() != rank_)
            throw input_error("reduce: rank mismatch");
        for (BitVector row : basis_)
            if (v.word() & pivot_mask(row))
                v += row;
        return v;
    }

    bool contains(BitVector v) const { return reduce(v).is_zero(); }

    // {w : <w, v> = 0 for all v in the subspace}; dim = rank - dim(this).
    Subspace annihilator() const {
        std::vector<BitVector> rows;
        const std::uint32_t pivots = pivot_columns();
        for (int col = 1; col <= rank_; ++col) {
            const std::uint32_t cbit = column_bit(col);
            if (pivots & cbit)
                continue;
            // Unit at the free column plus, at each pivot column, that row's entry there.
            std::uint32_t w = cbit;
            for (BitVector row : basis_)
                if (row.word() & cbit)
                    w |= pivot_mask(row);
            rows.push_back(BitVector(rank_, w));
        }
        return span(rows, rank_);
    }

    // The canonical complement: span of the standard basis vectors at the
    // non-pivot columns. Deterministic in the input subspace.
    Subspace complement() const {
        Subspace s(rank_);
        const std::uint32_t pivots = pivot_columns();
        for (int col = 1; col <= rank_; ++col)
            if (!(pivots & column_bit(col)))
                s.basis_.push_back(BitVector::unit(rank_, col));
        return s;
    }

    // Bit mask of pivot columns (in word coordinates).
    std::uint32_t pivot_columns() const {
        std::uint32_t m = 0;
        for (BitVector row : basis_)
            m |= pivot_mask(row);
        return m;
    }

    bool operator==(const Subspace &) const = default;

    // (rank, then row sequence); rows of equal rank compare as bit strings,
    // so this is the lexicographic order on echelon bases.
    auto operator<=>(const Subspace &) const = default;

  private:
    static int check_rank(int rank) {
        if (rank < 1 || rank > max_rank)
            throw input_error("Subspace rank must be in [1, 32], got " + std::to_string(rank));
        return rank;
    }

    static std::uint32_t pivot_mask(BitVector row) {
        return std::uint32_t{1} << (31 - std::countl_zero(row.word()));
    }

    std::uint32_t column_bit(int col) const { return std::uint32_t{1} << (rank_ - col); }

    // Gaussian elimination step keeping the basis reduced.
    void insert(BitVector v) {
        for (BitVector row : basis_)
            if (v.word() & pivot_mask(row))
                v += row;
        if (v.is_zero())
            return;
        for (BitVector &row : basis_)
            if (row.word() & pivot_mask(v))
                row += v;
        basis_.push_back(v);
        std::sort(basis_.begin(), basis_.end(),
                  [](BitVector a, BitVector b) { return a.word() > b.word(); });
    }

    int rank_ = 0;
    std::vector<BitVector> basis_;
};

// Every d-dimensional subspace of (Z_2)^k exactly once, in the lexicographic
// order of echelon bases read row-major. The list length is the Gaussian
// binomial (k choose d)_2.
inline std::vector<Subspace> enumerate_subspaces(int rank, int dim) {
    if (rank < 1 || rank > max_rank)
        throw input_error("enumerate_subspaces: rank must be in [1, 32]");
    if (dim < 0 || dim > rank)
        throw input_error("enumerate_subspaces: dimension must be in [0, rank]");

    std::vector<Subspace> out;
    if (dim == 0) {
        out.push_back(Subspace::zero(rank));
        return out;
    }

    constexpr std::size_t enumeration_cap = std::size_t{1} << 22;

    // Pivot columns c_1 < ... < c_d; the free entries of row i range over the
    // non-pivot columns right of c_i.
    std::vector<int> pivots(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
        pivots[static_cast<std::size_t>(i)] = i + 1;

    auto emit_for_pivots = [&]() {
        std::vector<int> free_cols; // (row, column) pairs flattened row-major
        std::vector<int> free_row;
        for (int i = 0; i < dim; ++i)
            for (int col = pivots[static_cast<std::size_t>(i)] + 1; col <= rank; ++col)
                if (std::find(pivots.begin(), pivots.end(), col) == pivots.end()) {
                    free_row.push_back(i);
                    free_cols.push_back(col);
                }
        const std::size_t nfree = free_cols.size();
        if (nfree >= 23) // 2^23 assignments for one pivot set already exceeds the cap
            throw input_error("enumerate_subspaces: result too large to materialize");
        std::vector<BitVector> rows(static_cast<std::size_t>(dim), BitVector{});
        for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << nfree); ++assign) {
            std::vector<std::uint32_t> words(static_cast<std::size_t>(dim), 0);
            for (int i = 0; i < dim; ++i)
                words[static_cast<std::size_t>(i)] =
                    std::uint32_t{1} << (rank - pivots[static_cast<std::size_t>(i)]);
            for (std::size_t f = 0; f < nfree; ++f)
                if ((assign >> f) & 1u)
                    words[static_cast<std::size_t>(free_row[f])] |=
                        std::uint32_t{1} << (rank - free_cols[f]);
            for (int i = 0; i < dim; ++i)
                rows[static_cast<std::size_t>(i)] = BitVector(rank, words[static_cast<std::size_t>(i)]);
            out.push_back(Subspace::span(rows, rank));
            if (out.size() > enumeration_cap)
                throw input_error("enumerate_subspaces: result too large to materialize");
        }
    };

    // Odometer over pivot column combinations.
    while (true) {
        emit_for_pivots();
        int i = dim - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == rank - (dim - 1 - i))
            --i;
        if (i < 0)
            break;
        ++pivots[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < dim; ++j)
            pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
    }

    std::sort(out.begin(), out.end());
    return out;
}

} // namespace z2k
