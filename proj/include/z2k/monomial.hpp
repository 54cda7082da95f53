#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "z2k/bitvec.hpp"
#include "z2k/errors.hpp"

namespace z2k {

// A product of nonzero functionals with positive exponents; the unit monomial
// has an empty factor list. Factors are kept as a sorted association list
// keyed by the functional's word value, which doubles as the canonical
// factor order of the text form.
class Monomial {
  public:
    using Entry = std::pair<Functional, std::uint32_t>;

    // The unit monomial 1 at the given rank.
    explicit Monomial(int rank) : rank_(check_rank(rank)) {}

    static Monomial unit(int rank) { return Monomial(rank); }

    // Product of exponent-1 factors (duplicates merge).
    static Monomial from_factors(std::span<const Functional> factors, int rank) {
        Monomial m(rank);
        for (Functional f : factors)
            m.multiply_by(f, 1);
        return m;
    }

    int rank() const { return rank_; }
    bool is_unit() const { return entries_.empty(); }
    const std::vector<Entry> &entries() const { return entries_; }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (const auto &[f, e] : entries_)
            d += e;
        return d;
    }

    // Fac(m): the set of distinct factors, ascending.
    std::vector<Functional> factors() const {
        std::vector<Functional> out;
        out.reserve(entries_.size());
        for (const auto &[f, e] : entries_)
            out.push_back(f);
        return out;
    }

    std::size_t factor_count() const { return entries_.size(); }

    std::uint32_t exponent_of(Functional f) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), f,
                                   [](const Entry &a, Functional b) { return a.first < b; });
        return (it != entries_.end() && it->first == f) ? it->second : 0;
    }

    // Multiply in a single factor with the given exponent.
    void multiply_by(Functional f, std::uint32_t exponent) {
        if (exponent == 0)
            return;
        if (f.rank() != rank_)
            throw input_error("Monomial: factor rank mismatch");
        if (f.is_zero())
            throw input_error("Monomial: the zero functional is not a variable");
        auto it = std::lower_bound(entries_.begin(), entries_.end(), f,
                                   [](const Entry &a, Functional b) { return a.first < b; });
        if (it != entries_.end() && it->first == f)
            it->second = checked_add(it->second, exponent);
        else
            entries_.insert(it, {f, exponent});
    }

    Monomial operator*(const Monomial &other) const {
        if (rank_ != other.rank_)
            throw input_error("Monomial: rank mismatch");
        Monomial out = *this;
        for (const auto &[f, e] : other.entries_)
            out.multiply_by(f, e);
        return out;
    }

    // m^e: scales every exponent, checked.
    Monomial pow(std::uint32_t e) const {
        Monomial out(rank_);
        if (e == 0)
            return out;
        out.entries_.reserve(entries_.size());
        for (const auto &[f, exp] : entries_)
            out.entries_.push_back({f, checked_mul(exp, e)});
        return out;
    }

    bool operator==(const Monomial &other) const {
        return rank_ == other.rank_ && entries_ == other.entries_;
    }

    // Canonical monomial order: total degree, then the expanded factor
    // sequence compared lexicographically. On the association lists this
    // reads: first differing key decides ascending; at an equal key the
    // larger exponent sorts first (more copies of the smaller factor).
    std::strong_ordering operator<=>(const Monomial &other) const {
        if (auto c = rank_ <=> other.rank_; c != 0)
            return c;
        if (auto c = degree() <=> other.degree(); c != 0)
            return c;
        auto a = entries_.begin(), b = other.entries_.begin();
        for (; a != entries_.end() && b != other.entries_.end(); ++a, ++b) {
            if (auto c = a->first <=> b->first; c != 0)
                return c;
            if (auto c = b->second <=> a->second; c != 0)
                return c;
        }
        return std::strong_ordering::equal; // equal degree forbids a strict prefix
    }

  private:
    static int check_rank(int rank) {
        if (rank < 1 || rank > max_rank)
            throw input_error("Monomial rank must be in [1, 32], got " + std::to_string(rank));
        return rank;
    }

    static std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
        const std::uint64_t s = std::uint64_t{a} + b;
        if (s > 0xFFFFFFFFull)
            throw input_error("Monomial: exponent overflow");
        return static_cast<std::uint32_t>(s);
    }

    static std::uint32_t checked_mul(std::uint32_t a, std::uint32_t b) {
        const std::uint64_t p = std::uint64_t{a} * b;
        if (p > 0xFFFFFFFFull)
            throw input_error("Monomial: exponent overflow");
        return static_cast<std::uint32_t>(p);
    }

    int rank_;
    std::vector<Entry> entries_;
};

} // namespace z2k
