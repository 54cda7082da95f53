#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "z2k/errors.hpp"
#include "z2k/monomial.hpp"

namespace z2k {

// An element of the representation algebra R_*((Z_2)^k): a GF(2) sum of
// monomials, stored as a sorted, duplicate-free term vector. The empty
// term set is the zero polynomial.
class Poly {
  public:
    explicit Poly(int rank) : rank_(check_rank(rank)) {}

    static Poly zero(int rank) { return Poly(rank); }

    static Poly one(int rank) {
        Poly p(rank);
        p.terms_.push_back(Monomial::unit(rank));
        return p;
    }

    static Poly monomial(Monomial m) {
        Poly p(m.rank());
        p.terms_.push_back(std::move(m));
        return p;
    }

    // GF(2)-reduces an arbitrary term list: sorts and cancels pairs.
    static Poly from_terms(std::vector<Monomial> terms, int rank) {
        for (const Monomial &m : terms)
            if (m.rank() != rank)
                throw input_error("Poly: term rank mismatch");
        std::sort(terms.begin(), terms.end());
        Poly p(rank);
        for (std::size_t i = 0; i < terms.size();) {
            std::size_t j = i;
            while (j < terms.size() && terms[j] == terms[i])
                ++j;
            if ((j - i) & 1)
                p.terms_.push_back(std::move(terms[i]));
            i = j;
        }
        return p;
    }

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Monomial> &terms() const { return terms_; }

    bool contains(const Monomial &m) const {
        return std::binary_search(terms_.begin(), terms_.end(), m);
    }

    // Max term degree; degree(0) is defined as 0.
    std::uint64_t degree() const { return terms_.empty() ? 0 : terms_.back().degree(); }

    bool is_homogeneous() const {
        for (const Monomial &m : terms_)
            if (m.degree() != terms_.front().degree())
                return false;
        return true;
    }

    // Symmetric difference of term sets.
    Poly operator+(const Poly &other) const {
        require_same_rank(other);
        Poly out(rank_);
        out.terms_.reserve(terms_.size() + other.terms_.size());
        auto a = terms_.begin(), b = other.terms_.begin();
        while (a != terms_.end() && b != other.terms_.end()) {
            if (*a == *b) {
                ++a;
                ++b;
            } else if (*a < *b) {
                out.terms_.push_back(*a++);
            } else {
                out.terms_.push_back(*b++);
            }
        }
        out.terms_.insert(out.terms_.end(), a, terms_.end());
        out.terms_.insert(out.terms_.end(), b, other.terms_.end());
        return out;
    }
    Poly &operator+=(const Poly &other) { return *this = *this + other; }

    Poly operator*(const Poly &other) const {
        require_same_rank(other);
        std::vector<Monomial> products;
        products.reserve(terms_.size() * other.terms_.size());
        for (const Monomial &a : terms_)
            for (const Monomial &b : other.terms_)
                products.push_back(a * b);
        return from_terms(std::move(products), rank_);
    }
    Poly &operator*=(const Poly &other) { return *this = *this * other; }

    // Termwise exponent doubling: over GF(2), p*p squares each term and the
    // cross terms cancel, so this IS multiplication by itself.
    Poly frobenius_square() const {
        Poly out(rank_);
        out.terms_.reserve(terms_.size());
        for (const Monomial &m : terms_)
            out.terms_.push_back(m.pow(2)); // order is preserved by exponent scaling
        return out;
    }

    // p^m by repeated Frobenius squaring; p^0 = 1.
    Poly pow(std::uint64_t m) const {
        Poly result = one(rank_);
        Poly base = *this;
        while (m != 0) {
            if (m & 1)
                result *= base;
            m >>= 1;
            if (m != 0)
                base = base.frobenius_square();
        }
        return result;
    }

    bool operator==(const Poly &) const = default;

  private:
    static int check_rank(int rank) {
        if (rank < 1 || rank > max_rank)
            throw input_error("Poly rank must be in [1, 32], got " + std::to_string(rank));
        return rank;
    }

    void require_same_rank(const Poly &other) const {
        if (rank_ != other.rank_)
            throw input_error("Poly: rank mismatch");
    }

    int rank_;
    std::vector<Monomial> terms_; // sorted, no duplicates
};

} // namespace z2k
