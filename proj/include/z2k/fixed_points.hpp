#pragma once

#include <map>
#include <vector>

#include "z2k/errors.hpp"
#include "z2k/poly.hpp"
#include "z2k/subspace.hpp"

namespace z2k {

// A polynomial standing for the fixed-point data of a bordism class: the
// GF(2) sum of tangent representations over the isolated fixed points.
// Every fixed point of one action contributes a monomial of the manifold's
// dimension, so the polynomial must be homogeneous (the zero polynomial
// qualifies).
class FixedPointData {
  public:
    explicit FixedPointData(Poly p) : poly_(std::move(p)) {
        if (!poly_.is_homogeneous())
            throw input_error("FixedPointData: polynomial is not homogeneous");
    }

    int rank() const { return poly_.rank(); }
    const Poly &poly() const { return poly_; }
    std::uint64_t degree() const { return poly_.degree(); }
    bool is_zero() const { return poly_.is_zero(); }

    FixedPointData operator+(const FixedPointData &other) const {
        return FixedPointData(poly_ + other.poly_);
    }

    bool operator==(const FixedPointData &) const = default;

  private:
    Poly poly_;
};

// The subgroup acting trivially at a fixed point with tangent representation
// m: all g on which every factor of m vanishes.
inline Subspace monomial_kernel(const Monomial &m) {
    return Subspace::span(m.factors(), m.rank()).annihilator();
}

// True iff every term's factor set spans the full dual space. This is the
// necessary condition for membership in the image of a fully effective
// class; it does not decide membership.
inline bool spanning_check(const FixedPointData &d) {
    for (const Monomial &m : d.poly().terms())
        if (Subspace::span(m.factors(), d.rank()).dim() != d.rank())
            return false;
    return true;
}

// Partition of the terms by their kernel subgroup; only nonzero components
// are returned, keyed canonically. The K = 0 component is the fully
// effective part; positive-dimensional keys carry embedded lower-rank
// classes. Works on any polynomial, the partition is degree-agnostic.
inline std::map<Subspace, Poly> decompose_by_kernel(const Poly &p) {
    std::map<Subspace, Poly> out;
    for (const Monomial &m : p.terms()) {
        auto [it, inserted] = out.try_emplace(monomial_kernel(m), p.rank());
        it->second += Poly::monomial(m);
    }
    return out;
}

inline std::map<Subspace, Poly> decompose_by_kernel(const FixedPointData &d) {
    return decompose_by_kernel(d.poly());
}

// The variable substitution realizing a rank-h class inside rank k with K
// acting trivially: each functional rho on (Z_2)^h becomes rho composed
// with the projection onto the canonical complement H of K. Returns the h
// rank-k functionals that the coordinate functionals of (Z_2)^h map to;
// they are independent and span the annihilator of K.
inline std::vector<Functional> psi_variable_images(const Subspace &K, int h) {
    const int k = K.rank();
    if (K.dim() + h != k)
        throw input_error("psi_embed: dim K + source rank must equal ambient rank");
    const Subspace H = K.complement();
    std::vector<Functional> images;
    images.reserve(static_cast<std::size_t>(h));
    for (const BitVector &unit : H.basis()) {
        // H's basis vectors are units at the non-pivot columns of K, in
        // column order; column c_i of the ambient space carries coordinate
        // i of the source. The image functional reads coordinate c_i of
        // the H-part of g = u + v with u in K:
        //   g |-> g_{c_i} + sum_j g_{p_j} (row_j)_{c_i}.
        std::uint32_t w = unit.word();
        for (const BitVector &row : K.basis())
            if (row.word() & unit.word())
                w |= std::uint32_t{1} << (31 - std::countl_zero(row.word()));
        images.push_back(BitVector(k, w));
    }
    return images;
}

// Applies the substitution to every factor of every term. Injective and
// multiplicative in the input.
inline Poly psi_embed(const Poly &p, const Subspace &K) {
    const std::vector<Functional> images = psi_variable_images(K, p.rank());
    const int k = K.rank();
    std::vector<Monomial> terms;
    terms.reserve(p.term_count());
    for (const Monomial &m : p.terms()) {
        Monomial image(k);
        for (const auto &[f, e] : m.entries()) {
            BitVector g = BitVector::zero(k);
            for (int i = 1; i <= p.rank(); ++i)
                if (f.bit(i))
                    g += images[static_cast<std::size_t>(i - 1)];
            image.multiply_by(g, e);
        }
        terms.push_back(std::move(image));
    }
    return Poly::from_terms(std::move(terms), k);
}

inline FixedPointData psi_embed(const FixedPointData &d, const Subspace &K) {
    return FixedPointData(psi_embed(d.poly(), K));
}

} // namespace z2k
