#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "z2k/errors.hpp"
#include "z2k/fixed_points.hpp"
#include "z2k/poly.hpp"
#include "z2k/subspace.hpp"

namespace z2k {

// The form tables driving the circle-times-projective-space family: the
// linear forms lambda_0..lambda_{k-1} read off at the fixed points over +1,
// the primed table over -1, and the distinguished form rho_1 + rho_k that
// divides every tangent representation exactly once.
struct FormFamily {
    int rank = 0;
    std::vector<Functional> lambda;
    std::vector<Functional> lambda_prime;
    Functional rho1k;

    // Validates the structural invariants, so user-supplied tables (e.g.
    // for odd rank, where no built-in table ships) are checked the same
    // way as the built-in ones:
    //   lambda_0 = lambda'_0 = 0, lambda'_1 = lambda_1,
    //   lambda'_j = lambda_j + rho_k for 2 <= j <= k-1,
    //   each table has k pairwise distinct entries.
    static FormFamily validated(int rank, std::vector<Functional> lambda,
                                std::vector<Functional> lambda_prime) {
        if (rank < 3 || rank > max_rank)
            throw input_error("FormFamily: rank must be in [3, 32]");
        if (lambda.size() != static_cast<std::size_t>(rank) ||
            lambda_prime.size() != static_cast<std::size_t>(rank))
            throw input_error("FormFamily: tables must have exactly rank entries");
        for (const Functional &f : lambda)
            if (f.rank() != rank)
                throw input_error("FormFamily: table entry rank mismatch");
        for (const Functional &f : lambda_prime)
            if (f.rank() != rank)
                throw input_error("FormFamily: table entry rank mismatch");
        if (!lambda[0].is_zero() || !lambda_prime[0].is_zero())
            throw input_error("FormFamily: lambda_0 and lambda'_0 must be zero");
        if (lambda_prime[1] != lambda[1])
            throw input_error("FormFamily: lambda'_1 must equal lambda_1");
        const Functional rho_k = BitVector::unit(rank, rank);
        for (int j = 2; j < rank; ++j)
            if (lambda_prime[static_cast<std::size_t>(j)] !=
                lambda[static_cast<std::size_t>(j)] + rho_k)
                throw input_error("FormFamily: lambda'_j must equal lambda_j + rho_k for j >= 2");
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j) {
                if (lambda[static_cast<std::size_t>(i)] == lambda[static_cast<std::size_t>(j)])
                    throw input_error("FormFamily: lambda entries must be pairwise distinct");
                if (lambda_prime[static_cast<std::size_t>(i)] ==
                    lambda_prime[static_cast<std::size_t>(j)])
                    throw input_error("FormFamily: lambda' entries must be pairwise distinct");
            }
        FormFamily out;
        out.rank = rank;
        out.lambda = std::move(lambda);
        out.lambda_prime = std::move(lambda_prime);
        out.rho1k = BitVector::unit(rank, 1) + rho_k;
        return out;
    }
};

namespace detail {

// rho_{i_1,...,i_m} = rho_{i_1} + ... + rho_{i_m}; repeated indices cancel.
inline Functional rho_sum(std::initializer_list<int> indices, int rank) {
    Functional f = BitVector::zero(rank);
    for (int i : indices)
        f += BitVector::unit(rank, i);
    return f;
}

} // namespace detail

// The built-in form tables for even rank k >= 4:
//   lambda_j = rho_{1,2,j+1,j+2} (j even), rho_{1,2,j+1} (j odd) for
//   1 <= j <= k-3; lambda_{k-2} = rho_{1,2,k-1}; lambda_{k-1} = rho_{1,2};
//   lambda'_j = lambda_j + rho_k for j >= 2.
// Odd rank has no built-in table; supply one through FormFamily::validated.
// Rank 2 is rejected outright: its tangent representations coincide in
// pairs and the construction degenerates.
inline FormFamily lambda_family(int k) {
    if (k < 4)
        throw input_error("lambda_family: rank must be >= 4 (the rank-2 family degenerates)");
    if (k % 2 != 0)
        throw input_error("lambda_family: no built-in table for odd rank; "
                          "supply a FormFamily explicitly");
    if (k > max_rank)
        throw input_error("lambda_family: rank must be <= 32");
    std::vector<Functional> lambda(static_cast<std::size_t>(k), BitVector::zero(k));
    for (int j = 1; j <= k - 3; ++j)
        lambda[static_cast<std::size_t>(j)] =
            (j % 2 == 0) ? detail::rho_sum({1, 2, j + 1, j + 2}, k)
                         : detail::rho_sum({1, 2, j + 1}, k);
    lambda[static_cast<std::size_t>(k - 2)] = detail::rho_sum({1, 2, k - 1}, k);
    lambda[static_cast<std::size_t>(k - 1)] = detail::rho_sum({1, 2}, k);
    std::vector<Functional> lambda_prime = lambda;
    for (int j = 2; j < k; ++j)
        lambda_prime[static_cast<std::size_t>(j)] += BitVector::unit(k, k);
    return FormFamily::validated(k, std::move(lambda), std::move(lambda_prime));
}

// Fixed-point data of the standard action on RP^k: the k+1 isolated fixed
// points contribute sum_{i=0}^{k} prod_{j != i} rho_{i,j} with rho_0 = 0.
// Homogeneous of degree k, k+1 distinct terms, every term spanning.
inline FixedPointData rp_standard(int k) {
    if (k < 2)
        throw input_error("rp_standard: rank must be >= 2 (the action is not fully "
                          "effective below rank 2)");
    if (k > max_rank)
        throw input_error("rp_standard: rank must be <= 32");
    std::vector<Monomial> terms;
    for (int i = 0; i <= k; ++i) {
        Monomial m(k);
        for (int j = 0; j <= k; ++j) {
            if (j == i)
                continue;
            Functional f = BitVector::zero(k);
            if (i != 0)
                f += BitVector::unit(k, i);
            if (j != 0)
                f += BitVector::unit(k, j);
            m.multiply_by(f, 1);
        }
        terms.push_back(std::move(m));
    }
    return FixedPointData(Poly::from_terms(std::move(terms), k));
}

namespace detail {

// tau_i = prod_{j != i} (lambda_i + lambda_j): the degree-(k-1) monomial of
// the fixed point indexed i in the given table.
inline std::vector<Monomial> sigma_summands(const std::vector<Functional> &table, int k) {
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        Monomial m(k);
        for (int j = 0; j < k; ++j)
            if (j != i)
                m.multiply_by(table[static_cast<std::size_t>(i)] +
                                  table[static_cast<std::size_t>(j)],
                              1);
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace detail

// (sigma_{k,1}, sigma_{k,2}): the two degree-(k-1) classes summing the
// tangent representations over the +1 and -1 fixed-point sheets.
inline std::pair<Poly, Poly> sigma(const FormFamily &family) {
    const int k = family.rank;
    Poly s1 = Poly::from_terms(detail::sigma_summands(family.lambda, k), k);
    Poly s2 = Poly::from_terms(detail::sigma_summands(family.lambda_prime, k), k);
    return {std::move(s1), std::move(s2)};
}

inline std::pair<Poly, Poly> sigma(int k) { return sigma(lambda_family(k)); }

// f_{k,m} = (sigma_{k,1}^m + sigma_{k,2}^m) * rho_{1,k}; homogeneous of
// degree m(k-1) + 1, zero for m = 0.
inline FixedPointData f_poly(const FormFamily &family, std::uint32_t m) {
    auto [s1, s2] = sigma(family);
    const Poly p = (s1.pow(m) + s2.pow(m)) * Poly::monomial(Monomial::from_factors(
                       std::vector<Functional>{family.rho1k}, family.rank));
    return FixedPointData(p);
}

inline FixedPointData f_poly(int k, std::uint32_t m) { return f_poly(lambda_family(k), m); }

// One isolated fixed point of the rank-k action on the m-fold construction:
// the sheet sign, the per-coordinate fixed-point labels, and the tangent
// representation monomial.
struct FixedPointEntry {
    std::string label;
    Monomial monomial;
};

// All 2k^m fixed points with their tangent representations, in canonical
// order: '+' sheet first, then the label tuple lexicographically in table
// index order (P_1, Q_1, P_2, ..., Q_{k/2}). The GF(2) sum of the
// monomials equals f_poly(k, m) -- this enumeration is the independent
// route to the closed form.
inline std::vector<FixedPointEntry> enumerate_fixed_points(const FormFamily &family,
                                                           std::uint32_t m) {
    if (m < 1)
        throw input_error("enumerate_fixed_points: m must be >= 1");
    const int k = family.rank;
    double size_estimate = 2.0;
    for (std::uint32_t i = 0; i < m; ++i)
        size_estimate *= k;
    if (size_estimate > (1 << 22))
        throw input_error("enumerate_fixed_points: 2k^m is too large to materialize");

    const std::vector<Monomial> plus = detail::sigma_summands(family.lambda, k);
    const std::vector<Monomial> minus = detail::sigma_summands(family.lambda_prime, k);
    const Monomial rho_factor =
        Monomial::from_factors(std::vector<Functional>{family.rho1k}, k);

    std::vector<FixedPointEntry> out;
    out.reserve(static_cast<std::size_t>(size_estimate));
    std::vector<int> tuple(m, 0);
    for (char sign : {'+', '-'}) {
        const std::vector<Monomial> &table = (sign == '+') ? plus : minus;
        std::fill(tuple.begin(), tuple.end(), 0);
        while (true) {
            Monomial mono = rho_factor;
            std::string label(1, sign);
            for (std::uint32_t i = 0; i < m; ++i) {
                const int idx = tuple[i];
                mono = mono * table[static_cast<std::size_t>(idx)];
                if (i > 0)
                    label += ',';
                label += (idx % 2 == 0) ? 'P' : 'Q';
                label += std::to_string(idx / 2 + 1);
            }
            out.push_back({std::move(label), std::move(mono)});
            // odometer, leftmost coordinate most significant
            int pos = static_cast<int>(m) - 1;
            while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == k - 1) {
                tuple[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0)
                break;
            ++tuple[static_cast<std::size_t>(pos)];
        }
    }
    return out;
}

inline std::vector<FixedPointEntry> enumerate_fixed_points(int k, std::uint32_t m) {
    return enumerate_fixed_points(lambda_family(k), m);
}

// The distinguished term lambda_1^m ... lambda_{k-1}^m rho_{1,k} of
// f_poly(k, m): k distinct factors, rho_{1,k} with exponent exactly 1,
// degree m(k-1) + 1, spanning factor set.
inline Monomial witness_monomial(const FormFamily &family, std::uint32_t m) {
    if (m < 1)
        throw input_error("witness_monomial: m must be >= 1");
    const int k = family.rank;
    Monomial out(k);
    for (int j = 1; j < k; ++j)
        out.multiply_by(family.lambda[static_cast<std::size_t>(j)], m);
    out.multiply_by(family.rho1k, 1);
    return out;
}

inline Monomial witness_monomial(int k, std::uint32_t m) {
    return witness_monomial(lambda_family(k), m);
}

} // namespace z2k
