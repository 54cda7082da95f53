#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "z2k/constructions.hpp"
#include "z2k/errors.hpp"
#include "z2k/fixed_points.hpp"
#include "z2k/poly.hpp"
#include "z2k/subspace.hpp"

namespace z2k {

// Outcome of the witness scan. A found witness certifies indecomposability
// of the input within the image of the fully effective bordism ring; a
// missing witness is inconclusive, never a decomposability verdict.
struct WitnessReport {
    bool found = false;
    std::optional<Monomial> monomial;
    std::string reason;
};

// Scans the terms in canonical order for a monomial with exactly k distinct
// factors, at least one of exponent exactly 1, total degree equal to the
// input degree, and a factor set spanning the rank-k dual space. The
// spanning clause is checked on raw polynomial input too; for genuine
// images of fully effective classes it is automatic. The certificate is
// conditional on the input lying in that image.
inline WitnessReport find_witness(const FixedPointData &d) {
    if (d.is_zero())
        throw input_error("find_witness: input is zero");
    const int k = d.rank();
    WitnessReport report;
    for (const Monomial &m : d.poly().terms()) {
        if (m.factor_count() != static_cast<std::size_t>(k))
            continue;
        bool has_unit_exponent = false;
        for (const auto &[f, e] : m.entries())
            if (e == 1) {
                has_unit_exponent = true;
                break;
            }
        if (!has_unit_exponent)
            continue;
        if (Subspace::span(m.factors(), k).dim() != k)
            continue;
        report.found = true;
        report.monomial = m;
        report.reason = "term has exactly " + std::to_string(k) +
                        " distinct factors spanning the dual space, one with exponent 1, "
                        "at full degree " +
                        std::to_string(d.degree());
        return report;
    }
    report.reason = "no term has exactly " + std::to_string(k) +
                    " distinct spanning factors with a unit exponent; inconclusive";
    return report;
}

// A replayable decomposition: each product is a list of generator indices
// (at least two, repetition allowed); the GF(2) sum of the listed products
// equals the target.
struct DecompositionCertificate {
    Poly target;
    std::vector<std::vector<std::size_t>> products;
};

inline Poly replay_certificate(const DecompositionCertificate &certificate,
                               std::span<const Poly> generators) {
    Poly sum(certificate.target.rank());
    for (const std::vector<std::size_t> &product : certificate.products) {
        Poly value = Poly::one(certificate.target.rank());
        for (std::size_t index : product)
            value *= generators[index];
        sum += value;
    }
    return sum;
}

namespace detail {

// All multisets of generator indices (ascending, size >= 2) whose degrees
// sum exactly to `budget`.
inline void degree_multisets(std::span<const std::uint64_t> degrees, std::size_t first,
                             std::uint64_t budget, std::vector<std::size_t> &current,
                             std::vector<std::vector<std::size_t>> &out) {
    if (budget == 0) {
        if (current.size() >= 2)
            out.push_back(current);
        return;
    }
    for (std::size_t i = first; i < degrees.size(); ++i) {
        if (degrees[i] > budget)
            continue;
        current.push_back(i);
        degree_multisets(degrees, i, budget - degrees[i], current, out);
        current.pop_back();
    }
}

} // namespace detail

// Decides whether the target lies in the GF(2) span of all products of at
// least two generators whose degrees add up to the target degree -- the
// brute-force realization of decomposability over the given generator set.
// Returns a certificate when it does. The zero target is decomposable by
// the empty sum.
inline std::pair<bool, std::optional<DecompositionCertificate>>
brute_force_decomposable(const Poly &target, std::span<const Poly> generators) {
    if (!target.is_homogeneous())
        throw input_error("brute_force_decomposable: target must be homogeneous");
    if (target.is_zero()) // the empty sum, regardless of the generators
        return {true, DecompositionCertificate{target, {}}};
    for (const Poly &g : generators) {
        if (g.rank() != target.rank())
            throw input_error("brute_force_decomposable: generator rank mismatch");
        if (g.is_zero() || !g.is_homogeneous())
            throw input_error("brute_force_decomposable: generators must be nonzero "
                              "and homogeneous");
        if (g.degree() < 1 || g.degree() >= target.degree())
            throw input_error("brute_force_decomposable: generator degree must be in "
                              "[1, degree(target))");
    }

    std::vector<std::uint64_t> degrees;
    degrees.reserve(generators.size());
    for (const Poly &g : generators)
        degrees.push_back(g.degree());

    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t> scratch;
    detail::degree_multisets(degrees, 0, target.degree(), scratch, candidates);
    if (candidates.empty())
        return {false, std::nullopt};

    std::vector<Poly> products;
    products.reserve(candidates.size());
    for (const std::vector<std::size_t> &multiset : candidates) {
        Poly value = Poly::one(target.rank());
        for (std::size_t index : multiset)
            value *= generators[index];
        products.push_back(std::move(value));
    }

    // Solve A x = t over GF(2): columns are the candidate products, rows the
    // monomials occurring anywhere, t the target's indicator vector. Rows are
    // bitsets with the target as the last (augmented) column.
    std::map<Monomial, std::size_t> row_of;
    auto row_index = [&](const Monomial &m) {
        return row_of.try_emplace(m, row_of.size()).first->second;
    };
    for (const Poly &p : products)
        for (const Monomial &m : p.terms())
            row_index(m);
    for (const Monomial &m : target.terms())
        row_index(m);

    const std::size_t cols = products.size();
    const std::size_t words = (cols + 1 + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(row_of.size(),
                                                 std::vector<std::uint64_t>(words, 0));
    auto set_bit = [&](std::size_t r, std::size_t c) { rows[r][c / 64] |= 1ull << (c % 64); };
    auto get_bit = [&](std::size_t r, std::size_t c) -> bool {
        return (rows[r][c / 64] >> (c % 64)) & 1ull;
    };
    for (std::size_t j = 0; j < cols; ++j)
        for (const Monomial &m : products[j].terms())
            set_bit(row_index(m), j);
    for (const Monomial &m : target.terms())
        set_bit(row_index(m), cols);

    // Gaussian elimination by columns.
    std::vector<std::size_t> pivot_row_of_col(cols, SIZE_MAX);
    std::size_t next_row = 0;
    for (std::size_t j = 0; j < cols && next_row < rows.size(); ++j) {
        std::size_t pivot = SIZE_MAX;
        for (std::size_t r = next_row; r < rows.size(); ++r)
            if (get_bit(r, j)) {
                pivot = r;
                break;
            }
        if (pivot == SIZE_MAX)
            continue;
        std::swap(rows[pivot], rows[next_row]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next_row && get_bit(r, j))
                for (std::size_t w = 0; w < words; ++w)
                    rows[r][w] ^= rows[next_row][w];
        pivot_row_of_col[j] = next_row;
        ++next_row;
    }

    // Any remaining row with only the augmented bit set is a contradiction.
    for (std::size_t r = next_row; r < rows.size(); ++r)
        if (get_bit(r, cols))
            return {false, std::nullopt};

    DecompositionCertificate certificate{target, {}};
    for (std::size_t j = 0; j < cols; ++j)
        if (pivot_row_of_col[j] != SIZE_MAX && get_bit(pivot_row_of_col[j], cols))
            certificate.products.push_back(candidates[j]);
    return {true, std::move(certificate)};
}

// Exact polynomial identity expressing f_{k,m} over lower-degree pieces:
//   f_{k,m} = f_{k,m-1} sigma_1 + f_{k,m-1} sigma_2 + f_{k,m-2} sigma_1 sigma_2.
inline bool verify_lowering_identity(const FormFamily &family, std::uint32_t m) {
    if (m < 2)
        throw input_error("verify_lowering_identity: m must be >= 2");
    auto [s1, s2] = sigma(family);
    const Poly lhs = f_poly(family, m).poly();
    const Poly fm1 = f_poly(family, m - 1).poly();
    const Poly fm2 = f_poly(family, m - 2).poly();
    const Poly rhs = fm1 * s1 + fm1 * s2 + fm2 * s1 * s2;
    return lhs == rhs;
}

inline bool verify_lowering_identity(int k, std::uint32_t m) {
    return verify_lowering_identity(lambda_family(k), m);
}

} // namespace z2k
