#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "z2k/errors.hpp"

namespace z2k {

using BigInt = boost::multiprecision::cpp_int;

// Number of d-dimensional subspaces of (Z_2)^k:
// prod_{j=0}^{d-1} (2^{k-j} - 1) / (2^{d-j} - 1), computed exactly.
inline BigInt gaussian_binomial(int k, int d) {
    if (k < 0 || d < 0 || d > k)
        throw input_error("gaussian_binomial: need 0 <= d <= k");
    BigInt num = 1, den = 1;
    for (int j = 0; j < d; ++j) {
        num *= (BigInt(1) << (k - j)) - 1;
        den *= (BigInt(1) << (d - j)) - 1;
    }
    if (num % den != 0)
        throw internal_error("gaussian_binomial: non-integral quotient");
    return num / den;
}

// dim Z_n((Z_2)^n) by the alternating-sum closed form
//   (-1)^n + sum_{i=0}^{n-1} (-1)^{n-1-i} prod_{j=0}^{i} (2^n - 2^j) / (i+1)!
// Every quotient is checked to be integral before it is summed.
inline BigInt dim_zn_zn(int n) {
    if (n < 1)
        throw input_error("dim_zn_zn: n must be >= 1");
    BigInt total = (n % 2 == 0) ? 1 : -1;
    BigInt prod = 1;
    BigInt fact = 1;
    for (int i = 0; i < n; ++i) {
        prod *= (BigInt(1) << n) - (BigInt(1) << i);
        fact *= i + 1;
        if (prod % fact != 0)
            throw internal_error("dim_zn_zn: non-integral term at i=" + std::to_string(i));
        const BigInt term = prod / fact;
        total += ((n - 1 - i) % 2 == 0) ? term : -term;
    }
    if (total < 0)
        throw internal_error("dim_zn_zn: negative dimension");
    return total;
}

struct DimBreakdownRow {
    int l;                // component rank
    BigInt subspace_count; // number of (k-l)-dimensional subspaces of (Z_2)^k
    BigInt component_dim; // supplied dim of the rank-l degree-n component
};

struct DimReport {
    int n = 0;
    int k = 0;
    BigInt value;
    std::vector<DimBreakdownRow> breakdown;
};

// Assembles dim over all kernels: value = sum_l (k choose k-l)_2 * dims[l]
// for 2 <= l <= min(n, k). The component dimensions are caller-supplied.
inline DimReport compose_dim(int n, int k, const std::map<int, BigInt> &component_dims) {
    if (n < 1 || k < 1)
        throw input_error("compose_dim: n and k must be >= 1");
    DimReport report;
    report.n = n;
    report.k = k;
    report.value = 0;
    const int top = std::min(n, k);
    for (int l = 2; l <= top; ++l) {
        auto it = component_dims.find(l);
        if (it == component_dims.end())
            throw input_error("compose_dim: missing component dimension for rank " +
                              std::to_string(l));
        DimBreakdownRow row;
        row.l = l;
        row.subspace_count = gaussian_binomial(k, k - l);
        row.component_dim = it->second;
        report.value += row.subspace_count * row.component_dim;
        report.breakdown.push_back(std::move(row));
    }
    return report;
}

// The published degree-4 component dimensions {dim of rank 2, 3, 4}; the
// CLI exposes this map as --preset paper-z4.
inline const std::map<int, BigInt> &paper_z4_component_dims() {
    static const std::map<int, BigInt> dims = {{2, 1}, {3, 32}, {4, 511}};
    return dims;
}

// Gelfand-Kirillov dimension bounds for the fully effective bordism ring:
// lower 2^k - k - 1, upper 2^k - 1. The exact value is not pinned down;
// only the interval is reported.
inline std::pair<BigInt, BigInt> gk_bounds(int k) {
    if (k < 1)
        throw input_error("gk_bounds: k must be >= 1");
    const BigInt p = BigInt(1) << k;
    return {p - k - 1, p - 1};
}

// Degrees of the polynomial generators of F(k): all n in [0, 2^k) that are
// not of the form 2^i - 1. Cardinality 2^k - k - 1.
inline std::vector<std::uint64_t> fk_generator_degrees(int k) {
    if (k < 1)
        throw input_error("fk_generator_degrees: k must be >= 1");
    if (k > 20)
        throw input_error("fk_generator_degrees: k > 20 is too large to materialize; "
                          "the count equals the GK lower bound");
    std::vector<std::uint64_t> out;
    out.reserve((std::size_t{1} << k) - static_cast<std::size_t>(k) - 1);
    std::uint64_t next_excluded = 0; // 2^0 - 1
    int i = 0;
    for (std::uint64_t n = 0; n < (std::uint64_t{1} << k); ++n) {
        if (n == next_excluded) {
            ++i;
            next_excluded = (std::uint64_t{1} << i) - 1;
            continue;
        }
        out.push_back(n);
    }
    return out;
}

} // namespace z2k
