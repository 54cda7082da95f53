#pragma once

#include <map>
#include <span>
#include <vector>

#include <json.hpp>

#include "z2k/constructions.hpp"
#include "z2k/counting.hpp"
#include "z2k/fixed_points.hpp"
#include "z2k/indecomp.hpp"
#include "z2k/poly.hpp"
#include "z2k/subspace.hpp"

namespace z2k {

using json = nlohmann::ordered_json;

// Counts are emitted as JSON numbers while they fit in 64 bits, as decimal
// strings beyond that, so output stays loss-free.
inline json to_json(const BigInt &value) {
    if (value >= 0 && value <= BigInt(UINT64_MAX))
        return static_cast<std::uint64_t>(value);
    return value.str();
}

// [["bits", exponent], ...] in canonical factor order; the unit monomial
// is the empty list.
inline json to_json(const Monomial &m) {
    json out = json::array();
    for (const auto &[f, e] : m.entries())
        out.push_back(json::array({f.str(), e}));
    return out;
}

// {"k": rank, "terms": [...]} with terms in canonical order.
inline json to_json(const Poly &p) {
    json terms = json::array();
    for (const Monomial &m : p.terms())
        terms.push_back(to_json(m));
    return json{{"k", p.rank()}, {"terms", std::move(terms)}};
}

inline json basis_json(const Subspace &s) {
    json out = json::array();
    for (const BitVector &row : s.basis())
        out.push_back(row.str());
    return out;
}

// [{"kernel_basis": [bits...], "dim": d, "poly": ...}, ...] keyed canonically.
inline json to_json(const std::map<Subspace, Poly> &decomposition) {
    json out = json::array();
    for (const auto &[kernel, component] : decomposition)
        out.push_back(json{{"kernel_basis", basis_json(kernel)},
                           {"dim", kernel.dim()},
                           {"poly", to_json(component)}});
    return out;
}

inline json to_json(std::span<const FixedPointEntry> entries) {
    json out = json::array();
    for (const FixedPointEntry &entry : entries)
        out.push_back(json{{"label", entry.label}, {"monomial", to_json(entry.monomial)}});
    return out;
}

inline json to_json(const WitnessReport &report) {
    json out{{"found", report.found}};
    out["monomial"] = report.monomial ? to_json(*report.monomial) : json(nullptr);
    out["reason"] = report.reason;
    return out;
}

// {"target": ..., "products": [[gen_idx, ...], ...]}.
inline json to_json(const DecompositionCertificate &certificate) {
    return json{{"target", to_json(certificate.target)},
                {"products", certificate.products}};
}

inline json to_json(const DimReport &report) {
    json rows = json::array();
    for (const DimBreakdownRow &row : report.breakdown)
        rows.push_back(json{{"l", row.l},
                            {"num_subspaces", to_json(row.subspace_count)},
                            {"component_dim", to_json(row.component_dim)}});
    return json{{"n", report.n},
                {"k", report.k},
                {"value", to_json(report.value)},
                {"breakdown", std::move(rows)}};
}

} // namespace z2k
