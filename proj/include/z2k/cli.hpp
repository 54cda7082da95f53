#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "z2k/poly_text.hpp"
#include "z2k/serialize.hpp"
#include "z2k/z2k.hpp"

namespace z2k::cli {

// Exit codes: 0 ok, 1 verification failed, 2 input/parse error.
struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline std::string read_input(const std::string &path, const std::string &stdin_text) {
    if (path == "-")
        return stdin_text;
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw input_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

inline std::string dump(const json &value) { return value.dump(2) + "\n"; }

// "bits" or "bits,bits,..." -> subspace spanned by the listed vectors.
inline Subspace parse_subspace(const std::string &text, int rank) {
    std::vector<BitVector> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos)
            end = text.size();
        const std::string item = text.substr(start, end - start);
        if (!item.empty()) {
            if (static_cast<int>(item.size()) != rank)
                throw input_error("kernel basis vector '" + item + "' does not have " +
                                  std::to_string(rank) + " bits");
            rows.push_back(BitVector::from_string(item));
        }
        start = end + 1;
    }
    return Subspace::span(rows, rank);
}

// "l=dim,l=dim,..." with exact decimal dims.
inline std::map<int, BigInt> parse_components(const std::string &text) {
    std::map<int, BigInt> out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos)
            end = text.size();
        const std::string item = text.substr(start, end - start);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw input_error("bad component entry '" + item + "', expected l=dim");
        try {
            out[std::stoi(item.substr(0, eq))] = BigInt(item.substr(eq + 1));
        } catch (const std::exception &) {
            throw input_error("bad component entry '" + item + "', expected l=dim");
        }
        start = end + 1;
    }
    return out;
}

inline std::string basis_text(const Subspace &s) {
    if (s.dim() == 0)
        return "{}";
    std::string out = "{";
    for (const BitVector &row : s.basis()) {
        if (out.size() > 1)
            out += ',';
        out += row.str();
    }
    return out + "}";
}

} // namespace detail

// Dispatches one invocation. `stdin_text` stands in for the process stdin
// when an --input flag is given "-". Identical invocations produce
// byte-identical output.
inline CommandResult run(const std::vector<std::string> &args,
                         const std::string &stdin_text = "") {
    CommandResult result;
    std::ostringstream out;

    CLI::App app{"exact engine for (Z_2)^k fixed-point data"};
    app.name("z2k");
    app.require_subcommand(1);

    int k = 0, n = 0, rank = 0, dim_flag = -1;
    std::uint32_t m = 0;
    std::string format = "text";
    std::string input_path;
    std::string kernel_text;
    std::string components_text;
    std::string preset;
    bool count_only = false;

    const auto format_validator = CLI::IsMember({"text", "json"});

    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", format, "output format")->check(format_validator);
    };

    CLI::App *fpoly = app.add_subcommand("f-poly", "closed-form fixed-point data f_{k,m}");
    fpoly->add_option("--k", k, "group rank (even, >= 4)")->required();
    fpoly->add_option("--m", m, "number of projective factors")->required();
    add_format(fpoly);

    CLI::App *fixed = app.add_subcommand(
        "fixed-points", "enumerate the 2k^m fixed points with tangent representations");
    fixed->add_option("--k", k, "group rank (even, >= 4)")->required();
    fixed->add_option("--m", m, "number of projective factors (>= 1)")->required();
    fixed->add_flag("--count-only", count_only, "print only the number of fixed points");
    add_format(fixed);

    CLI::App *witness = app.add_subcommand("witness", "distinguished witness term of f_{k,m}");
    witness->add_option("--k", k, "group rank (even, >= 4)")->required();
    witness->add_option("--m", m, "number of projective factors (>= 1)")->required();
    add_format(witness);

    CLI::App *indec = app.add_subcommand(
        "indecomposable", "scan a homogeneous polynomial for an indecomposability witness");
    indec->add_option("--rank", rank, "ambient rank")->required();
    indec->add_option("--input", input_path, "polynomial file, or - for stdin")->required();
    add_format(indec);

    CLI::App *decomp =
        app.add_subcommand("decompose", "partition a polynomial by kernel subgroup");
    decomp->add_option("--rank", rank, "ambient rank")->required();
    decomp->add_option("--input", input_path, "polynomial file, or - for stdin")->required();
    add_format(decomp);

    CLI::App *embed = app.add_subcommand(
        "embed", "embed lower-rank fixed-point data with a trivially acting kernel");
    embed->add_option("--rank", rank, "ambient rank k")->required();
    embed
        ->add_option("--kernel", kernel_text,
                     "kernel basis, comma-separated ambient bit strings")
        ->required();
    embed->add_option("--input", input_path, "rank (k - dim kernel) polynomial file, or -")
        ->required();
    add_format(embed);

    CLI::App *vid = app.add_subcommand(
        "verify-identity", "check f_{k,m} = f_{k,m-1}(s1 + s2) + f_{k,m-2} s1 s2 exactly");
    vid->add_option("--k", k, "group rank (even, >= 4)")->required();
    vid->add_option("--m", m, "number of projective factors (>= 2)")->required();

    CLI::App *ven = app.add_subcommand(
        "verify-enumeration", "check the fixed-point enumeration against the closed form");
    ven->add_option("--k", k, "group rank (even, >= 4)")->required();
    ven->add_option("--m", m, "number of projective factors (>= 1)")->required();

    CLI::App *dim = app.add_subcommand("dim", "dimension of the full-rank degree-n component");
    dim->add_option("--n", n, "degree and rank")->required();
    add_format(dim);

    CLI::App *cdim = app.add_subcommand(
        "compose-dim", "assemble a degree-n dimension from per-rank component dimensions");
    cdim->add_option("--n", n, "degree")->required();
    cdim->add_option("--k", k, "ambient rank")->required();
    cdim->add_option("--components", components_text, "component dims as l=dim,l=dim,...");
    cdim->add_option("--preset", preset, "named component-dim preset (paper-z4)");
    add_format(cdim);

    CLI::App *subs = app.add_subcommand("subspaces", "enumerate subspaces of (Z_2)^k");
    subs->add_option("--k", k, "ambient rank")->required();
    subs->add_option("--dim", dim_flag, "subspace dimension")->required();
    subs->add_flag("--count-only", count_only, "print only the subspace count");
    add_format(subs);

    CLI::App *gk = app.add_subcommand(
        "gk-bounds", "Gelfand-Kirillov dimension bounds and generator degrees");
    gk->add_option("--k", k, "group rank")->required();
    gk->add_flag("--count-only", count_only, "omit the explicit degree list");
    add_format(gk);

    CLI::App *pcheck = app.add_subcommand("parse-check", "parse and echo the canonical form");
    pcheck->add_option("--rank", rank, "ambient rank")->required();
    pcheck->add_option("--input", input_path, "polynomial file, or - for stdin")->required();
    add_format(pcheck);

    std::vector<const char *> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("z2k");
    for (const std::string &a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        std::ostringstream ostream, estream;
        const int code = app.exit(e, ostream, estream);
        result.out = ostream.str();
        result.err = estream.str();
        result.exit_code = (code == 0) ? 0 : 2;
        return result;
    }

    try {
        if (fpoly->parsed()) {
            const FixedPointData f = f_poly(k, m);
            out << (format == "json" ? detail::dump(to_json(f.poly()))
                                     : z2k::format(f.poly()) + "\n");
        } else if (fixed->parsed()) {
            const auto entries = enumerate_fixed_points(k, m);
            if (count_only) {
                out << entries.size() << "\n";
            } else if (format == "json") {
                out << detail::dump(to_json(std::span(entries)));
            } else {
                for (const FixedPointEntry &e : entries)
                    out << e.label << ": " << z2k::format(e.monomial) << "\n";
            }
        } else if (witness->parsed()) {
            const Monomial w = witness_monomial(k, m);
            out << (format == "json" ? detail::dump(to_json(w)) : z2k::format(w) + "\n");
        } else if (indec->parsed()) {
            const Poly p = parse_poly(detail::read_input(input_path, stdin_text), rank);
            const WitnessReport report = find_witness(FixedPointData(p));
            if (format == "json") {
                out << detail::dump(to_json(report));
            } else if (report.found) {
                out << "indecomposable: witness " << z2k::format(*report.monomial) << "\n"
                    << "reason: " << report.reason << "\n";
            } else {
                out << "inconclusive\nreason: " << report.reason << "\n";
            }
            if (!report.found)
                result.exit_code = 1;
        } else if (decomp->parsed()) {
            const Poly p = parse_poly(detail::read_input(input_path, stdin_text), rank);
            const auto components = decompose_by_kernel(p);
            if (format == "json") {
                out << detail::dump(to_json(components));
            } else {
                for (const auto &[kernel, poly] : components)
                    out << "dim=" << kernel.dim() << " basis=" << detail::basis_text(kernel)
                        << " poly=" << z2k::format(poly) << "\n";
            }
        } else if (embed->parsed()) {
            const Subspace kernel = detail::parse_subspace(kernel_text, rank);
            const int source_rank = rank - kernel.dim();
            if (source_rank < 1)
                throw input_error("embed: kernel leaves no effective rank");
            const Poly p =
                parse_poly(detail::read_input(input_path, stdin_text), source_rank);
            const Poly image = psi_embed(p, kernel);
            out << (format == "json" ? detail::dump(to_json(image))
                                     : z2k::format(image) + "\n");
        } else if (vid->parsed()) {
            if (verify_lowering_identity(k, m)) {
                out << "OK\n";
            } else {
                out << "FAIL: identity does not hold for k=" << k << " m=" << m << "\n";
                result.exit_code = 1;
            }
        } else if (ven->parsed()) {
            const Poly closed = f_poly(k, m).poly();
            Poly summed(closed.rank());
            for (const FixedPointEntry &e : enumerate_fixed_points(k, m))
                summed += Poly::monomial(e.monomial);
            if (closed == summed) {
                out << "OK\n";
            } else {
                const Poly difference = closed + summed;
                out << "FAIL: enumeration sum differs from the closed form in "
                    << difference.term_count() << " terms\n";
                for (std::size_t i = 0; i < difference.term_count() && i < 5; ++i)
                    out << "  " << z2k::format(difference.terms()[i]) << "\n";
                result.exit_code = 1;
            }
        } else if (dim->parsed()) {
            const BigInt value = dim_zn_zn(n);
            out << (format == "json"
                        ? detail::dump(json{{"n", n}, {"value", to_json(value)}})
                        : value.str() + "\n");
        } else if (cdim->parsed()) {
            if (!components_text.empty() && !preset.empty())
                throw input_error("compose-dim: give either --components or --preset");
            std::map<int, BigInt> dims;
            if (!preset.empty()) {
                if (preset != "paper-z4")
                    throw input_error("unknown preset '" + preset + "'");
                dims = paper_z4_component_dims();
            } else if (!components_text.empty()) {
                dims = detail::parse_components(components_text);
            } else {
                throw input_error("compose-dim: --components or --preset is required");
            }
            const DimReport report = compose_dim(n, k, dims);
            if (format == "json") {
                out << detail::dump(to_json(report));
            } else {
                for (const DimBreakdownRow &row : report.breakdown)
                    out << "l=" << row.l << " subspaces=" << row.subspace_count.str()
                        << " component_dim=" << row.component_dim.str() << "\n";
                out << "value=" << report.value.str() << "\n";
            }
        } else if (subs->parsed()) {
            if (count_only) {
                out << gaussian_binomial(k, dim_flag).str() << "\n";
            } else {
                const auto list = enumerate_subspaces(k, dim_flag);
                if (format == "json") {
                    json arr = json::array();
                    for (const Subspace &s : list)
                        arr.push_back(basis_json(s));
                    out << detail::dump(json{{"k", k}, {"dim", dim_flag}, {"subspaces", arr}});
                } else {
                    for (const Subspace &s : list) {
                        if (s.dim() == 0) {
                            out << "-\n";
                            continue;
                        }
                        for (int i = 0; i < s.dim(); ++i)
                            out << (i ? " " : "") << s.basis()[static_cast<std::size_t>(i)].str();
                        out << "\n";
                    }
                }
            }
        } else if (gk->parsed()) {
            const auto [lower, upper] = gk_bounds(k);
            const bool list_degrees = !count_only && k <= 20;
            if (format == "json") {
                json doc{{"k", k},
                         {"lower", to_json(lower)},
                         {"upper", to_json(upper)},
                         {"generator_degree_count", to_json(lower)}};
                if (list_degrees)
                    doc["generator_degrees"] = fk_generator_degrees(k);
                out << detail::dump(doc);
            } else {
                out << "gk lower bound: " << lower.str() << "\n"
                    << "gk upper bound: " << upper.str() << "\n"
                    << "generator degree count: " << lower.str() << "\n";
                if (list_degrees) {
                    out << "generator degrees:";
                    for (std::uint64_t d : fk_generator_degrees(k))
                        out << " " << d;
                    out << "\n";
                }
            }
        } else if (pcheck->parsed()) {
            const Poly p = parse_poly(detail::read_input(input_path, stdin_text), rank);
            out << (format == "json" ? detail::dump(to_json(p)) : z2k::format(p) + "\n");
        }
    } catch (const input_error &e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
        result.out = out.str();
        return result;
    } catch (const internal_error &e) {
        result.err = std::string("internal error: ") + e.what() + "\n";
        result.exit_code = 2;
        result.out = out.str();
        return result;
    }

    result.out = out.str();
    return result;
}

inline int main_entry(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string stdin_text;
    for (const std::string &a : args)
        if (a == "-") {
            std::ostringstream buffer;
            buffer << std::cin.rdbuf();
            stdin_text = buffer.str();
            break;
        }
    const CommandResult result = run(args, stdin_text);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}

} // namespace z2k::cli
