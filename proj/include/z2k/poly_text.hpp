#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "z2k/errors.hpp"
#include "z2k/poly.hpp"

namespace z2k {

// Text form of the polynomial grammar:
//
//   poly     := '0' | monomial ('+' monomial)*
//   monomial := factor ('*' factor)*
//   factor   := '[' bit{k} ']' ('^' uint)?
//
// The unit monomial is written "[]"; the leftmost bit of a factor is the
// rho_1 coefficient; whitespace is insignificant.

inline std::string format(const Monomial &m) {
    if (m.is_unit())
        return "[]";
    std::string out;
    bool first = true;
    for (const auto &[f, e] : m.entries()) {
        if (!first)
            out += '*';
        first = false;
        out += '[';
        out += f.str();
        out += ']';
        if (e >= 2) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

inline std::string format(const Poly &p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const Monomial &m : p.terms()) {
        if (!first)
            out += '+';
        first = false;
        out += format(m);
    }
    return out;
}

namespace detail {

class PolyParser {
  public:
    PolyParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

    Poly parse() {
        skip_ws();
        if (peek() == '0') {
            ++pos_;
            skip_ws();
            if (pos_ != text_.size())
                throw parse_error(pos_ + 1, "unexpected input after the zero polynomial");
            return Poly::zero(rank_);
        }
        std::vector<Monomial> terms;
        terms.push_back(parse_monomial());
        skip_ws();
        while (pos_ < text_.size()) {
            expect('+');
            terms.push_back(parse_monomial());
            skip_ws();
        }
        return Poly::from_terms(std::move(terms), rank_);
    }

  private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw parse_error(pos_ + 1, std::string("expected '") + c + "'");
        ++pos_;
    }

    Monomial parse_monomial() {
        Monomial m(rank_);
        parse_factor(m);
        while (true) {
            skip_ws();
            if (peek() != '*')
                break;
            ++pos_;
            parse_factor(m);
        }
        return m;
    }

    void parse_factor(Monomial &m) {
        expect('[');
        skip_ws();
        const std::size_t bits_pos = pos_;
        std::string bits;
        while (peek() == '0' || peek() == '1') {
            bits += text_[pos_++];
            skip_ws();
        }
        expect(']');
        std::uint32_t exponent = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            exponent = parse_uint();
        }
        if (bits.empty())
            return; // "[]" is the unit factor
        if (static_cast<int>(bits.size()) != rank_)
            throw parse_error(bits_pos + 1, "factor has " + std::to_string(bits.size()) +
                                                " bits, expected " + std::to_string(rank_));
        const BitVector f = BitVector::from_string(bits);
        if (f.is_zero())
            throw parse_error(bits_pos + 1, "the zero functional is not a variable");
        m.multiply_by(f, exponent);
    }

    std::uint32_t parse_uint() {
        skip_ws();
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
            if (v > 0xFFFFFFFFull)
                throw parse_error(start + 1, "exponent exceeds 32 bits");
        }
        if (pos_ == start)
            throw parse_error(pos_ + 1, "expected an exponent");
        return static_cast<std::uint32_t>(v);
    }

    std::string_view text_;
    int rank_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Parses the grammar above; throws parse_error with a 1-based position.
inline Poly parse_poly(std::string_view text, int rank) {
    if (rank < 1 || rank > max_rank)
        throw input_error("parse_poly: rank must be in [1, 32]");
    return detail::PolyParser(text, rank).parse();
}

} // namespace z2k
