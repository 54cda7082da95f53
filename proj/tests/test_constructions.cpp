#include <catch2/catch_amalgamated.hpp>

#include "z2k/constructions.hpp"
#include "z2k/fixed_points.hpp"
#include "z2k/poly_text.hpp"

using namespace z2k;

namespace {

BitVector bv(const char *s) { return BitVector::from_string(s); }

} // namespace

TEST_CASE("rp_standard expansions") {
    CHECK(format(rp_standard(2).poly()) == "[01]*[10]+[01]*[11]+[10]*[11]");
    CHECK(format(rp_standard(3).poly()) ==
          "[001]*[010]*[100]+[001]*[011]*[101]+[010]*[011]*[110]+[100]*[101]*[110]");

    for (int k = 2; k <= 6; ++k) {
        const FixedPointData d = rp_standard(k);
        CHECK(d.poly().term_count() == static_cast<std::size_t>(k) + 1);
        CHECK(d.degree() == static_cast<std::uint64_t>(k));
        CHECK(d.poly().is_homogeneous());
        CHECK(spanning_check(d));
    }
    CHECK_THROWS_AS(rp_standard(1), input_error);
}

TEST_CASE("lambda tables") {
    const FormFamily f4 = lambda_family(4);
    CHECK(f4.lambda == std::vector<Functional>{bv("0000"), bv("1000"), bv("1110"), bv("1100")});
    CHECK(f4.lambda_prime ==
          std::vector<Functional>{bv("0000"), bv("1000"), bv("1111"), bv("1101")});
    CHECK(f4.rho1k == bv("1001"));

    const FormFamily f6 = lambda_family(6);
    CHECK(f6.lambda[2] == bv("111100"));
    CHECK(f6.lambda[3] == bv("110100"));
    CHECK(f6.rho1k == bv("100001"));

    for (int k = 4; k <= 10; k += 2) {
        const FormFamily family = lambda_family(k);
        CHECK(family.lambda[0].is_zero());
        CHECK(family.lambda_prime[0].is_zero());
        CHECK(family.lambda_prime[1] == family.lambda[1]);
        const Functional rho_k = BitVector::unit(k, k);
        for (int j = 2; j < k; ++j)
            CHECK(family.lambda_prime[static_cast<std::size_t>(j)] ==
                  family.lambda[static_cast<std::size_t>(j)] + rho_k);
    }

    CHECK_THROWS_AS(lambda_family(2), input_error);
    CHECK_THROWS_AS(lambda_family(5), input_error);
    CHECK_THROWS_AS(lambda_family(3), input_error);
}

TEST_CASE("user-supplied form tables are validated") {
    const FormFamily f4 = lambda_family(4);
    CHECK_NOTHROW(FormFamily::validated(4, f4.lambda, f4.lambda_prime));

    auto broken = f4.lambda_prime;
    broken[2] = f4.lambda[2]; // drops the rho_k offset
    CHECK_THROWS_AS(FormFamily::validated(4, f4.lambda, broken), input_error);

    auto duplicated = f4.lambda;
    duplicated[3] = duplicated[2];
    CHECK_THROWS_AS(FormFamily::validated(4, duplicated, f4.lambda_prime), input_error);
}

TEST_CASE("sigma pair") {
    const auto [s1, s2] = sigma(4);
    CHECK(format(s1) ==
          "[0010]*[0100]*[1100]+[0010]*[0110]*[1110]+[0100]*[0110]*[1000]+"
          "[1000]*[1100]*[1110]");
    CHECK(s1 ==
          parse_poly("[1000]*[1110]*[1100] + [1000]*[0110]*[0100] + "
                     "[1110]*[0110]*[0010] + [1100]*[0100]*[0010]",
                     4));
    for (int k = 4; k <= 6; k += 2) {
        const auto [a, b] = sigma(k);
        CHECK(a.term_count() == static_cast<std::size_t>(k));
        CHECK(b.term_count() == static_cast<std::size_t>(k));
        CHECK(a.degree() == static_cast<std::uint64_t>(k) - 1);
        CHECK(b.degree() == static_cast<std::uint64_t>(k) - 1);
        CHECK(a.is_homogeneous());
        CHECK(b.is_homogeneous());
        CHECK(a != b);
    }
}

TEST_CASE("squaring sigma doubles every exponent") {
    const auto [s1, s2] = sigma(4);
    const Poly square = s1.pow(2);
    for (const Monomial &m : square.terms())
        for (const auto &[f, e] : m.entries())
            CHECK(e % 2 == 0);
}

TEST_CASE("f_poly grading, spanning and frozen term counts") {
    CHECK(f_poly(4, 0).is_zero());
    CHECK(f_poly(6, 0).is_zero());

    CHECK(f_poly(4, 2).degree() == 7);
    CHECK(f_poly(4, 1).poly().term_count() == 8);
    CHECK(f_poly(4, 2).poly().term_count() == 8);
    CHECK(f_poly(4, 3).poly().term_count() == 32);
    CHECK(f_poly(6, 1).poly().term_count() == 12);
    CHECK(f_poly(6, 2).poly().term_count() == 12);
    CHECK(f_poly(6, 3).poly().term_count() == 72);

    for (int k = 4; k <= 6; k += 2)
        for (std::uint32_t m = 1; m <= 3; ++m) {
            const FixedPointData f = f_poly(k, m);
            CHECK_FALSE(f.is_zero());
            CHECK(f.degree() == m * (static_cast<std::uint64_t>(k) - 1) + 1);
            CHECK(f.poly().is_homogeneous());
            CHECK(spanning_check(f));
        }
}

TEST_CASE("fixed point enumeration matches the closed form") {
    const auto entries41 = enumerate_fixed_points(4, 1);
    CHECK(entries41.size() == 8);
    CHECK(entries41[0].label == "+P1");
    CHECK(entries41[1].label == "+Q1");
    CHECK(entries41[2].label == "+P2");
    CHECK(entries41[3].label == "+Q2");
    CHECK(entries41[4].label == "-P1");

    const auto entries42 = enumerate_fixed_points(4, 2);
    CHECK(entries42.size() == 32);
    CHECK(entries42[0].label == "+P1,P1");
    CHECK(entries42[1].label == "+P1,Q1");

    for (int k = 4; k <= 6; k += 2)
        for (std::uint32_t m = 1; m <= 3; ++m) {
            const auto entries = enumerate_fixed_points(k, m);
            std::size_t expected = 2;
            for (std::uint32_t i = 0; i < m; ++i)
                expected *= static_cast<std::size_t>(k);
            REQUIRE(entries.size() == expected);
            Poly sum(k);
            for (const FixedPointEntry &e : entries) {
                REQUIRE(e.monomial.degree() ==
                        m * (static_cast<std::uint64_t>(k) - 1) + 1);
                sum += Poly::monomial(e.monomial);
            }
            REQUIRE(sum == f_poly(k, m).poly());
        }

    CHECK_THROWS_AS(enumerate_fixed_points(4, 0), input_error);
}

TEST_CASE("every tangent representation is divisible by rho_1k exactly once") {
    for (int k = 4; k <= 6; k += 2) {
        const FormFamily family = lambda_family(k);
        for (const FixedPointEntry &e : enumerate_fixed_points(k, 2))
            CHECK(e.monomial.exponent_of(family.rho1k) == 1);
    }
}

TEST_CASE("witness monomial shape and membership") {
    const Monomial w41 = witness_monomial(4, 1);
    CHECK(format(w41) == "[1000]*[1001]*[1100]*[1110]");
    CHECK(format(witness_monomial(4, 2)) == "[1000]^2*[1001]*[1100]^2*[1110]^2");
    CHECK(Subspace::span(w41.factors(), 4) == Subspace::full(4));

    for (int k = 4; k <= 6; k += 2) {
        const FormFamily family = lambda_family(k);
        for (std::uint32_t m = 1; m <= 4; ++m) {
            const Monomial w = witness_monomial(k, m);
            CHECK(w.factor_count() == static_cast<std::size_t>(k));
            CHECK(w.degree() == m * (static_cast<std::uint64_t>(k) - 1) + 1);
            CHECK(w.exponent_of(family.rho1k) == 1);
            CHECK(f_poly(k, m).poly().contains(w));
        }
    }
}
