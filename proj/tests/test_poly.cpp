#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "z2k/poly.hpp"
#include "z2k/poly_text.hpp"

using namespace z2k;

namespace {

BitVector bv(const char *s) { return BitVector::from_string(s); }

Monomial mono(std::initializer_list<const char *> factors, int rank) {
    Monomial m(rank);
    for (const char *f : factors)
        m.multiply_by(bv(f), 1);
    return m;
}

// Small random polynomials for property checks.
Poly random_poly(std::mt19937 &rng, int rank, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<std::uint32_t> word(1, (1u << rank) - 1);
    std::vector<Monomial> terms;
    const int count = nterms(rng);
    for (int t = 0; t < count; ++t) {
        Monomial m(rank);
        const int d = deg(rng);
        for (int i = 0; i < d; ++i)
            m.multiply_by(BitVector(rank, word(rng)), 1);
        terms.push_back(std::move(m));
    }
    return Poly::from_terms(std::move(terms), rank);
}

} // namespace

TEST_CASE("monomial canonicalization and accessors") {
    Monomial m(3);
    m.multiply_by(bv("010"), 1);
    m.multiply_by(bv("100"), 2);
    m.multiply_by(bv("010"), 1);
    CHECK(m.degree() == 4);
    CHECK(m.factor_count() == 2);
    CHECK(m.exponent_of(bv("010")) == 2);
    CHECK(m.exponent_of(bv("100")) == 2);
    CHECK(m.exponent_of(bv("001")) == 0);
    CHECK(m.factors() == std::vector<BitVector>{bv("010"), bv("100")});

    CHECK(Monomial::unit(3).is_unit());
    CHECK(Monomial::unit(3).degree() == 0);
    CHECK(Monomial::unit(3).factors().empty());

    CHECK_THROWS_AS(Monomial::unit(3).multiply_by(bv("000"), 1), input_error);
    CHECK_THROWS_AS(mono({"10"}, 2) * mono({"100"}, 3), input_error);
}

TEST_CASE("monomial exponent overflow is a checked error") {
    Monomial m(2);
    m.multiply_by(bv("10"), 0xFFFFFFFFu);
    CHECK_THROWS_AS(m.multiply_by(bv("10"), 1), input_error);
    CHECK_THROWS_AS(m.pow(2), input_error);
}

TEST_CASE("canonical monomial order: degree first, then factor sequence") {
    const Monomial u = Monomial::unit(2);
    const Monomial r2 = mono({"01"}, 2);
    const Monomial r1 = mono({"10"}, 2);
    const Monomial r2sq = mono({"01", "01"}, 2);
    const Monomial r2r1 = mono({"01", "10"}, 2);
    CHECK(u < r2);
    CHECK(r2 < r1);
    CHECK(r1 < r2sq); // degree dominates
    CHECK(r2sq < r2r1); // more copies of the smaller factor sorts first
}

TEST_CASE("addition is the symmetric difference") {
    const Poly a = parse_poly("[10]*[01]", 2);
    const Poly b = parse_poly("[10]*[01]+[10]^2", 2);
    CHECK(a + b == parse_poly("[10]^2", 2));
    CHECK(a + Poly::zero(2) == a);
    CHECK((a + a).is_zero());
    CHECK_THROWS_AS(a + Poly::zero(3), input_error);
}

TEST_CASE("multiplication distributes and squares termwise") {
    const Poly sum = parse_poly("[10]+[01]", 2);
    CHECK(sum * sum == parse_poly("[10]^2+[01]^2", 2));
    const Poly p = parse_poly("[10]*[01]+[11]^3", 2);
    CHECK(p * Poly::one(2) == p);
    CHECK(p * Poly::zero(2) == Poly::zero(2));
}

TEST_CASE("pow uses the characteristic-2 Frobenius") {
    const Poly p = parse_poly("[10]+[01]", 2);
    CHECK(p.pow(0) == Poly::one(2));
    CHECK(p.pow(1) == p);
    CHECK(p.pow(2) == parse_poly("[10]^2+[01]^2", 2));
    CHECK(p.pow(3) == p * p * p);
    CHECK(p.pow(5) == p * p * p * p * p);
    CHECK(Poly::zero(2).pow(0) == Poly::one(2));
    CHECK(Poly::zero(2).pow(4) == Poly::zero(2));
}

TEST_CASE("degree and homogeneity") {
    CHECK(Poly::zero(2).degree() == 0);
    CHECK(Poly::zero(2).is_homogeneous());
    CHECK(Poly::one(2).is_homogeneous());
    CHECK(parse_poly("[10]*[01]+[11]^2", 2).is_homogeneous());
    CHECK_FALSE(parse_poly("[10]+[11]^2", 2).is_homogeneous());
    CHECK(parse_poly("[10]+[11]^2", 2).degree() == 2);
}

TEST_CASE("ring axioms on sampled triples") {
    std::mt19937 rng(0x5eed0001);
    for (int trial = 0; trial < 200; ++trial) {
        const int rank = 1 + static_cast<int>(rng() % 4);
        const Poly p = random_poly(rng, rank, 4, 3);
        const Poly q = random_poly(rng, rank, 4, 3);
        const Poly r = random_poly(rng, rank, 4, 3);
        REQUIRE(p + q == q + p);
        REQUIRE((p + q) + r == p + (q + r));
        REQUIRE(p * q == q * p);
        REQUIRE((p * q) * r == p * (q * r));
        REQUIRE(p * (q + r) == p * q + p * r);
        REQUIRE(p + Poly::zero(rank) == p);
        REQUIRE(p * Poly::one(rank) == p);
        REQUIRE((p + p).is_zero());
    }
}

TEST_CASE("Frobenius squaring equals multiplication by itself") {
    std::mt19937 rng(0x5eed0002);
    for (int trial = 0; trial < 200; ++trial) {
        const int rank = 1 + static_cast<int>(rng() % 4);
        const Poly p = random_poly(rng, rank, 5, 3);
        REQUIRE(p.frobenius_square() == p * p);
        REQUIRE(p.pow(2) == p * p);
    }
}

TEST_CASE("grading: homogeneous times homogeneous adds degrees") {
    std::mt19937 rng(0x5eed0003);
    std::uniform_int_distribution<std::uint32_t> word(1, 7);
    for (int trial = 0; trial < 100; ++trial) {
        auto homogeneous = [&](int deg) {
            std::vector<Monomial> terms;
            const int count = 1 + static_cast<int>(rng() % 3);
            for (int t = 0; t < count; ++t) {
                Monomial m(3);
                for (int i = 0; i < deg; ++i)
                    m.multiply_by(BitVector(3, word(rng)), 1);
                terms.push_back(std::move(m));
            }
            return Poly::from_terms(std::move(terms), 3);
        };
        const int da = 1 + static_cast<int>(rng() % 3);
        const int db = 1 + static_cast<int>(rng() % 3);
        const Poly a = homogeneous(da);
        const Poly b = homogeneous(db);
        const Poly ab = a * b;
        REQUIRE(ab.is_homogeneous());
        if (!a.is_zero() && !b.is_zero() && !ab.is_zero())
            REQUIRE(ab.degree() == static_cast<std::uint64_t>(da + db));
    }
}
