#include <catch2/catch_amalgamated.hpp>

#include "z2k/counting.hpp"

using namespace z2k;

TEST_CASE("gaussian binomial values and symmetry") {
    CHECK(gaussian_binomial(5, 3) == 155);
    CHECK(gaussian_binomial(5, 4) == 31);
    CHECK(gaussian_binomial(4, 2) == 35);
    CHECK(gaussian_binomial(4, 1) == 15);
    CHECK(gaussian_binomial(4, 0) == 1);
    CHECK(gaussian_binomial(7, 0) == 1);
    CHECK(gaussian_binomial(0, 0) == 1);
    for (int k = 0; k <= 8; ++k)
        for (int d = 0; d <= k; ++d)
            CHECK(gaussian_binomial(k, d) == gaussian_binomial(k, k - d));
    CHECK_THROWS_AS(gaussian_binomial(3, 4), input_error);
    CHECK_THROWS_AS(gaussian_binomial(3, -1), input_error);
    // big enough to need more than 64 bits
    CHECK(gaussian_binomial(32, 16) > BigInt(1) << 200);
}

TEST_CASE("dimension formula values") {
    CHECK(dim_zn_zn(1) == 0);
    CHECK(dim_zn_zn(2) == 1);
    CHECK(dim_zn_zn(3) == 13);
    CHECK(dim_zn_zn(4) == 511);
    CHECK(dim_zn_zn(5) == 61193);
    CHECK(dim_zn_zn(6) == 23258215);
    CHECK(dim_zn_zn(7) == BigInt("29166784185"));
    CHECK_THROWS_AS(dim_zn_zn(0), input_error);
}

TEST_CASE("dimension formula terms stay integral up to n = 12") {
    // dim_zn_zn throws internal_error if any product fails division by (i+1)!
    for (int n = 1; n <= 12; ++n)
        CHECK_NOTHROW(dim_zn_zn(n));
}

TEST_CASE("compose_dim assembles the published example") {
    const DimReport report = compose_dim(4, 5, paper_z4_component_dims());
    CHECK(report.value == 20956);
    REQUIRE(report.breakdown.size() == 3);
    CHECK(report.breakdown[0].l == 2);
    CHECK(report.breakdown[0].subspace_count == 155);
    CHECK(report.breakdown[0].component_dim == 1);
    CHECK(report.breakdown[1].l == 3);
    CHECK(report.breakdown[1].subspace_count == 155);
    CHECK(report.breakdown[1].component_dim == 32);
    CHECK(report.breakdown[2].l == 4);
    CHECK(report.breakdown[2].subspace_count == 31);
    CHECK(report.breakdown[2].component_dim == 511);

    BigInt resummed = 0;
    for (const DimBreakdownRow &row : report.breakdown)
        resummed += row.subspace_count * row.component_dim;
    CHECK(resummed == report.value);
}

TEST_CASE("compose_dim edge cases") {
    CHECK(compose_dim(4, 4, paper_z4_component_dims()).value == 1026);
    CHECK(compose_dim(1, 5, {}).value == 0); // empty range 2 <= l <= 1
    const std::map<int, BigInt> zeros{{2, 0}, {3, 0}, {4, 0}};
    CHECK(compose_dim(4, 5, zeros).value == 0);
    CHECK_THROWS_AS(compose_dim(4, 5, std::map<int, BigInt>{{2, 1}}), input_error);
}

TEST_CASE("gk bounds") {
    CHECK(gk_bounds(3) == std::pair<BigInt, BigInt>{4, 7});
    CHECK(gk_bounds(1) == std::pair<BigInt, BigInt>{0, 1});
    for (int k = 1; k <= 10; ++k) {
        const auto [lower, upper] = gk_bounds(k);
        CHECK(upper - lower == k);
        CHECK(lower <= upper);
    }
    CHECK_THROWS_AS(gk_bounds(0), input_error);
}

TEST_CASE("generator degrees exclude 2^i - 1") {
    CHECK(fk_generator_degrees(2) == std::vector<std::uint64_t>{2});
    CHECK(fk_generator_degrees(3) == std::vector<std::uint64_t>{2, 4, 5, 6});
    for (int k = 1; k <= 8; ++k) {
        const auto degrees = fk_generator_degrees(k);
        CHECK(BigInt(degrees.size()) == gk_bounds(k).first);
        for (std::uint64_t d : degrees) {
            CHECK(d < (std::uint64_t{1} << k));
            CHECK((d & (d + 1)) != 0); // not of the form 2^i - 1
        }
    }
    CHECK_THROWS_AS(fk_generator_degrees(21), input_error);
}
