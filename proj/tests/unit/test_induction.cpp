#include <cmath>

#include "doctest.h"
#include "krawbound/error.hpp"
#include "krawbound/induction.hpp"
#include "oracle_values.hpp"

using namespace krawbound;

TEST_CASE("P and F") {
    CHECK(big_P(4.0, 4.0) == doctest::Approx(41.0));
    CHECK(cap_F(3.0, 0.0, 4.0) == 3.0);
    CHECK(cap_F(2.0, 1.0, 3.0) == doctest::Approx(oracle::kCapF_2_1_3).epsilon(1e-10));
    CHECK_THROWS_AS(big_P(-1.0, 3.0), InputError);
}

TEST_CASE("induction parameters against the oracle") {
    const auto ip = induction_params(64, 16, 4.0);
    CHECK(std::abs(ip.i0 - oracle::kI0_64_16_4) <= 1e-9);
    CHECK(ip.rho == doctest::Approx(oracle::kRho_64_16_4).epsilon(1e-10));
    CHECK(ip.phi_big == doctest::Approx(oracle::kPhiBig_64_16_4).epsilon(1e-10));
    CHECK(ip.rho > 1.0);
    CHECK(ip.rho < 3.0);
    CHECK(ip.t_residual <= 1e-12);
    CHECK(ip.stationarity_residual <= 1e-8);
    const double F = cap_F(std::pow(ip.rho, 2.0), 1.0, 4.0);
    CHECK(std::abs(F - ip.phi_big) <= 1e-9 * ip.phi_big);
    CHECK(cap_F_at_u(ip.rho, 4.0, ip.u_star) == doctest::Approx(ip.phi_big).epsilon(1e-9));
    CHECK_THROWS_AS(induction_params(64, 32, 4.0), InputError);
}

TEST_CASE("Hanner near-equality shrinks with n") {
    double prev = 1.0;
    for (int n : {64, 128, 256, 512}) {
        const auto h = hanner_gap_kraw(n, n / 4, 4.0);
        CHECK(h.log2_ratio_per_n >= 0.0);
        CHECK(h.log2_ratio_per_n < prev);
        prev = h.log2_ratio_per_n;
    }
}

TEST_CASE("recursion residual shrinks with n") {
    const auto a = recursion_residual(512, 128, 4.0);
    const auto b = recursion_residual(1024, 256, 4.0);
    CHECK(b.residual < a.residual);
    CHECK(b.ratio_residual < a.ratio_residual);
    const auto two = recursion_residual(100, 20, 2.0);
    CHECK(two.residual == 0.0);
}
