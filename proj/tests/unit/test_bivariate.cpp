#include <cmath>

#include "doctest.h"
#include "krawbound/bivariate.hpp"
#include "krawbound/error.hpp"
#include "krawbound/numerics.hpp"
#include "oracle_values.hpp"

using namespace krawbound;

TEST_CASE("root-region ratio") {
    CHECK(ratio_r(0.2, 0.0) == doctest::Approx(0.6));
    CHECK(ratio_r(0.0, 0.3) == doctest::Approx(1.0));
    CHECK(ratio_r(0.1, 0.2) == doctest::Approx(oracle::kRatioR_01_02).epsilon(1e-14));
    CHECK(ratio_r(0.1, 0.1) > ratio_r(0.1, 0.15));
    CHECK_THROWS_AS(ratio_r(0.3, 0.4), DomainError);
}

TEST_CASE("integral exponent against quadrature") {
    CHECK(exponent_I(0.2, 0.0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(exponent_I(0.0, 0.3) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(exponent_I(0.1, 0.05) - oracle::kExponentI_01_005) <= 1e-7);
    CHECK(std::abs(exponent_I(0.2, 0.1) - oracle::kExponentI_02_01) <= 1e-7);
    // Differences in the point variable agree with the printed (point, degree) form.
    for (double x : {0.05, 0.2, 0.35}) {
        for (double y : {0.01, 0.5 * root_region_edge(x)}) {
            CHECK(exponent_I(x, y) - exponent_I(x, 0.0) == doctest::Approx(exponent_I_raw(y, x) - exponent_I_raw(0.0, x)).epsilon(1e-10));
        }
    }
    // The printed form tends to -1 as the degree slot tends to 0.
    CHECK(exponent_I_raw(0.2, 1e-9) == doctest::Approx(-1.0).epsilon(1e-6));
    // Degree one half leaves only the zero point in the region.
    CHECK(std::isfinite(exponent_I(0.5, 0.0)));
}

TEST_CASE("tau branches, values and symmetry") {
    CHECK(std::abs(tau(0.1, 0.05) - oracle::kTau_01_005) <= 1e-9);
    CHECK(std::abs(tau(0.3, 0.4) - oracle::kTau_03_04) <= 1e-12);
    for (double x : {0.0, 0.1, 0.25, 0.5}) {
        CHECK(tau(x, 0.0) == doctest::Approx(binary_entropy(x)).epsilon(1e-12));
        CHECK(tau(x, 0.5) == doctest::Approx(binary_entropy(x) / 2).epsilon(1e-12));
        const double e = root_region_edge(x);
        CHECK(std::abs(tau(x, e) - 0.5 * (1 + binary_entropy(x) - binary_entropy(e))) <= 1e-8);
    }
    for (int a = 0; a <= 50; ++a) {
        for (int b = 0; b <= 50; ++b) {
            const double x = a / 100.0, y = b / 100.0;
            REQUIRE(std::abs(binary_entropy(y) + tau(x, y) - binary_entropy(x) - tau(y, x)) <= 1e-8);
        }
    }
}

TEST_CASE("h and g") {
    CHECK(little_h(2.0, 0.3) == doctest::Approx(2.0 * std::sqrt(0.21)).epsilon(1e-14));
    CHECK(little_h(4.0, 0.1) == doctest::Approx(oracle::kLittleH_4_01).epsilon(1e-14));
    CHECK(little_h(3.0, 0.5) == doctest::Approx(1.0));
    CHECK(std::abs(little_g(3.0, 0.5)) <= 1e-15);
    for (double x : {0.05, 0.2, 0.4}) {
        const double h = little_h(5.0, x), g = little_g(5.0, x);
        CHECK(h * h - g * g == doctest::Approx(4 * x * (1 - x)).epsilon(1e-12));
    }
    CHECK(solve_h_inverse(3.0, 1.0) == 0.5);
    CHECK(solve_a_inverse(3.0, 0.5) == doctest::Approx(0.0));
    const double d = solve_a_inverse(2.0, 0.2);
    CHECK(std::abs((0.5 - d) * (1 - 2 * d) / ((1 - d) * (1 - d) + d * d) - 0.2) <= 1e-12);
}

TEST_CASE("psi: oracle values, boundaries, slope, baseline") {
    CHECK(std::abs(psi(4.0, 0.25).value - oracle::kPsi_4_025) <= 1e-9);
    CHECK(std::abs(psi(3.0, 0.1).value - oracle::kPsi_3_01) <= 1e-9);
    CHECK(std::abs(psi(6.0, 0.4).value - oracle::kPsi_6_04) <= 1e-9);
    const auto e = psi(4.0, 0.25);
    CHECK(std::abs(e.first_rep - e.second_rep) <= 1e-9);
    for (double p : {2.5, 4.0, 8.0}) {
        CHECK(std::abs(psi(p, 0.0).value) <= 1e-10);
        CHECK(std::abs(psi(p, 0.5).value - (p - 2) / 2) <= 1e-10);
        const double slope = psi(p, 1e-6).value / 1e-6;
        CHECK(std::abs(slope - p / 2 * std::log2(p - 1)) <= 1e-3);
        for (double x : {0.1, 0.3}) CHECK(psi(p, x).value < psi_hypercontractive(p, x));
    }
    CHECK(std::abs(psi(2.0, 0.3).value) <= 1e-10);
}

TEST_CASE("pi: zero branch, symmetry, minimum form") {
    CHECK(pi_fn(0.3, 0.3) == 0.0);
    CHECK(std::abs(pi_fn(0.1, 0.05) - oracle::kPi_01_005) <= 1e-9);
    CHECK(std::abs(pi_fn(0.1, 0.05) - pi_min_form(0.1, 0.05)) <= 1e-8);
    for (double x : {0.05, 0.15, 0.3}) {
        for (double y : {0.02, 0.1, 0.2}) {
            CHECK(std::abs(pi_fn(x, y) - pi_fn(y, x)) <= 1e-8);
            CHECK(pi_fn(x, y) <= 1e-12);
        }
    }
}

TEST_CASE("alpha maximiser and phi") {
    CHECK(x_star(0.5, 0.2) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(x_star(0.3, 0.0) == 0.0);
    const auto np = alpha_and_xstar(0.25, 0.1);
    CHECK(np.x_star == doctest::Approx(oracle::kXStar_025_01).epsilon(1e-12));
    CHECK(np.alpha_max == doctest::Approx(oracle::kAlphaMax_025_01).epsilon(1e-10));
    for (int k = 0; k <= 10000; ++k) REQUIRE(alpha_value(0.25, 0.1, 0.25 * k / 10000) <= np.alpha_max + 1e-9);
    CHECK(std::abs(phi(0.3, 0.2) - oracle::kPhi_03_02) <= 1e-10);
    CHECK(phi(0.2, 0.0) == doctest::Approx(binary_entropy(0.2) - 1.0).epsilon(1e-12));
    CHECK(std::abs(phi(0.5, 0.3)) <= 1e-12);
    CHECK(std::abs(tilde_phi(1.0, 0.2)) <= 1e-12);
    CHECK(std::abs(phi(0.3, 0.2) - phi_transform(0.3, 0.2)) <= 1e-6);
    const double h = 1e-6;
    // The slope at 0 is 2, but the difference quotient approaches it only
    // logarithmically in the step; match the oracle quotients and their trend.
    const double q6 = (tilde_phi(h, 0.2) - tilde_phi(0.0, 0.2)) / h;
    const double q3 = (tilde_phi(1e-3, 0.2) - tilde_phi(0.0, 0.2)) / 1e-3;
    CHECK(std::abs(q6 - oracle::kTildePhiSlopeAtZero_1e6) <= 1e-6);
    CHECK(std::abs(q3 - oracle::kTildePhiSlopeAtZero_1e3) <= 1e-9);
    CHECK(q3 < q6);
    CHECK(q6 < 2.0);
    CHECK((tilde_phi(1.0, 0.2) - tilde_phi(1.0 - h, 0.2)) / h == doctest::Approx(1.0 / 0.8).epsilon(1e-2));
}

TEST_CASE("eta") {
    CHECK(std::abs(eta_p(3.0, 0.0, 0.2)) <= 1e-12);
    CHECK(eta(0.1, 0.2) < 0.0);
    CHECK(std::abs(eta(0.1, 0.2) - oracle::kEta_01_02) <= 1e-9);
    double prev = eta(0.0, 0.0);
    for (int k = 1; k <= 20; ++k) {
        const double v = eta(0.5 * k / 20, 0.0);
        CHECK(v <= prev + 1e-12);
        prev = v;
    }
    CHECK_THROWS(eta_p(3.0, 0.9, 0.2));
}

TEST_CASE("edge-isoperimetric minimum") {
    CHECK(edge_iso_min_check(0.3, 0.2).gap <= 1e-6);
    CHECK(edge_iso_min_check(0.3, 2 * 0.3 * 0.7).gap <= 1e-6);
    CHECK(std::abs(edge_iso_min_check(0.3, 0.0).closed_form) <= 1e-12);
}
