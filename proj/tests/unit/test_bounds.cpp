#include <cmath>

#include "doctest.h"
#include "krawbound/bivariate.hpp"
#include "krawbound/bounds.hpp"
#include "krawbound/cube.hpp"
#include "krawbound/error.hpp"
#include "krawbound/krawchouk.hpp"
#include "oracle_values.hpp"

using namespace krawbound;

TEST_CASE("moment bound") {
    CHECK(moment_bound(20, 5, 2.0) == 0.0);
    CHECK(moment_bound(20, 0, 4.0) == 0.0);
    CHECK(moment_bound(8, 2, 4.0) == doctest::Approx(8 * oracle::kPsi_4_025).epsilon(1e-9));
    for (int n : {8, 16, 32}) {
        for (int s = 1; 2 * s <= n; ++s) {
            CHECK(moment_bound(n, s, 4.0) < psi_hypercontractive(4.0, double(s) / n) * n);
            CHECK(moment_gap(n, s, 4.0).gap_log2 >= -1e-9);
        }
    }
    CHECK(moment_gap(4, 2, 4.0).kraw_log2 == doctest::Approx(std::log2(14.0 / 3.0)));
    CHECK_THROWS_AS(moment_bound(10, 6, 4.0), InputError);
}

TEST_CASE("tail bound on Krawchouk polynomials") {
    const auto r = kraw_tail_check(256, 64, 20);
    CHECK(r.pass);
    CHECK(r.lhs_log2n <= r.rhs_log2n);
    const auto t = tail_bound(100, 25, 50);
    CHECK(t.prob_exponent == doctest::Approx(0.0));
}

TEST_CASE("edge-isoperimetric bounds") {
    CHECK_THROWS_AS(edge_iso_bound(40, 0.1, 0), InputError);
    CHECK_THROWS_AS(edge_iso_bound(40, 0.1, 8), InputError);
    for (int n = 10; n <= 60; n += 10) {
        for (int s = 2; 2 * s <= n; ++s) {
            const double actual = std::log2(double(s) * (n - s));
            const double bound = edge_iso_bound(n, double(s) / n, 2) * n;
            CHECK(actual <= bound + 1e-9);
            CHECK(std::exp2(bound) <= kleitman_west_bound(n, s) * (1 + 1e-12));
        }
    }
    for (int i = 2; i <= 14; i += 2) CHECK(sphere_edge_iso_log2_factor(40, 10, i) >= -1e-9);
}

TEST_CASE("noise bounds") {
    CHECK(hypercontractive_bound(0.0, 0.2) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(hypercontractive_bound(0.1, 0.2) < 0.0);
    CHECK_THROWS_AS(hypercontractive_bound(0.1, 0.2, 1.2), DomainError);
    CHECK(set_noise_bound(0.5, 0.1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(sphere_hc_log2_factor(16, 4, 0.15) >= 0.0);
    // Brute force on the sphere agrees with the weight-profile evaluation.
    const auto f = sphere_indicator(12, 3).second;
    const double d = 2 * 0.15 * 0.85;
    CHECK(std::log2(inner(apply_noise(f, d), f)) == doctest::Approx(sphere_noise_log2(12, 3, d)).epsilon(1e-10));
}

TEST_CASE("projection bounds") {
    for (int k = 0; k <= 16; ++k) CHECK(sphere_projection_log2_factor(16, 3, k, 2.0) >= -1e-9);
    CHECK(supported_projection_bound(10, 0, 0.5) == 0.0);
    CHECK_THROWS_AS(projection_bound(10, 3, 4.0, 0.9), InputError);
}

TEST_CASE("undetected error exponent") {
    CHECK(std::abs(ue_exponent(1.0, 0.1)) <= 1e-12);
    CHECK(std::abs(ue_exponent(0.5, 0.1) - oracle::kUeExponent_05_01) <= 1e-8);
    // Exact distance distribution of the union of adjacent spheres against pair counting.
    const int m = 8, s = 3;
    CubeSubset A(m);
    for (std::uint64_t x = 0; x < 256; ++x) {
        const int w = std::popcount(x);
        if (w == s || w == s - 1) A.insert(x);
    }
    const auto pairs = distance_distribution_pairs(A);
    const auto formula = adjacent_sphere_union_distances(m, s);
    for (int i = 0; i <= m; ++i) CHECK(BigInt(pairs.a[i]) == formula[i]);
    CHECK(std::log2(undetected_error_probability(A, 0.1)) == doctest::Approx(sphere_union_ue_log2(m + 1, s, 0.1)).epsilon(1e-10));
}
