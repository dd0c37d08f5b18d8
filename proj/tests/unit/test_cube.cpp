#include <bit>
#include <cmath>

#include "doctest.h"
#include "krawbound/cube.hpp"
#include "krawbound/krawchouk.hpp"

using namespace krawbound;

namespace {
CubeFunction random_point_function(int n, std::uint64_t seed) {
    const CounterRng rng(seed);
    CubeFunction f = CubeFunction::zeros(n);
    for (Eigen::Index x = 0; x < f.size(); ++x) f.data(x) = rng.normal_at(static_cast<std::uint64_t>(x));
    return f;
}

// Direct double sum for the Fourier coefficient at a.
double direct_coefficient(const CubeFunction& f, std::uint64_t a) {
    double acc = 0.0;
    for (Eigen::Index x = 0; x < f.size(); ++x) {
        acc += (std::popcount(a & static_cast<std::uint64_t>(x)) % 2 ? -1.0 : 1.0) * f.data(x);
    }
    return acc / static_cast<double>(f.size());
}
}  // namespace

TEST_CASE("transform round trip and direct coefficients") {
    const CubeFunction f = random_point_function(7, 3);
    const CubeFunction g = to_fourier(f);
    CHECK(g.domain == Domain::Fourier);
    for (std::uint64_t a : {0u, 1u, 5u, 77u, 127u}) CHECK(g.data(a) == doctest::Approx(direct_coefficient(f, a)).epsilon(1e-12));
    CHECK((to_point(g).data - f.data).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("Parseval") {
    const CubeFunction f = random_point_function(10, 11);
    const auto w = level_weights(f);
    double sum = 0.0;
    for (double v : w) sum += v;
    CHECK(sum == doctest::Approx(std::pow(lp_norm(f, 2.0), 2.0)).epsilon(1e-12));
}

TEST_CASE("noise operator: multiplier, kernel, semigroup") {
    const CubeFunction f = random_point_function(8, 5);
    const double e1 = 0.1, e2 = 0.23;
    CHECK((apply_noise(f, e1).data - apply_noise_kernel(f, e1).data).cwiseAbs().maxCoeff() <= 1e-10);
    const auto twice = apply_noise(apply_noise(f, e1), e2);
    const auto once = apply_noise(f, e1 + e2 - 2 * e1 * e2);
    CHECK((twice.data - once.data).cwiseAbs().maxCoeff() <= 1e-10);
    // ||T_eps f||^2 = <T_delta f, f> with delta = 2 eps (1 - eps).
    const double lhs = std::pow(lp_norm(apply_noise(f, e1), 2.0), 2.0);
    CHECK(lhs == doctest::Approx(inner(apply_noise(f, 2 * e1 * (1 - e1)), f)).epsilon(1e-10));
    CHECK(lhs == doctest::Approx(noise_inner(f, 2 * e1 * (1 - e1))).epsilon(1e-10));
    CHECK_THROWS_AS(apply_noise(f, 0.6), InputError);
}

TEST_CASE("hypercontractive inequality holds on random functions") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const CubeFunction f = random_point_function(8, seed);
        const double eps = 0.05 + 0.02 * static_cast<double>(seed);
        const double p = 1.0 + (1.0 - 2 * eps) * (1.0 - 2 * eps);
        CHECK(lp_norm(apply_noise(f, eps), 2.0) <= lp_norm(f, p) * (1.0 + 1e-12));
    }
}

TEST_CASE("sphere indicator: coefficients and level masses") {
    const int n = 12, s = 4;
    const auto [S, f] = sphere_indicator(n, s);
    CHECK(S.size() == 495);
    const auto g = to_fourier(f);
    const auto K = kraw_values_fast(n, s);
    for (Eigen::Index a = 0; a < g.size(); ++a) {
        const double want = K[std::popcount(static_cast<std::uint64_t>(a))].convert_to<double>() / 4096.0;
        REQUIRE(std::abs(g.data(a) - want) <= 1e-12);
    }
    const int m = 16, r = 3;
    const auto f16 = sphere_indicator(m, r).second;
    const auto K16 = kraw_values_fast(m, r);
    for (int k = 0; k <= m; ++k) {
        const double want = std::sqrt(exact_binomial(m, k).convert_to<double>()) * std::abs(K16[k].convert_to<double>()) / 65536.0;
        CHECK(lp_norm(spectral_project(f16, k), 2.0) == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("Krawchouk moments through the cube") {
    const int n = 10, s = 3;
    // Unit coefficients on level s give K_s(|x|) in the point domain.
    CubeFunction F = CubeFunction::zeros(n, Domain::Fourier);
    for (Eigen::Index a = 0; a < F.size(); ++a) F.data(a) = (std::popcount(static_cast<std::uint64_t>(a)) == s) ? 1.0 : 0.0;
    const double lhs = std::log2(std::pow(lp_norm(F, 4.0), 4.0)) - 2.0 * std::log2(exact_binomial(n, s).convert_to<double>());
    CHECK(lhs == doctest::Approx(kraw_moments(n, s, 4.0).log2_ratio).epsilon(1e-10));
}

TEST_CASE("distance distribution: pairs, spectrum, spheres") {
    const auto S = sphere_indicator(10, 3).first;
    const auto a = distance_distribution_pairs(S);
    const auto b = distance_distribution_spectral(S);
    CHECK(a.a == b.a);
    for (int j = 0; j <= 3; ++j) {
        const auto want = S.size() * exact_binomial(3, j).convert_to<std::uint64_t>() * exact_binomial(7, j).convert_to<std::uint64_t>();
        CHECK(a.a[2 * j] == want);
    }
}

TEST_CASE("undetected error on the full cube") {
    CubeSubset A(2);
    for (std::uint64_t x = 0; x < 4; ++x) A.insert(x);
    CHECK(undetected_error_probability(A, 0.1) == doctest::Approx(0.19).epsilon(1e-12));
}

TEST_CASE("tensor powers multiply moments") {
    const CubeFunction f = random_point_function(6, 9);
    const auto F = tensor_power(f, 2);
    CHECK(F.n == 12);
    CHECK(std::pow(lp_norm(F, 2.0), 2.0) == doctest::Approx(std::pow(lp_norm(f, 2.0), 4.0)).epsilon(1e-10));
    CHECK(std::pow(lp_norm(F, 3.0), 3.0) == doctest::Approx(std::pow(lp_norm(f, 3.0), 6.0)).epsilon(1e-10));
}

TEST_CASE("random homogeneous polynomials live on one level") {
    const auto f = random_homogeneous(9, 4, CounterRng(1));
    const auto w = level_weights(f);
    for (int k = 0; k <= 9; ++k) {
        if (k != 4) CHECK(std::abs(w[k]) <= 1e-20);
    }
    CHECK(w[4] > 0.0);
    CHECK(level_masks(9, 4).size() == 126);
}
