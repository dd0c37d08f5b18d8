#include <cmath>
#include <vector>

#include "doctest.h"
#include "krawbound/error.hpp"
#include "krawbound/numerics.hpp"
#include "krawbound/rng.hpp"
#include "oracle_values.hpp"

using namespace krawbound;

TEST_CASE("binary entropy matches the high-precision oracle") {
    CHECK(binary_entropy(0.11) == doctest::Approx(oracle::kEntropy011).epsilon(1e-14));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("inverse entropy") {
    const double t = inverse_entropy(0.5);
    CHECK(std::abs(binary_entropy(t) - 0.5) <= 1e-12);
    CHECK(t == doctest::Approx(oracle::kInverseEntropyHalf).epsilon(1e-12));
    CHECK(inverse_entropy(0.0) == 0.0);
    CHECK(inverse_entropy(1.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(inverse_entropy(1.5), InputError);
}

TEST_CASE("binomials, exact and in log domain") {
    CHECK(exact_binomial(30, 15) == BigInt(155117520));
    CHECK_THROWS_AS(exact_binomial(5, 7), InputError);
    CHECK(exact_binomial(40, 13) == exact_binomial(40, 27));
    CHECK(std::abs(log2_binomial(1000, 500) - oracle::kLog2Binom1000_500) <= 1e-10);
    CHECK(std::abs(log2_binomial(1000, 500) - log2_abs(exact_binomial(1000, 500))) <= 1e-10);
    const auto row = binomial_row(10);
    BigInt sum = 0;
    for (const auto& c : row) sum += c;
    CHECK(sum == BigInt(1024));
}

TEST_CASE("log-sum-exp against a direct sum") {
    const CounterRng rng(7);
    std::vector<double> e;
    double direct = 0.0;
    for (int k = 0; k < 100; ++k) {
        e.push_back(-20.0 + 30.0 * rng.uniform_at(k));
        direct += std::exp2(e.back());
    }
    CHECK(std::abs(log_sum_exp2(std::span<const double>(e)) - std::log2(direct)) <= 1e-12);
    // Exponents far beyond double range stay finite.
    const std::vector<double> big{5000.0, 5000.0};
    CHECK(log_sum_exp2(std::span<const double>(big)) == doctest::Approx(5001.0));
}

TEST_CASE("LogValue arithmetic") {
    const LogValue a = LogValue::from_value(8.0);
    CHECK(a.exponent == doctest::Approx(3.0));
    CHECK((a * LogValue::from_value(4.0)).exponent == doctest::Approx(5.0));
    CHECK(LogValue::zero_value() < a);
    CHECK(max(a, LogValue::from_value(2.0)) == a);
}

TEST_CASE("counter generator is reproducible and splits") {
    const CounterRng a(42);
    const CounterRng b(42);
    CHECK(a.bits_at(5) == b.bits_at(5));
    CHECK(a.split(1).bits_at(0) != a.split(2).bits_at(0));
    double mean = 0.0;
    for (int k = 0; k < 20000; ++k) mean += a.uniform_at(k);
    CHECK(mean / 20000 == doctest::Approx(0.5).epsilon(0.02));
}
