#include <cmath>

#include "doctest.h"
#include "krawbound/error.hpp"
#include "krawbound/krawchouk.hpp"
#include "oracle_values.hpp"

using namespace krawbound;

namespace {
// Independent evaluation of the defining alternating sum.
BigInt kraw_direct(int n, int s, int i) {
    BigInt v = 0;
    for (int j = 0; j <= s; ++j) {
        if (j > i || s - j > n - i) continue;
        const BigInt term = exact_binomial(i, j) * exact_binomial(n - i, s - j);
        v += (j % 2 == 0) ? term : BigInt(-term);
    }
    return v;
}
}  // namespace

TEST_CASE("small table") {
    const auto t = kraw_table(4, 2);
    const std::vector<BigInt> want{6, 0, -2, 0, 6};
    CHECK(t.values == want);
}

TEST_CASE("three evaluation routes agree with the defining sum") {
    for (int n = 1; n <= 24; ++n) {
        const auto rec = kraw_tables_by_recurrence(n, n);
        for (int s = 0; s <= n; ++s) {
            const auto fast = kraw_values_fast(n, s);
            const auto tab = kraw_table(n, s);
            for (int i = 0; i <= n; ++i) {
                const BigInt d = kraw_direct(n, s, i);
                REQUIRE(tab.values[i] == d);
                REQUIRE(fast[i] == d);
                REQUIRE(rec[s].values[i] == d);
            }
        }
    }
}

TEST_CASE("log-domain values match exact values") {
    const auto exact = kraw_values_fast(200, 50);
    const auto lg = kraw_log_values(200, 50);
    const auto lr = kraw_log_values_recurrence(200, 50);
    for (int i = 0; i <= 200; ++i) {
        const int sign = exact[i] > 0 ? 1 : (exact[i] < 0 ? -1 : 0);
        CHECK(lg[i].sign == sign);
        if (sign != 0) {
            CHECK(std::abs(lg[i].log2_abs - log2_abs(exact[i])) <= 1e-9);
            CHECK(std::abs(lr[i].log2_abs - log2_abs(exact[i])) <= 1e-6 * std::max(1.0, log2_abs(exact[i])));
        }
    }
}

TEST_CASE("real evaluation") {
    CHECK(kraw_eval_real(4, 2, 1.0) == doctest::Approx(0.0));
    CHECK(kraw_eval_real(4, 2, 2.0) == doctest::Approx(-2.0));
    CHECK(kraw_eval_real(10, 3, 0.0) == doctest::Approx(120.0));
}

TEST_CASE("roots") {
    const auto r = kraw_roots(4, 2);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.roots[1] == doctest::Approx(3.0).epsilon(1e-10));
    for (int n = 2; n <= 40; ++n) {
        for (int s = 1; 2 * s <= n; ++s) {
            const auto rr = kraw_roots(n, s);
            REQUIRE(rr.roots.size() == static_cast<std::size_t>(s));
            const double spread = std::sqrt(static_cast<double>(s) * (n - s));
            CHECK(rr.roots.front() >= n / 2.0 - spread - 1e-9);
            CHECK(rr.roots.back() <= n / 2.0 + spread + 1e-9);
            const double scale = std::exp2(log2_abs(exact_binomial(n, s)));
            for (double x : rr.roots) CHECK(std::abs(kraw_eval_real(n, s, x)) <= 1e-8 * scale);
        }
    }
    CHECK_THROWS_AS(kraw_roots(4, 3), InputError);
}

TEST_CASE("moments") {
    const auto m = kraw_moments(4, 2, 4.0);
    CHECK(m.log2_ratio == doctest::Approx(std::log2(14.0 / 3.0)).epsilon(1e-12));
    CHECK(std::abs(kraw_moments(64, 16, 4.0).log2_ratio - oracle::kKrawLog2Ratio_64_16_4) <= 1e-9);
    CHECK(std::abs(kraw_moments(30, 7, 3.0).log2_ratio - oracle::kKrawLog2Ratio_30_7_3) <= 1e-9);
    // The second moment equals C(n, s).
    CHECK(std::abs(kraw_moments(50, 10, 2.0).log2_ratio) <= 1e-10);
}

TEST_CASE("concentration point and window") {
    CHECK(std::abs(solve_i0(64, 16, 4.0) - oracle::kI0_64_16_4) <= 1e-9);
    const double i0 = solve_i0(4, 1, 2.0);
    CHECK(2.0 * std::sqrt(i0 / 4 * (1 - i0 / 4)) == doctest::Approx(0.5).epsilon(1e-12));
    const auto c = lp_concentration(512, 128, 4.0, 4.0);
    CHECK(c.mass_in_window >= 0.99);
}

TEST_CASE("second-moment share between roots") {
    const auto iv = l2_between_roots(4, 2);
    REQUIRE(iv.size() == 3);
    CHECK(iv[0].attainment_factor == doctest::Approx(0.375));
}
