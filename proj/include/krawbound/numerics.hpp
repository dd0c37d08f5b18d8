#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "krawbound/error.hpp"

namespace krawbound {

using BigInt = boost::multiprecision::cpp_int;

/// Largest dimension served by exact big-integer paths.
inline constexpr int kExactCap = 4096;

/// Base-2 logarithm of a nonnegative magnitude, with an explicit zero flag.
/// Zero orders below every finite value, absorbs under multiplication and is
/// the identity under max and under addition of magnitudes.
struct LogValue {
    double exponent = 0.0;
    bool zero = true;

    static LogValue from_log2(double e) { return {e, false}; }
    static LogValue from_value(double v);
    static LogValue zero_value() { return {}; }

    /// Magnitude as a double; underflows to 0 and overflows to inf.
    double value() const;
};

bool operator<(const LogValue& a, const LogValue& b);
bool operator==(const LogValue& a, const LogValue& b);
LogValue operator*(const LogValue& a, const LogValue& b);
LogValue max(const LogValue& a, const LogValue& b);

/// H(t) = -t log2 t - (1-t) log2(1-t), with H(0) = H(1) = 0.
double binary_entropy(double t);

/// The unique t in [0, 1/2] with H(t) = y, by 60 bisection steps.
double inverse_entropy(double y);

/// log2 C(n, k) through log-gamma.
double log2_binomial(std::int64_t n, std::int64_t k);

/// Exact C(n, k) for n <= kExactCap.
BigInt exact_binomial(int n, int k);

/// Row C(n, 0..n) computed multiplicatively, exact.
std::vector<BigInt> binomial_row(int n);

/// log2 |v|, accurate to double precision for any size; -inf for zero.
double log2_abs(const BigInt& v);

/// log2 of sum_i 2^{terms_i}; the empty sum gives the zero LogValue.
LogValue log_sum_exp2(std::span<const LogValue> terms);

/// Convenience overload for raw exponents (all nonzero).
double log_sum_exp2(std::span<const double> exponents);

/// Root of a function with a sign change on [lo, hi], by bisection capped at
/// `iterations` halvings or an interval width of `tol`. Throws DomainError
/// when the endpoints do not bracket a root.
template <class F>
double bisect(F&& f, double lo, double hi, int iterations = 200, double tol = 0.0) {
    boost::uintmax_t max_iter = static_cast<boost::uintmax_t>(iterations) + 3;
    auto stop = [tol](double a, double b) { return b - a <= tol; };
    try {
        const auto r = boost::math::tools::bisect(f, lo, hi, stop, max_iter);
        return 0.5 * (r.first + r.second);
    } catch (const boost::math::evaluation_error& e) {
        throw DomainError(std::string("bisect: no sign change on bracket: ") + e.what());
    }
}

/// Minimum of a unimodal function on [lo, hi] by Brent's method at full
/// double precision.
struct Minimum {
    double arg;
    double value;
};

template <class F>
Minimum minimize_unimodal(F&& f, double lo, double hi) {
    boost::uintmax_t max_iter = 500;
    const auto r = boost::math::tools::brent_find_minima(f, lo, hi, std::numeric_limits<double>::digits, max_iter);
    return {r.first, r.second};
}

}  // namespace krawbound
