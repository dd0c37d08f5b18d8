#include "krawbound/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace krawbound {

LogValue LogValue::from_value(double v) {
    if (v < 0.0 || std::isnan(v)) throw InputError("LogValue: negative or NaN magnitude");
    if (v == 0.0) return zero_value();
    return from_log2(std::log2(v));
}

double LogValue::value() const { return zero ? 0.0 : std::exp2(exponent); }

bool operator<(const LogValue& a, const LogValue& b) {
    if (a.zero) return !b.zero;
    if (b.zero) return false;
    return a.exponent < b.exponent;
}

bool operator==(const LogValue& a, const LogValue& b) {
    if (a.zero || b.zero) return a.zero == b.zero;
    return a.exponent == b.exponent;
}

LogValue operator*(const LogValue& a, const LogValue& b) {
    if (a.zero || b.zero) return LogValue::zero_value();
    return LogValue::from_log2(a.exponent + b.exponent);
}

LogValue max(const LogValue& a, const LogValue& b) { return a < b ? b : a; }

double binary_entropy(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw InputError("binary_entropy: argument outside [0,1]");
    if (t == 0.0 || t == 1.0) return 0.0;
    return -t * std::log2(t) - (1.0 - t) * std::log2(1.0 - t);
}

double inverse_entropy(double y) {
    if (!(y >= 0.0 && y <= 1.0)) throw InputError("inverse_entropy: argument outside [0,1]");
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 0.5;
    double lo = 0.0;
    double hi = 0.5;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (binary_entropy(mid) < y) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double log2_binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) throw InputError("log2_binomial: need 0 <= k <= n");
    if (k == 0 || k == n) return 0.0;
    const double nn = static_cast<double>(n);
    const double kk = static_cast<double>(k);
    return (std::lgamma(nn + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(nn - kk + 1.0)) / std::log(2.0);
}

BigInt exact_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw InputError("exact_binomial: need 0 <= k <= n");
    if (n > kExactCap) throw InputError("exact_binomial: n exceeds the exact arithmetic cap");
    k = std::min(k, n - k);
    BigInt c = 1;
    for (int j = 1; j <= k; ++j) {
        c *= n - k + j;
        c /= j;
    }
    return c;
}

std::vector<BigInt> binomial_row(int n) {
    if (n < 0) throw InputError("binomial_row: negative n");
    if (n > kExactCap) throw InputError("binomial_row: n exceeds the exact arithmetic cap");
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (int k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

// GCC flags a spurious memcpy overflow inside the big-integer shift.
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wstringop-overflow"
#pragma GCC diagnostic ignored "-Wstringop-overread"
double log2_abs(const BigInt& v) {
    if (v == 0) return -std::numeric_limits<double>::infinity();
    const BigInt a = abs(v);
    const std::size_t bits = msb(a) + 1;
    if (bits <= 1000) return std::log2(a.convert_to<double>());
    const std::size_t shift = bits - 64;
    const BigInt top = a >> shift;
    return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}
#pragma GCC diagnostic pop

LogValue log_sum_exp2(std::span<const LogValue> terms) {
    LogValue best = LogValue::zero_value();
    for (const auto& t : terms) best = max(best, t);
    if (best.zero) return best;
    if (std::isinf(best.exponent)) return best;
    // Sorted accumulation keeps the result independent of input order.
    std::vector<double> scaled;
    scaled.reserve(terms.size());
    for (const auto& t : terms) {
        if (!t.zero) scaled.push_back(std::exp2(t.exponent - best.exponent));
    }
    std::sort(scaled.begin(), scaled.end());
    double sum = 0.0;
    for (double s : scaled) sum += s;
    return LogValue::from_log2(best.exponent + std::log2(sum));
}

double log_sum_exp2(std::span<const double> exponents) {
    std::vector<LogValue> terms;
    terms.reserve(exponents.size());
    for (double e : exponents) {
        if (e == -std::numeric_limits<double>::infinity()) {
            terms.push_back(LogValue::zero_value());
        } else {
            terms.push_back(LogValue::from_log2(e));
        }
    }
    const LogValue r = log_sum_exp2(std::span<const LogValue>(terms));
    return r.zero ? -std::numeric_limits<double>::infinity() : r.exponent;
}

}  // namespace krawbound
