#include "krawbound/symmetric.hpp"

#include <cmath>

namespace krawbound {

SignedLog SignedLog::from_big(const BigInt& v) {
    if (v == 0) return {};
    return {v < 0 ? -1 : 1, krawbound::log2_abs(v)};
}

SignedLog SignedLog::from_double(double v) {
    if (v == 0.0) return {};
    return {v < 0.0 ? -1 : 1, std::log2(std::fabs(v))};
}

std::vector<double> log2_weight_masses(int n) {
    if (n < 0) throw InputError("log2_weight_masses: negative n");
    std::vector<double> m(static_cast<std::size_t>(n) + 1);
    if (n <= kExactCap) {
        const auto row = binomial_row(n);
        for (int i = 0; i <= n; ++i) m[i] = log2_abs(row[i]) - n;
    } else {
        for (int i = 0; i <= n; ++i) m[i] = log2_binomial(n, i) - n;
    }
    return m;
}

SymmetricProfile make_profile(int n, const std::vector<BigInt>& values) {
    if (values.size() != static_cast<std::size_t>(n) + 1) throw InputError("make_profile: need n+1 values");
    std::vector<SignedLog> v;
    v.reserve(values.size());
    for (const auto& x : values) v.push_back(SignedLog::from_big(x));
    return make_profile(n, std::move(v));
}

SymmetricProfile make_profile(int n, std::vector<SignedLog> values) {
    if (values.size() != static_cast<std::size_t>(n) + 1) throw InputError("make_profile: need n+1 values");
    return {n, log2_weight_masses(n), std::move(values)};
}

double log2_moment(const SymmetricProfile& f, double p) {
    if (!(p > 0.0)) throw InputError("log2_moment: need p > 0");
    std::vector<LogValue> terms;
    terms.reserve(f.value.size());
    for (std::size_t i = 0; i < f.value.size(); ++i) {
        if (f.value[i].is_zero()) continue;
        terms.push_back(LogValue::from_log2(f.log2_mass[i] + p * f.value[i].log2_abs));
    }
    const LogValue r = log_sum_exp2(std::span<const LogValue>(terms));
    return r.zero ? -std::numeric_limits<double>::infinity() : r.exponent;
}

double log2_norm(const SymmetricProfile& f, double p) { return log2_moment(f, p) / p; }

}  // namespace krawbound
