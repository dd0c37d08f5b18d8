#include "krawbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "krawbound/bivariate.hpp"
#include "krawbound/krawchouk.hpp"

namespace krawbound {

namespace {

constexpr double kSlack = 1e-12;

void check_dims(int n, int s, const char* who) {
    if (n < 1 || s < 0 || 2 * s > n) throw InputError(std::string(who) + ": need n >= 1 and 0 <= s <= n/2");
}

void check_eps(double eps, const char* who) {
    if (!(eps >= 0.0 && eps <= 0.5)) throw InputError(std::string(who) + ": eps outside [0, 1/2]");
}

}  // namespace

BoundReport make_report(std::string name, std::map<std::string, double> params, double lhs, double rhs, double tol) {
    BoundReport r;
    r.bound_name = std::move(name);
    r.params = std::move(params);
    r.lhs_log2n = lhs;
    r.rhs_log2n = rhs;
    r.margin = rhs - lhs;
    r.tol = tol;
    r.pass = r.margin >= -tol;
    return r;
}

double moment_bound(int n, int s, double p) {
    check_dims(n, s, "moment_bound");
    if (!(p >= 2.0)) throw InputError("moment_bound: need p >= 2");
    if (s == 0 || p == 2.0) return 0.0;
    return psi(p, static_cast<double>(s) / n).value * n;
}

MomentGap moment_gap(int n, int s, double p) {
    MomentGap g;
    g.bound_log2 = moment_bound(n, s, p);
    g.kraw_log2 = p == 2.0 ? 0.0 : kraw_moments(n, s, p).log2_ratio;
    g.gap_log2 = g.bound_log2 - g.kraw_log2;
    return g;
}

TailBound tail_bound(int n, int s, int i) {
    check_dims(n, s, "tail_bound");
    if (i < 0 || 2 * i > n) throw InputError("tail_bound: need 0 <= i <= n/2");
    const double x = static_cast<double>(s) / n;
    const double y = static_cast<double>(i) / n;
    return {tau(x, y) - 0.5 * binary_entropy(x), binary_entropy(y) - 1.0};
}

BoundReport kraw_tail_check(int n, int s, int i, double tol) {
    const TailBound t = tail_bound(n, s, i);
    const auto values = kraw_values_fast(n, s);
    const double log2_threshold = 0.5 * log2_abs(exact_binomial(n, s)) + t.threshold_exponent * n;
    std::vector<LogValue> hits;
    for (int j = 0; j <= n; ++j) {
        if (values[j] == 0) continue;
        // A hair of slack widens the event, so rounding can only hurt the check.
        if (log2_abs(values[j]) >= log2_threshold - 1e-12) hits.push_back(LogValue::from_log2(log2_binomial(n, j) - n));
    }
    const LogValue prob = log_sum_exp2(hits);
    const double lhs = prob.zero ? -std::numeric_limits<double>::infinity() : prob.exponent / n;
    return make_report("tail", {{"n", n}, {"s", s}, {"i", i}}, lhs, t.prob_exponent, tol);
}

double edge_iso_bound(int n, double sigma, int i) {
    if (!(sigma >= 0.0 && sigma <= 0.5)) throw InputError("edge_iso_bound: sigma outside [0, 1/2]");
    const double top = 2.0 * sigma * (1.0 - sigma) * n;
    if (i < 1 || i > top + 1e-9) {
        throw InputError(
            "edge_iso_bound: need 1 <= i <= 2 sigma (1 - sigma) n; beyond it i exceeds the expected distance between "
            "two points of a set of this size and a_i may be of order |A|^2");
    }
    const double a = std::min(1.0, i / (2.0 * sigma * n));
    const double b = std::min(1.0, i / (2.0 * (1.0 - sigma) * n));
    return sigma * binary_entropy(a) + (1.0 - sigma) * binary_entropy(b);
}

double kleitman_west_bound(int n, int s) { return std::numbers::e * std::numbers::e * s * (n - s); }

double sphere_edge_iso_log2_factor(int n, int s, int i) {
    if (i % 2 != 0) throw InputError("sphere_edge_iso_log2_factor: i must be even");
    const double bound = edge_iso_bound(n, static_cast<double>(s) / n, i) * n;
    const double actual = log2_abs(exact_binomial(s, i / 2) * exact_binomial(n - s, i / 2));
    return bound - actual;
}

double hypercontractive_bound(double r_p, double eps, double p) {
    check_eps(eps, "hypercontractive_bound");
    if (p <= 0.0) return eta(r_p, eps);
    const double floor_p = 1.0 + (1.0 - 2.0 * eps) * (1.0 - 2.0 * eps);
    if (p < floor_p - kSlack) throw DomainError("hypercontractive_bound: need p >= 1 + (1 - 2 eps)^2");
    return eta_p(p, r_p, eps);
}

double set_noise_bound(double sigma, double eps) {
    if (!(sigma >= 0.0 && sigma <= 0.5)) throw InputError("set_noise_bound: sigma outside [0, 1/2]");
    check_eps(eps, "set_noise_bound");
    return phi(sigma, eps) + 1.0 - binary_entropy(sigma);
}

double projection_bound(int n, int k, double p, double r_p) {
    if (n < 1 || k < 0 || k > n) throw InputError("projection_bound: need 0 <= k <= n");
    if (!(p >= 2.0)) throw InputError("projection_bound: need p >= 2");
    const double cap = (p - 1.0) / p;
    if (r_p < -kSlack || r_p > cap + kSlack) throw InputError("projection_bound: r_p outside [0, (p-1)/p]");
    const double arg = 1.0 - p / (p - 1.0) * r_p;
    if (arg < -1e-9 || arg > 1.0 + 1e-9) throw DomainError("projection_bound: inverse-entropy argument outside [0, 1]");
    const double sigma = inverse_entropy(std::clamp(arg, 0.0, 1.0));
    const double kappa = static_cast<double>(std::min(k, n - k)) / n;
    return pi_fn(kappa, sigma) - (p - 2.0) / (2.0 * p - 2.0) * std::clamp(r_p, 0.0, cap);
}

double supported_projection_bound(int n, int k, double sigma) {
    if (n < 1 || k < 0 || k > n) throw InputError("supported_projection_bound: need 0 <= k <= n");
    return pi_fn(sigma, static_cast<double>(std::min(k, n - k)) / n);
}

double ue_exponent(double R, double eps) {
    if (!(R > 0.0 && R <= 1.0)) throw InputError("ue_exponent: need 0 < R <= 1");
    if (!(eps > 0.0 && eps <= 0.5)) throw InputError("ue_exponent: need 0 < eps <= 1/2");
    return alpha_and_xstar(inverse_entropy(R), eps).alpha_max;
}

double sphere_noise_log2(int n, int s, double eps) {
    if (n < 1 || s < 0 || s > n) throw InputError("sphere_noise_log2: need 0 <= s <= n");
    check_eps(eps, "sphere_noise_log2");
    std::vector<LogValue> terms;
    for (int i = 0; 2 * i <= n && i <= s && i <= n - s; ++i) {
        if (i > 0 && eps == 0.0) break;
        const double noise = (i > 0 ? 2.0 * i * std::log2(eps) : 0.0) + (n - 2 * i) * std::log2(1.0 - eps);
        terms.push_back(LogValue::from_log2(log2_binomial(s, i) + log2_binomial(n - s, i) + noise));
    }
    return -n + log2_binomial(n, s) + log_sum_exp2(terms).exponent;
}

std::vector<BigInt> adjacent_sphere_union_distances(int m, int s) {
    if (m < 1 || s < 1 || s > m) throw InputError("adjacent_sphere_union_distances: need 1 <= s <= m");
    std::vector<BigInt> a(static_cast<std::size_t>(m) + 1, 0);
    for (int r : {s - 1, s}) {
        const BigInt shell = exact_binomial(m, r);
        for (int j = 0; j <= r && j <= m - r; ++j) a[2 * j] += shell * exact_binomial(r, j) * exact_binomial(m - r, j);
    }
    const BigInt outer = exact_binomial(m, s);
    for (int k = 0; k <= s - 1; ++k) {
        if (s - 1 - k > m - s) continue;
        a[2 * s - 1 - 2 * k] += 2 * outer * exact_binomial(s, k) * exact_binomial(m - s, s - 1 - k);
    }
    return a;
}

double sphere_union_ue_log2(int n, int s, double eps) {
    if (!(eps > 0.0 && eps <= 0.5)) throw InputError("sphere_union_ue_log2: need 0 < eps <= 1/2");
    const int m = n - 1;
    const auto a = adjacent_sphere_union_distances(m, s);
    std::vector<LogValue> terms;
    for (int i = 1; i <= m; ++i) {
        if (a[i] == 0) continue;
        terms.push_back(LogValue::from_log2(log2_abs(a[i]) + i * std::log2(eps) + (m - i) * std::log2(1.0 - eps)));
    }
    const double size = log2_abs(exact_binomial(m, s) + exact_binomial(m, s - 1));
    return log_sum_exp2(terms).exponent - size;
}

double sphere_hc_log2_factor(int n, int s, double eps) {
    if (!(eps >= 0.0 && eps < 0.5)) throw InputError("sphere_hc_log2_factor: need 0 <= eps < 1/2");
    const double p = 1.0 + (1.0 - 2.0 * eps) * (1.0 - 2.0 * eps);
    const double L = log2_binomial(n, s);
    const double log_norm_p = (L - n) / p;
    const double r = (log_norm_p - (L - n)) / n;
    const double actual = 0.5 * sphere_noise_log2(n, s, 2.0 * eps * (1.0 - eps));
    const double bound = hypercontractive_bound(std::clamp(r, 0.0, (p - 1.0) / p), eps) * n + log_norm_p;
    return bound - actual;
}

double sphere_projection_log2_factor(int n, int s, int k, double p) {
    if (n < 1 || s < 0 || s > n || k < 0 || k > n) throw InputError("sphere_projection_log2_factor: need 0 <= s, k <= n");
    const BigInt kk = kraw_values_fast(n, s)[k];
    if (kk == 0) return std::numeric_limits<double>::infinity();
    const double actual = 0.5 * log2_binomial(n, k) + log2_abs(kk) - n;
    const double L = log2_binomial(n, s);
    const double r = (p - 1.0) / p * (1.0 - L / n);
    const double bound = projection_bound(n, k, p, std::clamp(r, 0.0, (p - 1.0) / p)) * n + (L - n) / p;
    return bound - actual;
}

}  // namespace krawbound
