#include "krawbound/induction.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "krawbound/error.hpp"
#include "krawbound/krawchouk.hpp"
#include "krawbound/numerics.hpp"
#include "krawbound/symmetric.hpp"

namespace krawbound {

namespace {

void check_p(double p, const char* who) {
    if (!(p >= 2.0)) throw InputError(std::string(who) + ": need p >= 2");
}

void check_inner(int n, int s, const char* who) {
    if (n < 3 || s < 1 || 2 * s >= n) throw InputError(std::string(who) + ": need 0 < s < n/2");
}

/// log2 of sum over weights of 2^{-n} C(n, i) |v_i|^p.
double log2_moment_of(const std::vector<SignedLog>& v, const std::vector<double>& mass, double p) {
    std::vector<LogValue> terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) terms.push_back(LogValue::from_log2(mass[i] + p * v[i].log2_abs));
    }
    return log_sum_exp2(terms).exponent;
}

}  // namespace

double big_P(double z, double p) {
    if (!(z >= 0.0)) throw InputError("big_P: need z >= 0");
    check_p(p, "big_P");
    const double r = std::sqrt(z);
    return 0.5 * (std::pow(r + 1.0, p) + std::pow(std::abs(r - 1.0), p));
}

double cap_F(double x, double y, double p) {
    if (!(x >= 0.0 && y >= 0.0)) throw InputError("cap_F: need x, y >= 0");
    check_p(p, "cap_F");
    if (y == 0.0) return x;
    const double rho = std::pow(x / y, 2.0 / p);
    if (rho == 0.0) return y;
    auto g = [&](double beta) { return big_P(rho * beta, p) / std::pow(beta + 1.0, 0.5 * p); };

    // Grow the bracket until the ratio is seen to decrease.
    double hi = 4.0 * (p - 1.0) / rho;
    int grow = 0;
    while (g(2.0 * hi) > g(hi)) {
        hi *= 2.0;
        if (++grow > 60) throw InternalError("cap_F: bracket growth did not find a decrease");
    }
    hi *= 2.0;

    // Coarse scan, then ternary search around the best cell.
    constexpr int kCells = 256;
    int best = 0;
    double best_val = g(0.0);
    for (int j = 1; j <= kCells; ++j) {
        const double v = g(hi * j / kCells);
        if (v > best_val) {
            best_val = v;
            best = j;
        }
    }
    double lo = hi * std::max(0, best - 1) / kCells;
    double up = hi * std::min(kCells, best + 1) / kCells;
    while (up - lo > 1e-12 * std::max(1.0, up)) {
        const double m1 = lo + (up - lo) / 3.0;
        const double m2 = up - (up - lo) / 3.0;
        if (g(m1) < g(m2)) {
            lo = m1;
        } else {
            up = m2;
        }
    }
    return y * std::max(best_val, g(0.5 * (lo + up)));
}

double cap_F_at_u(double rho, double p, double u) {
    const double a = std::sqrt(1.0 - rho * u);
    const double b = std::sqrt(u);
    return std::pow(rho, 0.5 * p) * 0.5 * (std::pow(a + b, p) + std::pow(a - b, p));
}

double stationarity_residual(double rho, double p, double u) {
    const double a = std::sqrt(1.0 - rho * u);
    const double b = std::sqrt(u);
    const double lhs = std::pow(a + b, p - 1.0) * (a - rho * b);
    const double rhs = std::pow(a - b, p - 1.0) * (a + rho * b);
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return std::abs(lhs - rhs) / scale;
}

InductionParams induction_params(int n, int s, double p) {
    check_inner(n, s, "induction_params");
    check_p(p, "induction_params");
    InductionParams r;
    r.n = n;
    r.s = s;
    r.p = p;
    r.i0 = solve_i0(n, s, p);
    const double b = n - 2.0 * r.i0;
    const double disc = std::max(0.0, b * b - 4.0 * s * (n - s));
    r.t = (b + std::sqrt(disc)) / (2.0 * (n - s));
    r.t_residual = std::abs((n - s) * r.t * r.t - b * r.t + s) / (n - s);
    r.rho = b / s * r.t - 1.0;
    r.phi_big = n / (2.0 * (n - r.i0)) * std::pow(static_cast<double>(s) / n, 0.5 * p) *
                std::pow(1.0 + static_cast<double>(n - s) / s * r.t, p);
    r.u_star = s / (r.rho * n);
    r.boundary = p == 2.0 || r.rho <= 1.0 + 1e-12;
    r.stationarity_residual = r.boundary ? 0.0 : stationarity_residual(r.rho, p, r.u_star);
    return r;
}

HannerGap hanner_gap_kraw(int n, int s, double p) {
    if (n < 2 || s < 1 || 2 * s > n) throw InputError("hanner_gap_kraw: need 1 <= s <= n/2");
    if (n > 10000) throw InputError("hanner_gap_kraw: n exceeds 10^4");
    check_p(p, "hanner_gap_kraw");
    const auto mass = log2_weight_masses(n);
    const auto g0 = kraw_log_values(n, s);
    const auto g1 = kraw_log_values(n, s - 1);
    // By the dimension recursion, g0 + g1 and g0 - g1 at weight i are K_s^{(n+1)} at i and i + 1.
    const auto up = kraw_log_values(n + 1, s);
    const std::vector<SignedLog> plus(up.begin(), up.end() - 1);
    const std::vector<SignedLog> minus(up.begin() + 1, up.end());

    HannerGap h;
    const std::vector<LogValue> lhs_terms{LogValue::from_log2(log2_moment_of(plus, mass, p)),
                                          LogValue::from_log2(log2_moment_of(minus, mass, p))};
    h.lhs_log2 = log_sum_exp2(lhs_terms).exponent;
    const double A = log2_moment_of(g0, mass, p) / p;
    const double B = log2_moment_of(g1, mass, p) / p;
    const double d = std::exp2(-std::abs(A - B));
    h.rhs_log2 = p * std::max(A, B) + std::log2(std::pow(1.0 + d, p) + std::pow(1.0 - d, p));
    h.log2_ratio_per_n = (h.rhs_log2 - h.lhs_log2) / n;
    return h;
}

RecursionResidual recursion_residual(int n, int s, double p) {
    check_inner(n, s, "recursion_residual");
    check_p(p, "recursion_residual");
    RecursionResidual r;
    const double ln_n = std::log(static_cast<double>(n));
    r.eps_scale = std::sqrt(ln_n / n);
    const double s0 = n / ln_n;
    r.in_range = s >= s0 && s <= n / 2.0 - s0;
    if (p == 2.0) return r;
    const InductionParams ip = induction_params(n, s, p);
    const double r_up = kraw_moments(n + 1, s, p).log2_ratio;
    const double r_same = kraw_moments(n, s, p).log2_ratio;
    const double r_down = kraw_moments(n, s - 1, p).log2_ratio;
    r.residual = std::abs(r_up - r_down - std::log2(ip.phi_big));
    r.ratio_residual = std::abs(2.0 / p * (r_same - r_down) - std::log2(ip.rho));
    return r;
}

}  // namespace krawbound
