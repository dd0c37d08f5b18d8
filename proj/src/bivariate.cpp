#include "krawbound/bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "krawbound/error.hpp"
#include "krawbound/numerics.hpp"

namespace krawbound {

namespace {

constexpr double kRegionSlack = 1e-12;

double clamp01(double t) { return std::clamp(t, 0.0, 1.0); }
double Hc(double t) { return binary_entropy(clamp01(t)); }

void check_half(double v, const char* who, const char* name) {
    if (!(v >= 0.0 && v <= 0.5)) throw DomainError(std::string(who) + ": " + name + " outside [0,1/2]");
}

void check_p(double p, const char* who) {
    if (!(p >= 2.0) || !std::isfinite(p)) throw DomainError(std::string(who) + ": need finite p >= 2");
}

// sigma H(x / sigma) with the sigma = 0 limit.
double scaled_entropy(double sigma, double x) { return sigma <= 0.0 ? 0.0 : sigma * Hc(x / sigma); }

}  // namespace

double root_region_edge(double x) { return 0.5 - std::sqrt(x * (1.0 - x)); }

double ratio_r(double x, double y) {
    check_half(x, "ratio_r", "x");
    check_half(y, "ratio_r", "y");
    if (y > root_region_edge(x) + kRegionSlack) throw DomainError("ratio_r: y beyond the root region");
    const double disc = std::max(0.0, (1.0 - 2.0 * x) * (1.0 - 2.0 * x) - 4.0 * y * (1.0 - y));
    return ((1.0 - 2.0 * x) + std::sqrt(disc)) / (2.0 * (1.0 - y));
}

namespace {

// The printed closed form with both vanishing log arguments rationalised:
// 1 - 2P - b = 4D(1-D) / (1 - 2P + b) and
// 2(1-P) - a^2 - ab = 16 (1-P)^2 D(1-D) / (2(1-P) - a^2 + ab).
// The two log2(D(1-D)) pieces then combine into -D log2(4D(1-D)).
double closed_form_I(double D, double P) {
    const double a = 1.0 - 2.0 * D;
    const double b = std::sqrt(std::max(0.0, a * a - 4.0 * P * (1.0 - P)));
    // P log2(.) tends to 0 with P even when a + b vanishes (degree 1/2).
    const double p_term = P == 0.0 ? 0.0 : P * std::log2((a + b) / (2.0 * (1.0 - P)));
    return -1.0 - D * std::log2(4.0 * D * (1.0 - D)) - 0.5 * a * std::log2(1.0 - 2.0 * P + b) + p_term +
           0.5 * std::log2(2.0 * (1.0 - P) - a * a + a * b);
}

}  // namespace

double exponent_I(double x_deg, double y_pt) {
    check_half(x_deg, "exponent_I", "degree");
    check_half(y_pt, "exponent_I", "point");
    if (y_pt > root_region_edge(x_deg) + kRegionSlack) throw DomainError("exponent_I: point beyond the root region");
    if (x_deg == 0.0 || y_pt == 0.0) return -1.0;
    // The closed form is an antiderivative in the point variable; anchoring it
    // at point 0 gives the value -1 there for every degree.
    return -1.0 + closed_form_I(x_deg, y_pt) - closed_form_I(x_deg, 0.0);
}

double exponent_I_raw(double first, double second) {
    const double x = first;
    const double a = 1.0 - 2.0 * second;
    const double b = std::sqrt(std::max(0.0, a * a - 4.0 * x * (1.0 - x)));
    return std::log2(1.0 - x) + 0.5 * a * std::log2(1.0 - 2.0 * x - b) + x * std::log2((a + b) / (2.0 * (1.0 - x))) -
           0.5 * std::log2(2.0 * (1.0 - x) - a * a - a * b);
}

double tau(double x, double y) {
    check_half(x, "tau", "x");
    check_half(y, "tau", "y");
    if (y <= root_region_edge(x)) return Hc(x) + exponent_I(x, y) - exponent_I(x, 0.0);
    return 0.5 * (1.0 + Hc(x) - Hc(y));
}

double little_h(double p, double x) {
    check_p(p, "little_h");
    check_half(x, "little_h", "x");
    return std::pow(x, 1.0 / p) * std::pow(1.0 - x, (p - 1.0) / p) + std::pow(x, (p - 1.0) / p) * std::pow(1.0 - x, 1.0 / p);
}

double little_g(double p, double x) {
    check_p(p, "little_g");
    check_half(x, "little_g", "x");
    return std::pow(x, 1.0 / p) * std::pow(1.0 - x, (p - 1.0) / p) - std::pow(x, (p - 1.0) / p) * std::pow(1.0 - x, 1.0 / p);
}

double solve_h_inverse(double p, double target) {
    check_p(p, "solve_h_inverse");
    if (!(target >= 0.0 && target <= 1.0)) throw DomainError("solve_h_inverse: target outside [0,1]");
    if (target == 0.0) return 0.0;
    if (target == 1.0) return 0.5;
    return bisect([&](double y) { return little_h(p, y) - target; }, 0.0, 0.5);
}

double a_fn(double p, double delta) {
    check_p(p, "a_fn");
    check_half(delta, "a_fn", "delta");
    const double u = 1.0 - delta;
    return (0.5 - delta) * (std::pow(u, p - 1.0) - std::pow(delta, p - 1.0)) / (std::pow(u, p) + std::pow(delta, p));
}

double solve_a_inverse(double p, double x) {
    check_p(p, "solve_a_inverse");
    check_half(x, "solve_a_inverse", "x");
    if (x == 0.0) return 0.5;
    if (x == 0.5) return 0.0;
    return bisect([&](double d) { return a_fn(p, d) - x; }, 0.0, 0.5);
}

double psi_first_rep(double p, double x) {
    check_p(p, "psi");
    check_half(x, "psi", "x");
    const double y = solve_h_inverse(p, 1.0 - 2.0 * x);
    return Hc(y) - 1.0 + p * tau(x, y) - 0.5 * p * Hc(x);
}

double psi_second_rep(double p, double x) {
    check_p(p, "psi");
    check_half(x, "psi", "x");
    if (x == 0.0) return 0.0;
    const double d = solve_a_inverse(p, x);
    return (p - 1.0) + std::log2(std::pow(1.0 - d, p) + std::pow(d, p)) - 0.5 * p * Hc(x) - p * x * std::log2(1.0 - 2.0 * d);
}

PsiEval psi(double p, double x) {
    PsiEval e;
    e.p = p;
    e.x = x;
    e.first_rep = psi_first_rep(p, x);
    e.second_rep = psi_second_rep(p, x);
    e.y_aux = solve_h_inverse(p, 1.0 - 2.0 * x);
    e.delta_aux = solve_a_inverse(p, x);
    if (std::fabs(e.first_rep - e.second_rep) > 1e-6) {
        throw InternalError("psi: representations disagree at p=" + std::to_string(p) + " x=" + std::to_string(x));
    }
    e.value = e.second_rep;
    return e;
}

double psi_hypercontractive(double p, double x) { return 0.5 * p * std::log2(p - 1.0) * x; }

double pi_fn(double x, double y) {
    check_half(x, "pi_fn", "x");
    check_half(y, "pi_fn", "y");
    if (y <= root_region_edge(x)) return exponent_I(x, y) - exponent_I(x, 0.0) + 0.5 * (Hc(x) + Hc(y) - 1.0);
    return 0.0;
}

double x_star(double sigma, double eps) {
    check_half(sigma, "x_star", "sigma");
    check_half(eps, "x_star", "eps");
    // Rationalised form of (-e^2 + e sqrt(e^2 + 4(1-2e)q)) / (2(1-2e)), q = sigma(1-sigma);
    // finite at eps = 1/2 where it equals q.
    const double q = sigma * (1.0 - sigma);
    if (eps == 0.0) return 0.0;
    const double root = std::sqrt(eps * eps + 4.0 * (1.0 - 2.0 * eps) * q);
    return 2.0 * eps * q / (root + eps);
}

double alpha_value(double sigma, double eps, double x) {
    check_half(sigma, "alpha_value", "sigma");
    check_half(eps, "alpha_value", "eps");
    if (x < 0.0 || x > sigma + kRegionSlack) throw DomainError("alpha_value: x outside [0, sigma]");
    const double two_x_log_eps = (x == 0.0) ? 0.0 : 2.0 * x * std::log2(eps);
    return scaled_entropy(sigma, x) + scaled_entropy(1.0 - sigma, x) + two_x_log_eps + (1.0 - 2.0 * x) * std::log2(1.0 - eps);
}

NoiseParams alpha_and_xstar(double sigma, double eps) {
    NoiseParams np;
    np.sigma = sigma;
    np.eps = eps;
    np.x_star = x_star(sigma, eps);
    np.alpha_max = alpha_value(sigma, eps, np.x_star);
    np.delta = 2.0 * eps * (1.0 - eps);
    return np;
}

double phi(double sigma, double eps) { return Hc(sigma) - 1.0 + alpha_and_xstar(sigma, eps).alpha_max; }

double phi_transform_argmax(double sigma, double eps) {
    check_half(sigma, "phi_transform_argmax", "sigma");
    check_half(eps, "phi_transform_argmax", "eps");
    const double root = std::sqrt(eps * eps + 4.0 * (1.0 - 2.0 * eps) * sigma * (1.0 - sigma));
    return std::clamp(((1.0 - eps) - root) / (2.0 - 2.0 * eps), 0.0, 0.5);
}

double phi_transform(double sigma, double eps) {
    check_half(sigma, "phi_transform", "sigma");
    check_half(eps, "phi_transform", "eps");
    if (eps == 0.5) return 2.0 * Hc(sigma) - 2.0;
    const double l = std::log2(1.0 - 2.0 * eps);
    auto objective = [&](double y) { return y * l + Hc(y) + 2.0 * tau(sigma, y); };
    // The objective is concave in y, so a unimodal search finds the global
    // maximum; the closed-form maximiser is compared as a second candidate.
    const Minimum m = minimize_unimodal([&](double y) { return -objective(y); }, 0.0, 0.5);
    const double best = std::max({-m.value, objective(phi_transform_argmax(sigma, eps)), objective(0.0), objective(0.5)});
    return best - 2.0;
}

double pi_min_objective(double sigma, double kappa, double delta) {
    const double x = x_star(sigma, delta);
    const double two_x_log = (x == 0.0) ? 0.0 : 2.0 * x * std::log2(delta);
    const double kappa_term = (kappa == 0.0) ? 0.0 : kappa * std::log2(1.0 - 2.0 * delta);
    return scaled_entropy(sigma, x) + scaled_entropy(1.0 - sigma, x) + two_x_log + (1.0 - 2.0 * x) * std::log2(1.0 - delta) -
           kappa_term;
}

double pi_min_form(double sigma, double kappa) {
    check_half(sigma, "pi_min_form", "sigma");
    check_half(kappa, "pi_min_form", "kappa");
    const double hi = 0.5 - 1e-12;
    const Minimum m = minimize_unimodal([&](double d) { return pi_min_objective(sigma, kappa, d); }, 0.0, hi);
    const double best = std::min({m.value, pi_min_objective(sigma, kappa, 0.0)});
    return 0.5 * best;
}

double tilde_phi(double y, double eps) {
    if (!(y >= 0.0 && y <= 1.0)) throw DomainError("tilde_phi: y outside [0,1]");
    return phi(inverse_entropy(y), eps);
}

double eta_p(double p, double x, double eps) {
    check_half(eps, "eta_p", "eps");
    if (!(p > 1.0)) {
        if (p == 1.0 && x == 0.0) return 0.5 * tilde_phi(1.0, 2.0 * eps * (1.0 - eps));
        throw DomainError("eta_p: need p > 1");
    }
    const double cap = (p - 1.0) / p;
    if (x < 0.0 || x > cap + kRegionSlack) throw DomainError("eta_p: x outside [0, (p-1)/p]");
    const double arg = std::clamp(1.0 - p / (p - 1.0) * x, 0.0, 1.0);
    return 0.5 * tilde_phi(arg, 2.0 * eps * (1.0 - eps)) + x / (p - 1.0);
}

double eta(double x, double eps) {
    check_half(eps, "eta", "eps");
    const double c = (1.0 - 2.0 * eps) * (1.0 - 2.0 * eps);
    return eta_p(1.0 + c, x, eps);
}

EdgeIsoMinRecord edge_iso_min_check(double sigma, double y) {
    check_half(sigma, "edge_iso_min_check", "sigma");
    if (y < 0.0 || y > 2.0 * sigma * (1.0 - sigma) + kRegionSlack) throw DomainError("edge_iso_min_check: y outside [0, 2 sigma(1-sigma)]");
    const double hs = Hc(sigma);
    auto objective = [&](double eps) {
        const double y_log = (y == 0.0) ? 0.0 : y * std::log2(eps);
        return phi(sigma, eps) + 1.0 - hs - y_log - (1.0 - y) * std::log2(1.0 - eps);
    };
    // Search in log(eps): the minimiser tends to 0 with y.
    const double t_lo = std::log(1e-15);
    const double t_hi = std::log(0.5);
    const Minimum m = minimize_unimodal([&](double t) { return objective(std::exp(t)); }, t_lo, t_hi);
    EdgeIsoMinRecord rec;
    rec.min_over_eps = m.value;
    rec.argmin_eps = std::exp(m.arg);
    const double at_half = objective(0.5);
    if (at_half < rec.min_over_eps) {
        rec.min_over_eps = at_half;
        rec.argmin_eps = 0.5;
    }
    rec.closed_form = scaled_entropy(sigma, 0.5 * y) + scaled_entropy(1.0 - sigma, 0.5 * y);
    rec.gap = std::fabs(rec.min_over_eps - rec.closed_form);
    return rec;
}

}  // namespace krawbound
