#pragma once

namespace krawbound {

/// psi(p, x) with both representations and their auxiliary solutions.
struct PsiEval {
    double p = 0.0;
    double x = 0.0;
    double value = 0.0;       ///< the closed form in delta, after reconciliation with the other form
    double first_rep = 0.0;   ///< entropy/tau form, through y
    double second_rep = 0.0;  ///< closed form in delta
    double y_aux = 0.0;       ///< solution of h(p, y) = 1 - 2x
    double delta_aux = 0.0;   ///< solution of x = a(p, delta)
};

/// Maximiser of alpha_{sigma,eps} and derived quantities.
struct NoiseParams {
    double sigma = 0.0;
    double eps = 0.0;
    double x_star = 0.0;
    double alpha_max = 0.0;  ///< alpha_{sigma,eps}(x_star)
    double delta = 0.0;      ///< 2 eps (1 - eps)
};

struct EdgeIsoMinRecord {
    double min_over_eps = 0.0;
    double argmin_eps = 0.0;
    double closed_form = 0.0;
    double gap = 0.0;
};

/// 1/2 - sqrt(x (1 - x)): edge of the region where the degree-x Krawchouk
/// polynomial is still in its non-oscillating tail.
double root_region_edge(double x);

/// r(x, y) = ((1-2x) + sqrt((1-2x)^2 - 4y(1-y))) / (2(1-y)), the asymptotic
/// ratio of consecutive Krawchouk values at degree x and point y.
double ratio_r(double x, double y);

/// Antiderivative of log2 r in the point variable, anchored at -1 for point 0:
/// exponent_I(x, y) = -1 + int_0^y log2 r(x, z) dz.
double exponent_I(double x_deg, double y_pt);

/// The two-argument closed form exactly as printed, slot order (point, degree);
/// kept for cross-checks of the cancellation-free evaluation.
double exponent_I_raw(double first, double second);

double tau(double x, double y);

double little_h(double p, double x);
double little_g(double p, double x);

/// y in [0, 1/2] with h(p, y) = target.
double solve_h_inverse(double p, double target);

/// a(p, delta) = (1/2 - delta) ((1-delta)^{p-1} - delta^{p-1}) / ((1-delta)^p + delta^p).
double a_fn(double p, double delta);

/// delta in [0, 1/2] with a(p, delta) = x.
double solve_a_inverse(double p, double x);

double psi_first_rep(double p, double x);
double psi_second_rep(double p, double x);

/// Evaluates both forms and reconciles them; throws InternalError if they
/// differ by more than 1e-6.
PsiEval psi(double p, double x);

/// The baseline exponent (p/2) log2(p-1) x from the classic moment inequality.
double psi_hypercontractive(double p, double x);

double pi_fn(double x, double y);

/// 1/2 min over delta of the entropy form whose value equals pi(sigma, kappa).
double pi_min_form(double sigma, double kappa);

/// The expression minimised in pi_min_form, at a given delta.
double pi_min_objective(double sigma, double kappa, double delta);

double alpha_value(double sigma, double eps, double x);
double x_star(double sigma, double eps);
NoiseParams alpha_and_xstar(double sigma, double eps);

double phi(double sigma, double eps);

/// Maximiser y of y log2(1-2eps) + H(y) + 2 tau(sigma, y) in closed form.
double phi_transform_argmax(double sigma, double eps);

/// max over y of y log2(1-2eps) + H(y) + 2 tau(sigma, y), minus 2.
double phi_transform(double sigma, double eps);

double tilde_phi(double y, double eps);

double eta(double x, double eps);
double eta_p(double p, double x, double eps);

EdgeIsoMinRecord edge_iso_min_check(double sigma, double y);

}  // namespace krawbound
