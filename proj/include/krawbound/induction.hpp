#pragma once

namespace krawbound {

struct InductionParams {
    int n = 0;
    int s = 0;
    double p = 0.0;
    double i0 = 0.0;
    double t = 0.0;        ///< larger root of (n-s) t^2 - (n - 2 i0) t + s = 0
    double rho = 0.0;      ///< (n - 2 i0) t / s - 1
    double phi_big = 0.0;  ///< n / (2 (n - i0)) (s/n)^{p/2} (1 + (n-s) t / s)^p
    double u_star = 0.0;   ///< s / (rho n)
    double t_residual = 0.0;             ///< |quadratic at t| / (n - s)
    double stationarity_residual = 0.0;  ///< relative residual of the stationarity identity at u_star
    bool boundary = false;               ///< rho at the degenerate value 1 (p = 2)
};

struct HannerGap {
    double lhs_log2 = 0.0;  ///< log2(||g0+g1||_p^p + ||g0-g1||_p^p)
    double rhs_log2 = 0.0;  ///< log2((||g0||_p+||g1||_p)^p + | ||g0||_p-||g1||_p |^p)
    double log2_ratio_per_n = 0.0;
};

struct RecursionResidual {
    double residual = 0.0;        ///< |log2[r(n+1,s,p)/r(n,s-1,p)] - log2 Phi(n,s,p)|
    double ratio_residual = 0.0;  ///< |(2/p) log2[r(n,s,p)/r(n,s-1,p)] - log2 rho(n,s,p)|
    double eps_scale = 0.0;       ///< sqrt(ln n / n), the expected error scale
    bool in_range = true;         ///< n/ln n <= s <= n/2 - n/ln n
};

/// P(z) = ((sqrt z + 1)^p + |sqrt z - 1|^p) / 2.
double big_P(double z, double p);

/// F(x, y) = y sup_{beta >= 0} P(rho beta) / (beta + 1)^{p/2}, rho = (x/y)^{2/p}; F(x, 0) = x.
double cap_F(double x, double y, double p);

/// rho^{p/2} Q(u) with Q(u) = ((sqrt(1 - rho u) + sqrt u)^p + (sqrt(1 - rho u) - sqrt u)^p) / 2;
/// equals F(rho^{p/2}, 1) at the stationary point.
double cap_F_at_u(double rho, double p, double u);

/// Relative residual of the stationarity identity for Q at u.
double stationarity_residual(double rho, double p, double u);

InductionParams induction_params(int n, int s, double p);

/// Hanner's inequality for g0 = K_s, g1 = K_{s-1} on {0,1}^n, in log2 form.
HannerGap hanner_gap_kraw(int n, int s, double p);

RecursionResidual recursion_residual(int n, int s, double p);

}  // namespace krawbound
