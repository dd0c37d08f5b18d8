#pragma once

#include <map>
#include <string>
#include <vector>

#include "krawbound/numerics.hpp"

namespace krawbound {

/// One bound comparison. lhs and rhs are log2 values divided by n unless a
/// bound states otherwise; margin = rhs - lhs and pass <=> margin >= -tol.
struct BoundReport {
    std::string bound_name;
    std::map<std::string, double> params;
    double lhs_log2n = 0.0;
    double rhs_log2n = 0.0;
    double margin = 0.0;
    double tol = 0.0;
    bool pass = true;
};

BoundReport make_report(std::string name, std::map<std::string, double> params, double lhs, double rhs, double tol);

struct MomentGap {
    double bound_log2 = 0.0;  ///< psi(p, s/n) n
    double kraw_log2 = 0.0;   ///< log2 r(n, s, p)
    double gap_log2 = 0.0;    ///< bound - kraw
};

struct TailBound {
    double threshold_exponent = 0.0;  ///< tau(s/n, i/n) - H(s/n)/2
    double prob_exponent = 0.0;       ///< H(i/n) - 1
};

/// log2 of the bound on E|f|^p / (E f^2)^{p/2} for degree-s polynomials: psi(p, s/n) n.
double moment_bound(int n, int s, double p);

/// The bound against the Krawchouk ratio.
MomentGap moment_gap(int n, int s, double p);

TailBound tail_bound(int n, int s, int i);

/// Exact tail of K_s against the tail bound at level i; per-n exponents of the
/// probability Pr{|K_s| >= ||K_s||_2 2^{threshold n}} and of its bound.
BoundReport kraw_tail_check(int n, int s, int i, double tol = 1e-9);

/// Per-n exponent bounding a_i(A) / |A| for |A| <= 2^{H(sigma) n}, 1 <= i <= 2 sigma(1-sigma) n.
double edge_iso_bound(int n, double sigma, int i);

/// e^2 s (n - s), the i = 2 specialisation bounding a_2(A) / |A| for |A| <= C(n, s).
double kleitman_west_bound(int n, int s);

/// log2 of (edge-iso bound on a_i / |A|) / (a_i / |A| of the radius-s sphere), even i.
double sphere_edge_iso_log2_factor(int n, int s, int i);

/// Per-n exponent bounding log2(||T_eps f||_2 / ||f||_p) given r_p = (1/n) log2(||f||_p / ||f||_1).
/// p <= 0 selects p = 1 + (1 - 2 eps)^2.
double hypercontractive_bound(double r_p, double eps, double p = 0.0);

/// Per-n exponent bounding <T_eps f, f> / ||f||_2^2 for f supported on <= 2^{H(sigma) n} points.
double set_noise_bound(double sigma, double eps);

/// Per-n exponent bounding ||Pi_k f||_2 / ||f||_p.
double projection_bound(int n, int k, double p, double r_p);

/// Per-n exponent bounding ||Pi_k f||_2 / ||f||_2 for f supported on <= 2^{H(sigma) n} points.
double supported_projection_bound(int n, int k, double sigma);

/// Worst asymptotic undetected-error exponent at rate R and crossover eps.
double ue_exponent(double R, double eps);

// Extremal objects, evaluated through weight profiles.

/// log2 <T_eps 1_S, 1_S> for the radius-s sphere in {0,1}^n.
double sphere_noise_log2(int n, int s, double eps);

/// Exact distance distribution of the union of the spheres of radii s-1 and s
/// around 0 in {0,1}^m.
std::vector<BigInt> adjacent_sphere_union_distances(int m, int s);

/// log2 P_ue of the union of spheres of radii s-1 and s in dimension n-1.
double sphere_union_ue_log2(int n, int s, double eps);

/// log2(bound / actual) for the noise bound on the radius-s sphere indicator,
/// with p = 1 + (1 - 2 eps)^2.
double sphere_hc_log2_factor(int n, int s, double eps);

/// log2(bound / actual) for the projection bound on the radius-s sphere at level k.
/// Returns +inf where the projection vanishes.
double sphere_projection_log2_factor(int n, int s, int k, double p);

}  // namespace krawbound
