#pragma once

#include <vector>

#include "krawbound/numerics.hpp"
#include "krawbound/symmetric.hpp"

namespace krawbound {

/// Exact values K_s(i), i = 0..n, of the degree-s Krawchouk polynomial on {0,1}^n.
struct KrawTable {
    int n = 0;
    int s = 0;
    std::vector<BigInt> values;
};

/// The s roots of K_s, increasing.
struct RootList {
    int n = 0;
    int s = 0;
    std::vector<double> roots;
};

/// l_p moment of K_s under the binomial measure, in log2 form.
struct MomentRecord {
    int n = 0;
    int s = 0;
    double p = 0.0;
    double log2_moment = 0.0;  ///< log2 E|K_s|^p
    double log2_ratio = 0.0;   ///< log2 E|K_s|^p - (p/2) log2 C(n,s)
};

struct ConcentrationRecord {
    double mass_in_window = 0.0;
    double i0 = 0.0;
    bool in_range = true;  ///< false outside n/ln n < s < n/2 - n/ln n
};

struct RootInterval {
    double lo = 0.0;
    double hi = 0.0;
    int best_i = -1;
    double attainment_factor = 0.0;
    bool empty = false;  ///< no integer point in the interval
};

/// Table from the explicit alternating sum with exact integers.
KrawTable kraw_table(int n, int s);

/// Tables K_0..K_{s_max} from the three-term recurrence in the degree,
/// seeded by K_0 = 1 and K_1(i) = n - 2i, exact.
std::vector<KrawTable> kraw_tables_by_recurrence(int n, int s_max);

/// K_s(0..n) from the exact three-term recurrence in the point variable,
/// (n - x) K(x+1) = (n - 2s) K(x) - x K(x-1). O(n) big-integer steps.
std::vector<BigInt> kraw_values_fast(int n, int s);

/// Signed log2 values of K_s(0..n). Exact-assisted up to the exact cap and
/// a rescaled extended-precision recurrence beyond it.
std::vector<SignedLog> kraw_log_values(int n, int s);

/// The extended-precision recurrence path of kraw_log_values, for any n.
std::vector<SignedLog> kraw_log_values_recurrence(int n, int s);

/// Weight profile of K_s.
SymmetricProfile kraw_profile(int n, int s);

/// K_s at a real point, via the degree recurrence in extended precision.
double kraw_eval_real(int n, int s, double x);

/// All roots, by a 0.25-step sign scan of the root interval and bisection to 1e-10.
RootList kraw_roots(int n, int s);

MomentRecord kraw_moments(int n, int s, double p);

/// i0 in [0, n/2] with h(p, i0/n) = 1 - 2s/n.
double solve_i0(double n, double s, double p);

/// Share of sum_i C(n,i)|K_s(i)|^p carried by weights within window*sqrt(n ln n)
/// of i0 or of n - i0.
ConcentrationRecord lp_concentration(int n, int s, double p, double window);

/// For each of the s+1 intervals cut out by the roots, the largest share
/// C(n,i) K_s(i)^2 / (2^n C(n,s)) over integer points i in it.
std::vector<RootInterval> l2_between_roots(int n, int s);

}  // namespace krawbound
