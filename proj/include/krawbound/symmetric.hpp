#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "krawbound/numerics.hpp"

namespace krawbound {

/// A real number stored as sign and log2 magnitude; sign 0 flags an exact zero.
struct SignedLog {
    int sign = 0;
    double log2_abs = -std::numeric_limits<double>::infinity();

    static SignedLog from_big(const BigInt& v);
    static SignedLog from_double(double v);
    bool is_zero() const { return sign == 0; }
};

/// Per-Hamming-weight description of a weight-symmetric function on {0,1}^n:
/// log2 of the uniform-measure mass C(n,i)/2^n of each weight, and the value
/// taken on that weight. Avoids 2^n storage.
struct SymmetricProfile {
    int n = 0;
    std::vector<double> log2_mass;
    std::vector<SignedLog> value;

    double mass(int i) const { return std::exp2(log2_mass[i]); }
};

/// Binomial weight masses for dimension n; exact-assisted up to the exact cap.
std::vector<double> log2_weight_masses(int n);

/// Profile from exact per-weight values.
SymmetricProfile make_profile(int n, const std::vector<BigInt>& values);

/// Profile from per-weight values already in sign/log form.
SymmetricProfile make_profile(int n, std::vector<SignedLog> values);

/// log2 E|f|^p under the uniform measure, p > 0.
double log2_moment(const SymmetricProfile& f, double p);

/// log2 ||f||_p.
double log2_norm(const SymmetricProfile& f, double p);

}  // namespace krawbound
