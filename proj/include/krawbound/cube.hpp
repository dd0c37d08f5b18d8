#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/dynamic_bitset.hpp>

#include "krawbound/error.hpp"
#include "krawbound/rng.hpp"

namespace krawbound {

/// Dense storage cap: 2^24 values per function.
inline constexpr int kDenseCap = 24;

enum class Domain { Point, Fourier };

/// A function on {0,1}^n: 2^n point values, or 2^n Fourier coefficients in the
/// Walsh basis W_a(x) = (-1)^{a.x}. Bit j of an index is coordinate j.
template <class Scalar>
struct BasicCubeFunction {
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    int n = 0;
    Domain domain = Domain::Point;
    Vector data;

    BasicCubeFunction() = default;
    BasicCubeFunction(int dim, Domain d, Vector values) : n(dim), domain(d), data(std::move(values)) {
        if (dim < 0 || dim > kDenseCap) throw InputError("cube function: dimension outside [0, 24]");
        if (data.size() != (Eigen::Index{1} << dim)) throw InputError("cube function: need 2^n values");
    }

    static BasicCubeFunction zeros(int dim, Domain d = Domain::Point) {
        if (dim < 0 || dim > kDenseCap) throw InputError("cube function: dimension outside [0, 24]");
        return BasicCubeFunction(dim, d, Vector::Zero(Eigen::Index{1} << dim));
    }

    Eigen::Index size() const { return data.size(); }
};

using CubeFunction = BasicCubeFunction<double>;

/// Unnormalised in-place Walsh-Hadamard butterfly.
template <class Derived>
void wht_inplace(Eigen::MatrixBase<Derived>& v) {
    const Eigen::Index len = v.size();
    for (Eigen::Index h = 1; h < len; h <<= 1) {
        for (Eigen::Index i = 0; i < len; i += h << 1) {
            for (Eigen::Index j = i; j < i + h; ++j) {
                const auto a = v(j);
                const auto b = v(j + h);
                v(j) = a + b;
                v(j + h) = a - b;
            }
        }
    }
}

/// Switches domain: point -> Fourier divides by 2^n, Fourier -> point does not.
template <class Scalar>
BasicCubeFunction<Scalar> wht(const BasicCubeFunction<Scalar>& f) {
    BasicCubeFunction<Scalar> g = f;
    wht_inplace(g.data);
    if (f.domain == Domain::Point) {
        g.data /= static_cast<Scalar>(g.size());
        g.domain = Domain::Fourier;
    } else {
        g.domain = Domain::Point;
    }
    return g;
}

template <class Scalar>
BasicCubeFunction<Scalar> to_fourier(const BasicCubeFunction<Scalar>& f) {
    return f.domain == Domain::Fourier ? f : wht(f);
}

template <class Scalar>
BasicCubeFunction<Scalar> to_point(const BasicCubeFunction<Scalar>& f) {
    return f.domain == Domain::Point ? f : wht(f);
}

/// T_eps f as the Fourier multiplier (1 - 2 eps)^{|a|}; result in the input's domain.
template <class Scalar>
BasicCubeFunction<Scalar> apply_noise(const BasicCubeFunction<Scalar>& f, double eps) {
    if (!(eps >= 0.0 && eps <= 0.5)) throw InputError("apply_noise: eps outside [0, 1/2]");
    BasicCubeFunction<Scalar> g = to_fourier(f);
    std::vector<Scalar> rho_pow(static_cast<std::size_t>(f.n) + 1);
    rho_pow[0] = Scalar(1);
    for (int k = 1; k <= f.n; ++k) rho_pow[k] = rho_pow[k - 1] * static_cast<Scalar>(1.0 - 2.0 * eps);
    for (Eigen::Index a = 0; a < g.size(); ++a) g.data(a) *= rho_pow[std::popcount(static_cast<std::uint64_t>(a))];
    return f.domain == Domain::Point ? wht(g) : g;
}

/// Pi_k f: keeps the Fourier coefficients of weight k; result in the input's domain.
template <class Scalar>
BasicCubeFunction<Scalar> spectral_project(const BasicCubeFunction<Scalar>& f, int k) {
    if (k < 0 || k > f.n) throw InputError("spectral_project: k outside [0, n]");
    BasicCubeFunction<Scalar> g = to_fourier(f);
    for (Eigen::Index a = 0; a < g.size(); ++a) {
        if (std::popcount(static_cast<std::uint64_t>(a)) != k) g.data(a) = Scalar(0);
    }
    return f.domain == Domain::Point ? wht(g) : g;
}

/// ||Pi_k f||_2^2 for k = 0..n, by Parseval.
template <class Scalar>
std::vector<Scalar> level_weights(const BasicCubeFunction<Scalar>& f) {
    const BasicCubeFunction<Scalar> g = to_fourier(f);
    std::vector<Scalar> w(static_cast<std::size_t>(f.n) + 1, Scalar(0));
    for (Eigen::Index a = 0; a < g.size(); ++a) w[std::popcount(static_cast<std::uint64_t>(a))] += g.data(a) * g.data(a);
    return w;
}

/// <f, g> = 2^{-n} sum_x f(x) g(x).
template <class Scalar>
Scalar inner(const BasicCubeFunction<Scalar>& f, const BasicCubeFunction<Scalar>& g) {
    if (f.n != g.n) throw InputError("inner: dimension mismatch");
    const auto a = to_point(f);
    const auto b = to_point(g);
    return a.data.dot(b.data) / static_cast<Scalar>(a.size());
}

/// ||f||_p under the uniform measure; p = infinity gives the max norm.
template <class Scalar>
Scalar lp_norm(const BasicCubeFunction<Scalar>& f, double p) {
    const auto g = to_point(f);
    if (p == std::numeric_limits<double>::infinity()) return g.data.cwiseAbs().maxCoeff();
    if (!(p >= 1.0)) throw InputError("lp_norm: need p >= 1");
    using std::pow;
    const Scalar m = g.data.cwiseAbs().array().pow(static_cast<Scalar>(p)).sum() / static_cast<Scalar>(g.size());
    return pow(m, static_cast<Scalar>(1.0 / p));
}

/// <T_eps f, f>, computed spectrally.
template <class Scalar>
Scalar noise_inner(const BasicCubeFunction<Scalar>& f, double eps) {
    const auto w = level_weights(f);
    Scalar acc(0);
    Scalar rho(1);
    for (std::size_t k = 0; k < w.size(); ++k) {
        acc += rho * w[k];
        rho *= static_cast<Scalar>(1.0 - 2.0 * eps);
    }
    return acc;
}

/// T_eps f from the kernel sum_y eps^{|x-y|} (1-eps)^{n-|x-y|} f(y); O(4^n), n <= 12.
CubeFunction apply_noise_kernel(const CubeFunction& f, double eps);

/// f(x) -> (-1)^{|x|} f(x) on point values.
CubeFunction alternate_sign(const CubeFunction& f);

/// A subset of {0,1}^n as a membership bitset.
struct CubeSubset {
    int n = 0;
    boost::dynamic_bitset<> membership;

    CubeSubset() = default;
    explicit CubeSubset(int dim);
    std::size_t size() const { return membership.count(); }
    bool contains(std::uint64_t x) const { return membership.test(static_cast<std::size_t>(x)); }
    void insert(std::uint64_t x) { membership.set(static_cast<std::size_t>(x)); }
    std::vector<std::uint64_t> points() const;
};

/// a_i = #{(x, y) in A x A : |x - y| = i}, i = 0..n.
struct DistanceDistribution {
    int n = 0;
    std::vector<std::uint64_t> a;
};

CubeFunction indicator(const CubeSubset& A);

/// Pair scan, O(|A|^2).
DistanceDistribution distance_distribution_pairs(const CubeSubset& A);

/// Spectral path: the autocorrelation of 1_A is the inverse transform of its squared spectrum.
DistanceDistribution distance_distribution_spectral(const CubeSubset& A);

/// Chooses the cheaper of the two paths.
DistanceDistribution distance_distribution(const CubeSubset& A);

/// (1/|A|) sum_{i >= 1} a_i eps^i (1-eps)^{n-i}.
double undetected_error_probability(const CubeSubset& A, double eps);

/// All masks of weight s in {0,1}^n, increasing.
std::vector<std::uint32_t> level_masks(int n, int s);

/// Point-domain function with the given Fourier coefficients on the weight-s masks.
CubeFunction from_level_coefficients(int n, const std::vector<std::uint32_t>& masks, const Eigen::VectorXd& coeffs);

/// Homogeneous degree-s polynomial with independent standard normal coefficients,
/// each keyed by (seed, mask). Point domain.
CubeFunction random_homogeneous(int n, int s, const CounterRng& rng);

/// Hamming sphere of radius s around 0 and its indicator.
std::pair<CubeSubset, CubeFunction> sphere_indicator(int n, int s);

/// F(x_1, ..., x_m) = prod_j f(x_j) on {0,1}^{nm}, nm <= 24.
CubeFunction tensor_power(const CubeFunction& f, int m);

/// log2 E|F_m|^q from log2 E|f|^q: moments multiply under tensor powers.
inline double tensor_log2_moment(double log2_moment_f, int m) { return m * log2_moment_f; }

}  // namespace krawbound
