#include "krawbound/cube.hpp"

#include <cmath>

namespace krawbound {

CubeFunction apply_noise_kernel(const CubeFunction& f, double eps) {
    if (!(eps >= 0.0 && eps <= 0.5)) throw InputError("apply_noise_kernel: eps outside [0, 1/2]");
    if (f.n > 12) throw InputError("apply_noise_kernel: n exceeds 12");
    const CubeFunction g = to_point(f);
    std::vector<double> w(static_cast<std::size_t>(f.n) + 1);
    for (int d = 0; d <= f.n; ++d) w[d] = std::pow(eps, d) * std::pow(1.0 - eps, f.n - d);
    CubeFunction out = CubeFunction::zeros(f.n);
    for (Eigen::Index x = 0; x < g.size(); ++x) {
        double acc = 0.0;
        for (Eigen::Index y = 0; y < g.size(); ++y) acc += w[std::popcount(static_cast<std::uint64_t>(x ^ y))] * g.data(y);
        out.data(x) = acc;
    }
    return f.domain == Domain::Point ? out : wht(out);
}

CubeFunction alternate_sign(const CubeFunction& f) {
    CubeFunction g = to_point(f);
    for (Eigen::Index x = 0; x < g.size(); ++x) {
        if (std::popcount(static_cast<std::uint64_t>(x)) % 2 == 1) g.data(x) = -g.data(x);
    }
    return g;
}

CubeSubset::CubeSubset(int dim) : n(dim) {
    if (dim < 0 || dim > kDenseCap) throw InputError("cube subset: dimension outside [0, 24]");
    membership.resize(std::size_t{1} << dim);
}

std::vector<std::uint64_t> CubeSubset::points() const {
    std::vector<std::uint64_t> out;
    out.reserve(size());
    for (auto i = membership.find_first(); i != boost::dynamic_bitset<>::npos; i = membership.find_next(i)) out.push_back(i);
    return out;
}

CubeFunction indicator(const CubeSubset& A) {
    CubeFunction f = CubeFunction::zeros(A.n);
    for (auto x : A.points()) f.data(static_cast<Eigen::Index>(x)) = 1.0;
    return f;
}

DistanceDistribution distance_distribution_pairs(const CubeSubset& A) {
    DistanceDistribution d{A.n, std::vector<std::uint64_t>(static_cast<std::size_t>(A.n) + 1, 0)};
    const auto pts = A.points();
    for (auto x : pts) {
        for (auto y : pts) ++d.a[std::popcount(x ^ y)];
    }
    return d;
}

DistanceDistribution distance_distribution_spectral(const CubeSubset& A) {
    Eigen::VectorXd v = indicator(A).data;
    wht_inplace(v);
    v = v.cwiseAbs2();
    wht_inplace(v);
    v /= static_cast<double>(v.size());
    DistanceDistribution d{A.n, std::vector<std::uint64_t>(static_cast<std::size_t>(A.n) + 1, 0)};
    for (Eigen::Index z = 0; z < v.size(); ++z) {
        d.a[std::popcount(static_cast<std::uint64_t>(z))] += static_cast<std::uint64_t>(std::llround(v(z)));
    }
    return d;
}

DistanceDistribution distance_distribution(const CubeSubset& A) {
    const double m = static_cast<double>(A.size());
    const double spectral_cost = 2.0 * A.n * std::ldexp(1.0, A.n);
    return m * m <= spectral_cost ? distance_distribution_pairs(A) : distance_distribution_spectral(A);
}

double undetected_error_probability(const CubeSubset& A, double eps) {
    if (A.size() == 0) throw InputError("undetected_error_probability: empty code");
    if (!(eps >= 0.0 && eps <= 0.5)) throw InputError("undetected_error_probability: eps outside [0, 1/2]");
    const auto d = distance_distribution(A);
    double acc = 0.0;
    for (int i = 1; i <= A.n; ++i) {
        if (d.a[i] == 0) continue;
        acc += static_cast<double>(d.a[i]) * std::pow(eps, i) * std::pow(1.0 - eps, A.n - i);
    }
    return acc / static_cast<double>(A.size());
}

std::vector<std::uint32_t> level_masks(int n, int s) {
    if (n < 0 || n > kDenseCap || s < 0 || s > n) throw InputError("level_masks: need 0 <= s <= n <= 24");
    std::vector<std::uint32_t> out;
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t a = 0; a < total; ++a) {
        if (std::popcount(a) == s) out.push_back(a);
    }
    return out;
}

CubeFunction from_level_coefficients(int n, const std::vector<std::uint32_t>& masks, const Eigen::VectorXd& coeffs) {
    if (static_cast<Eigen::Index>(masks.size()) != coeffs.size()) throw InputError("from_level_coefficients: size mismatch");
    CubeFunction f = CubeFunction::zeros(n, Domain::Fourier);
    for (std::size_t j = 0; j < masks.size(); ++j) f.data(masks[j]) = coeffs(static_cast<Eigen::Index>(j));
    return wht(f);
}

CubeFunction random_homogeneous(int n, int s, const CounterRng& rng) {
    if (n > 20) throw InputError("random_homogeneous: n exceeds 20");
    const auto masks = level_masks(n, s);
    Eigen::VectorXd c(static_cast<Eigen::Index>(masks.size()));
    for (std::size_t j = 0; j < masks.size(); ++j) c(static_cast<Eigen::Index>(j)) = rng.normal_at(masks[j]);
    return from_level_coefficients(n, masks, c);
}

std::pair<CubeSubset, CubeFunction> sphere_indicator(int n, int s) {
    if (s < 0 || s > n) throw InputError("sphere_indicator: need 0 <= s <= n");
    CubeSubset A(n);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < total; ++x) {
        if (std::popcount(x) == s) A.insert(x);
    }
    return {A, indicator(A)};
}

CubeFunction tensor_power(const CubeFunction& f, int m) {
    if (m < 1) throw InputError("tensor_power: need m >= 1");
    if (static_cast<long>(f.n) * m > kDenseCap) throw InputError("tensor_power: nm exceeds the dense cap");
    const CubeFunction g = to_point(f);
    const int N = f.n * m;
    CubeFunction out = CubeFunction::zeros(N);
    const std::uint64_t block = (std::uint64_t{1} << f.n) - 1;
    for (Eigen::Index x = 0; x < out.size(); ++x) {
        double v = 1.0;
        for (int j = 0; j < m; ++j) v *= g.data(static_cast<Eigen::Index>((static_cast<std::uint64_t>(x) >> (j * f.n)) & block));
        out.data(x) = v;
    }
    return out;
}

}  // namespace krawbound
