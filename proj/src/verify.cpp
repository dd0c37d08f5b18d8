#include "krawbound/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

#include "krawbound/bivariate.hpp"
#include "krawbound/cube.hpp"
#include "krawbound/induction.hpp"
#include "krawbound/krawchouk.hpp"
#include "krawbound/parallel.hpp"
#include "krawbound/rng.hpp"

namespace krawbound {

// ---------------------------------------------------------------------------
// Grid plumbing

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 1) throw InputError("linspace: need count >= 1");
    if (count == 1) return {lo};
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) v[j] = lo + (hi - lo) * j / (count - 1);
    v.back() = hi;
    return v;
}

GridAxis GridSpec::parse_axis(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("grid axis must look like name=lo:hi:count or name=v1,v2");
    GridAxis a{text.substr(0, eq), {}};
    const std::string body = text.substr(eq + 1);
    auto num = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) throw InputError("");
            return v;
        } catch (const std::exception&) {
            throw InputError("grid axis '" + a.name + "': bad number '" + s + "'");
        }
    };
    if (std::count(body.begin(), body.end(), ':') == 2) {
        const auto c1 = body.find(':');
        const auto c2 = body.find(':', c1 + 1);
        const double lo = num(body.substr(0, c1));
        const double hi = num(body.substr(c1 + 1, c2 - c1 - 1));
        const double cnt = num(body.substr(c2 + 1));
        if (cnt < 1 || cnt != std::floor(cnt)) throw InputError("grid axis '" + a.name + "': count must be a positive integer");
        a.values = linspace(lo, hi, static_cast<int>(cnt));
    } else {
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) a.values.push_back(num(item));
        if (a.values.empty()) throw InputError("grid axis '" + a.name + "': no values");
    }
    return a;
}

std::vector<double> GridSpec::axis(const std::string& name, const std::vector<double>& fallback) const {
    for (const auto& a : axes) {
        if (a.name == name) return a.values;
    }
    return fallback;
}

void GridSpec::set(GridAxis a) {
    for (auto& b : axes) {
        if (b.name == a.name) {
            b = std::move(a);
            return;
        }
    }
    axes.push_back(std::move(a));
}

void finalize(SuiteReport& r, const Tolerances& tol) {
    r.worst_margin = std::numeric_limits<double>::infinity();
    r.pass = true;
    for (auto& c : r.cases) {
        if (tol.margin) {
            c.tol = *tol.margin;
            c.pass = c.margin >= -c.tol;
        }
        r.worst_margin = std::min(r.worst_margin, c.margin);
        r.pass = r.pass && c.pass;
    }
    if (r.cases.empty()) r.worst_margin = 0.0;
    r.pass = r.pass && r.counterexamples.empty();
}

namespace {

using Params = std::map<std::string, double>;

std::vector<int> as_ints(const std::vector<double>& v) {
    std::vector<int> out;
    for (double x : v) out.push_back(static_cast<int>(std::lround(x)));
    return out;
}

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        num += (x[j] - mx) * (y[j] - my);
        den += (x[j] - mx) * (x[j] - mx);
    }
    return den == 0.0 ? 0.0 : num / den;
}

/// Identity case: residual against its cap.
BoundReport residual_case(const std::string& name, Params params, double residual, double cap) {
    return make_report(name, std::move(params), residual, cap, 0.0);
}

/// Independent uniform and normal streams derived from one generator.
struct Draw {
    CounterRng uni;
    CounterRng nor;
    std::uint64_t cu = 0;
    std::uint64_t cn = 0;

    explicit Draw(const CounterRng& r) : uni(r.split(1)), nor(r.split(2)) {}
    double u() { return uni.uniform_at(cu++); }
    double z() { return nor.normal_at(cn++); }
    int pick(int lo, int hi) { return lo + static_cast<int>(std::floor(u() * (hi - lo + 1))); }
};

/// A random function on {0,1}^n from one of several shapes that stress different bounds.
CubeFunction random_function(int n, Draw& d) {
    CubeFunction f = CubeFunction::zeros(n);
    const Eigen::Index N = f.size();
    switch (d.pick(0, 4)) {
        case 0:
            for (Eigen::Index x = 0; x < N; ++x) f.data(x) = d.z();
            break;
        case 1: {
            const double density = 0.02 + 0.9 * d.u();
            for (Eigen::Index x = 0; x < N; ++x) f.data(x) = d.u() < density ? 1.0 : 0.0;
            f.data(static_cast<Eigen::Index>(d.pick(0, static_cast<int>(N) - 1))) = 1.0;
            break;
        }
        case 2: {
            const int radius = d.pick(0, n);
            const bool ball = d.u() < 0.5;
            const auto center = static_cast<std::uint64_t>(d.pick(0, static_cast<int>(N) - 1));
            for (Eigen::Index x = 0; x < N; ++x) {
                const int w = std::popcount(static_cast<std::uint64_t>(x) ^ center);
                f.data(x) = (w == radius || (ball && w < radius)) ? 1.0 : 0.0;
            }
            break;
        }
        case 3:
            for (Eigen::Index x = 0; x < N; ++x) f.data(x) = std::exp(3.0 * d.z());
            break;
        default: {
            const int s = d.pick(0, n / 2);
            f = random_homogeneous(n, s, CounterRng(static_cast<std::uint64_t>(d.pick(0, 1 << 30))));
            const double shift = d.z();
            f.data.array() += shift;
            break;
        }
    }
    return f;
}

/// Random point set of size at most `cap` with a random shape.
std::vector<std::uint64_t> random_support(int n, double cap, Draw& d) {
    const std::uint64_t N = std::uint64_t{1} << n;
    const auto m = static_cast<std::uint64_t>(std::max(1.0, std::floor(cap)));
    std::vector<std::uint64_t> pts;
    const auto center = static_cast<std::uint64_t>(d.pick(0, static_cast<int>(N) - 1));
    switch (d.pick(0, 2)) {
        case 0: {  // uniform random subset, by partial shuffle
            std::vector<std::uint64_t> all(N);
            std::iota(all.begin(), all.end(), 0);
            const std::uint64_t take = std::min<std::uint64_t>(m, N);
            for (std::uint64_t j = 0; j < take; ++j) {
                const auto k = j + static_cast<std::uint64_t>(std::floor(d.u() * (N - j)));
                std::swap(all[j], all[std::min(k, N - 1)]);
            }
            pts.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(take));
            break;
        }
        case 1: {  // subcube
            const int dim = std::min(n, static_cast<int>(std::floor(std::log2(static_cast<double>(m)))));
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << dim); ++x) pts.push_back(x ^ center);
            break;
        }
        default: {  // Hamming ball, largest radius that fits
            for (int r = 0; r <= n; ++r) {
                std::vector<std::uint64_t> shell;
                for (std::uint64_t x = 0; x < N; ++x) {
                    if (std::popcount(x ^ center) == r) shell.push_back(x);
                }
                if (pts.size() + shell.size() > m) {
                    for (std::size_t j = 0; pts.size() < m && j < shell.size(); ++j) pts.push_back(shell[j]);
                    break;
                }
                pts.insert(pts.end(), shell.begin(), shell.end());
            }
            break;
        }
    }
    return pts;
}

double log2_lp(const CubeFunction& f, double p) { return std::log2(lp_norm(f, p)); }

/// log2 ||T_eps f||_2 from the level weights.
double log2_noisy_l2(const std::vector<double>& w, double eps) {
    const double rho2 = (1.0 - 2.0 * eps) * (1.0 - 2.0 * eps);
    double acc = 0.0, r = 1.0;
    for (double x : w) {
        acc += r * x;
        r *= rho2;
    }
    return 0.5 * std::log2(acc);
}

// ---------------------------------------------------------------------------
// Extremal-ratio ascent

class MomentAscent {
public:
    MomentAscent(int n, int s, double p) : n_(n), p_(p), masks_(level_masks(n, s)), buf_(Eigen::Index{1} << n), grad_buf_(buf_.size()) {}

    std::size_t dim() const { return masks_.size(); }

    /// E|f|^p for f with coefficients c; leaves f in buf_.
    double moment(const Eigen::VectorXd& c) {
        buf_.setZero();
        for (std::size_t j = 0; j < masks_.size(); ++j) buf_(masks_[j]) = c(static_cast<Eigen::Index>(j));
        wht_inplace(buf_);
        double acc = 0.0;
        for (Eigen::Index x = 0; x < buf_.size(); ++x) acc += pabs(buf_(x));
        return acc / static_cast<double>(buf_.size());
    }

    /// Gradient of ln E|f|^p in c at the f left in buf_ by moment().
    Eigen::VectorXd log_gradient(double m) {
        for (Eigen::Index x = 0; x < buf_.size(); ++x) grad_buf_(x) = pderiv(buf_(x));
        wht_inplace(grad_buf_);
        Eigen::VectorXd g(static_cast<Eigen::Index>(masks_.size()));
        const double scale = p_ / (static_cast<double>(buf_.size()) * m);
        for (std::size_t j = 0; j < masks_.size(); ++j) g(static_cast<Eigen::Index>(j)) = grad_buf_(masks_[j]) * scale;
        return g;
    }

    struct Result {
        Eigen::VectorXd c;
        double log2_moment;
        bool converged;
    };

    Result run(Eigen::VectorXd c, int iterations) {
        c.normalize();
        double m = moment(c);
        bool converged = false;
        for (int it = 0; it < iterations && !converged; ++it) {
            Eigen::VectorXd g = log_gradient(m);
            g -= g.dot(c) * c;
            if (g.norm() < 1e-10) {
                converged = true;
                break;
            }
            double step = 0.1;
            bool moved = false;
            for (int h = 0; h < 40; ++h, step *= 0.5) {
                Eigen::VectorXd trial = (c + step * g).normalized();
                const double mt = moment(trial);
                if (mt > m) {
                    converged = std::log(mt / m) < 1e-13;
                    c = std::move(trial);
                    m = mt;
                    moved = true;
                    break;
                }
            }
            if (!moved) converged = true;
        }
        return {c, std::log2(m), converged};
    }

private:
    double pabs(double v) const {
        const double a = std::abs(v);
        if (p_ == 4.0) return (v * v) * (v * v);
        if (p_ == 3.0) return a * a * a;
        if (p_ == 6.0) return (v * v) * (v * v) * (v * v);
        if (p_ == 2.5) return a * a * std::sqrt(a);
        if (p_ == 2.0) return v * v;
        return std::pow(a, p_);
    }
    /// |v|^{p-2} v.
    double pderiv(double v) const {
        const double a = std::abs(v);
        if (p_ == 4.0) return v * v * v;
        if (p_ == 3.0) return a * v;
        if (p_ == 6.0) return (v * v) * (v * v) * v;
        if (p_ == 2.5) return std::sqrt(a) * v;
        if (p_ == 2.0) return v;
        return a == 0.0 ? 0.0 : std::pow(a, p_ - 2.0) * v;
    }

    int n_;
    double p_;
    std::vector<std::uint32_t> masks_;
    Eigen::VectorXd buf_;
    Eigen::VectorXd grad_buf_;
};

}  // namespace

ExtremalSearch search_extremal_ratio(int n, int s, double p, int budget, std::uint64_t seed, int iterations) {
    if (n < 1 || n > 14 || s < 0 || 2 * s > n) throw InputError("search_extremal_ratio: need n <= 14 and 0 <= s <= n/2");
    if (!(p >= 2.0)) throw InputError("search_extremal_ratio: need p >= 2");
    if (budget < 0 || iterations < 1) throw InputError("search_extremal_ratio: need budget >= 0 and iterations >= 1");
    ExtremalSearch out;
    out.bound_log2 = moment_bound(n, s, p);
    out.kraw_log2_ratio = s == 0 ? 0.0 : kraw_moments(n, s, p).log2_ratio;
    MomentAscent ascent(n, s, p);
    const auto M = static_cast<Eigen::Index>(ascent.dim());
    const CounterRng root(seed);
    out.best_log2_ratio = -std::numeric_limits<double>::infinity();
    for (int start = 0; start <= budget; ++start) {
        Eigen::VectorXd c(M);
        if (start == 0) {
            c.setOnes();  // the Krawchouk polynomial
        } else {
            const CounterRng r = root.split(static_cast<std::uint64_t>(start));
            for (Eigen::Index j = 0; j < M; ++j) c(j) = r.normal_at(static_cast<std::uint64_t>(j));
        }
        const auto res = ascent.run(c, iterations);
        ++out.starts;
        if (!res.converged) ++out.nonconverged;
        if (res.log2_moment > out.best_log2_ratio) {
            out.best_log2_ratio = res.log2_moment;
            out.best_fourier_coeffs.assign(res.c.data(), res.c.data() + res.c.size());
        }
    }
    if (s == 0) out.best_log2_ratio = 0.0;
    out.counterexample = out.best_log2_ratio > out.bound_log2 + 1e-9;
    return out;
}

SuiteReport degree_at_most_check(int n, int s, double p, int budget, std::uint64_t seed) {
    if (n < 1 || n > 14 || s < 0 || 2 * s > n) throw InputError("degree_at_most_check: need n <= 14 and 0 <= s <= n/2");
    if (!(p >= 2.0)) throw InputError("degree_at_most_check: need p >= 2");
    SuiteReport rep;
    rep.config.suite = "degree-at-most";
    rep.config.seed = seed;
    rep.config.restarts = budget;
    const double bound = moment_bound(n, s, p);
    std::vector<std::vector<std::uint32_t>> levels;
    for (int r = 0; r <= s; ++r) levels.push_back(level_masks(n, r));
    const CounterRng root(seed);
    rep.cases = parallel_map<BoundReport>(static_cast<std::size_t>(budget), [&](std::size_t t) {
        Draw d(root.split(t));
        CubeFunction F = CubeFunction::zeros(n, Domain::Fourier);
        // Heavy-tailed level weights, so some mixtures sit almost on a single level.
        for (int r = 0; r <= s; ++r) {
            const double w = std::exp(2.5 * d.z()) / std::sqrt(static_cast<double>(levels[r].size()));
            for (auto a : levels[r]) F.data(a) = w * d.z();
        }
        const CubeFunction f = wht(F);
        const double ratio = std::log2(lp_norm(f, p)) * p - 0.5 * p * std::log2(std::pow(lp_norm(f, 2.0), 2.0));
        return make_report("degree-at-most", {{"n", n}, {"s", s}, {"p", p}, {"trial", static_cast<double>(t)}}, ratio / n,
                           bound / n, 1e-9 / n);
    });
    rep.notes.push_back("no violation found within budget is not a proof");
    finalize(rep);
    return rep;
}

// ---------------------------------------------------------------------------
// Identity sweeps

namespace {

std::vector<std::tuple<int, int, double>> induction_grid(const GridSpec& g) {
    std::vector<std::tuple<int, int, double>> out;
    for (int n : as_ints(g.axis("n", {32, 64, 128}))) {
        for (double f : g.axis("s_frac", {0.125, 0.25, 0.375})) {
            const int s = static_cast<int>(std::lround(f * n));
            for (double p : g.axis("p", {2.5, 3.0, 4.0, 6.0})) out.emplace_back(n, s, p);
        }
    }
    return out;
}

template <class F>
std::vector<BoundReport> sweep2(const std::vector<double>& a, const std::vector<double>& b, F&& cell) {
    return parallel_map<BoundReport>(a.size() * b.size(), [&](std::size_t k) { return cell(a[k / b.size()], b[k % b.size()]); });
}

}  // namespace

SuiteReport identity_sweep(const std::string& tag, const GridSpec& g) {
    SuiteReport rep;
    rep.config.suite = tag;
    rep.config.grid = g;
    if (tag == "tau-symmetry") {
        const double cap = 1e-8;
        rep.cases = sweep2(g.axis("x", linspace(0, 0.5, 41)), g.axis("y", linspace(0, 0.5, 41)), [&](double x, double y) {
            const double r = std::abs(binary_entropy(y) + tau(x, y) - binary_entropy(x) - tau(y, x));
            return residual_case(tag, {{"x", x}, {"y", y}}, r, cap);
        });
    } else if (tag == "psi-two-reps") {
        rep.cases = sweep2(g.axis("p", linspace(2.1, 10, 101)), g.axis("x", linspace(0.01, 0.49, 101)), [&](double p, double x) {
            return residual_case(tag, {{"p", p}, {"x", x}}, std::abs(psi_first_rep(p, x) - psi_second_rep(p, x)), 1e-9);
        });
        for (double p : linspace(2.0, 10.0, 17)) {
            rep.cases.push_back(residual_case("psi-at-zero", {{"p", p}}, std::abs(psi(p, 0.0).value), 1e-10));
            rep.cases.push_back(residual_case("psi-at-half", {{"p", p}}, std::abs(psi(p, 0.5).value - (p - 2.0) / 2.0), 1e-10));
        }
        for (double x : linspace(0.0, 0.5, 11)) rep.cases.push_back(residual_case("psi-at-two", {{"x", x}}, std::abs(psi(2.0, x).value), 1e-10));
    } else if (tag == "pi-min") {
        rep.cases = sweep2(g.axis("sigma", linspace(0, 0.5, 21)), g.axis("kappa", linspace(0, 0.5, 21)), [&](double s, double k) {
            return residual_case(tag, {{"sigma", s}, {"kappa", k}}, std::abs(pi_fn(s, k) - pi_min_form(s, k)), 1e-8);
        });
    } else if (tag == "phi-transform") {
        rep.cases = sweep2(g.axis("sigma", linspace(0, 0.5, 21)), g.axis("eps", linspace(0, 0.5, 21)), [&](double s, double e) {
            return residual_case(tag, {{"sigma", s}, {"eps", e}}, std::abs(phi(s, e) - phi_transform(s, e)), 1e-6);
        });
    } else if (tag == "edge-iso-min") {
        rep.cases = sweep2(g.axis("sigma", linspace(0.05, 0.5, 10)), g.axis("y_frac", linspace(0, 1, 11)), [&](double s, double f) {
            const double y = f * 2.0 * s * (1.0 - s);
            return residual_case(tag, {{"sigma", s}, {"y", y}}, std::abs(edge_iso_min_check(s, y).gap), 1e-6);
        });
    } else if (tag == "phi-equals-F" || tag == "u-star" || tag == "rho-bounds") {
        const auto grid = induction_grid(g);
        rep.cases = parallel_map<BoundReport>(grid.size(), [&](std::size_t k) {
            const auto [n, s, p] = grid[k];
            const auto ip = induction_params(n, s, p);
            const Params prm{{"n", n}, {"s", s}, {"p", p}};
            if (tag == "phi-equals-F") {
                const double F = cap_F(std::pow(ip.rho, 0.5 * p), 1.0, p);
                return residual_case(tag, prm, std::abs(ip.phi_big - F) / ip.phi_big, 1e-9);
            }
            if (tag == "u-star") return residual_case(tag, prm, ip.stationarity_residual, 1e-8);
            const double outside = ip.rho > 1.0 && ip.rho < p - 1.0 ? 0.0 : 1.0;
            return residual_case(tag, prm, outside + ip.t_residual, 1e-10);
        });
    } else if (tag == "ue-grid") {
        rep.cases = sweep2(g.axis("R", {0.3, 0.5, 0.7}), g.axis("eps", {0.05, 0.1, 0.25}), [&](double R, double eps) {
            const double sigma = inverse_entropy(R);
            double best = -std::numeric_limits<double>::infinity();
            constexpr int kPoints = 100000;
            for (int j = 0; j <= kPoints; ++j) best = std::max(best, alpha_value(sigma, eps, sigma * j / kPoints));
            // The grid maximum can only undershoot the true maximum.
            const double diff = ue_exponent(R, eps) - best;
            return residual_case(tag, {{"R", R}, {"eps", eps}}, diff < 0 ? 1.0 - diff : std::abs(diff), 1e-8);
        });
    } else {
        throw InputError("identity_sweep: unknown tag '" + tag + "'");
    }
    finalize(rep);
    return rep;
}

// ---------------------------------------------------------------------------
// Tightness sweeps

SuiteReport tightness_sweep(const std::string& tag, const GridSpec& g) {
    SuiteReport rep;
    rep.config.suite = tag;
    rep.config.grid = g;
    if (tag == "edge-iso-sphere") {
        double c = 0.0;
        for (int n : as_ints(g.axis("n", {40}))) {
            for (int s = 1; 2 * s <= n; ++s) {
                for (int i = 2; i <= 2.0 * s * (n - s) / n + 1e-9; i += 2) {
                    const double bound = edge_iso_bound(n, static_cast<double>(s) / n, i);
                    const double actual = log2_abs(exact_binomial(s, i / 2) * exact_binomial(n - s, i / 2)) / n;
                    rep.cases.push_back(make_report(tag, {{"n", n}, {"s", s}, {"i", i}}, actual, bound, 1e-12));
                    c = std::max(c, std::exp2((bound - actual) * n) / i);
                }
            }
        }
        rep.measured["c_factor_over_i"] = c;
        rep.cases.push_back(make_report("edge-iso-constant", {}, c, 10.0, 0.0));
    } else if (tag == "hc-sphere") {
        const double eps = g.axis("eps", {0.15}).front();
        std::vector<double> ls, lf;
        for (int s : as_ints(g.axis("s", linspace(2, 32, 31)))) {
            const int n = 4 * s;
            const double f = sphere_hc_log2_factor(n, s, eps);
            rep.cases.push_back(make_report(tag, {{"n", n}, {"s", s}, {"eps", eps}}, -f / n, 0.0, 1e-9));
            ls.push_back(std::log2(s));
            lf.push_back(std::log2(std::max(std::exp2(f), 1.0)));
            rep.measured["log2_factor_s" + std::to_string(s)] = f;
        }
        // Upper half of the grid: the order is asymptotic.
        const std::size_t h = ls.size() / 2;
        const double slope = fit_slope({ls.begin() + h, ls.end()}, {lf.begin() + h, lf.end()});
        rep.measured["slope_log_factor_vs_log_s"] = slope;
        rep.cases.push_back(make_report("hc-sphere-order", {{"eps", eps}}, slope, 0.75, 0.0));
    } else if (tag == "ue-union") {
        const double eps = g.axis("eps", {0.1}).front();
        for (int n : as_ints(g.axis("n", {200}))) {
            for (double R : g.axis("R", {0.3, 0.5, 0.7})) {
                const int s = static_cast<int>(std::lround(inverse_entropy(R) * n));
                const double brute = sphere_union_ue_log2(n, s, eps) / n;
                const double formula = ue_exponent(binary_entropy(static_cast<double>(s) / n), eps);
                rep.cases.push_back(make_report(tag, {{"n", n}, {"R", R}, {"s", s}, {"eps", eps}}, std::abs(brute - formula), 0.05, 0.0));
            }
        }
        // Polynomial-order check of 2^{n e} / P_ue over n.
        for (double R : g.axis("R", {0.3, 0.5, 0.7})) {
            std::vector<double> ln, lg;
            for (int n : {50, 100, 200}) {
                const int s = static_cast<int>(std::lround(inverse_entropy(R) * n));
                const double gap = ue_exponent(binary_entropy(static_cast<double>(s) / n), eps) * n - sphere_union_ue_log2(n, s, eps);
                ln.push_back(std::log2(n));
                lg.push_back(gap);
            }
            std::ostringstream key;
            key << "poly_degree_R" << R;
            rep.measured[key.str()] = fit_slope(ln, lg);
        }
    } else if (tag == "proj-sphere") {
        const int n = as_ints(g.axis("n", {16})).front();
        const int s = as_ints(g.axis("s", {3})).front();
        const double p = g.axis("p", {4}).front();
        double c = 0.0;
        const double edge = n / 2.0 - std::sqrt(static_cast<double>(s) * (n - s));
        for (int k = 0; k <= n; ++k) {
            const double f = sphere_projection_log2_factor(n, s, k, p);
            if (std::isinf(f)) continue;
            rep.cases.push_back(make_report(tag, {{"n", n}, {"s", s}, {"k", k}, {"p", p}}, -f / n, 0.0, 1e-9));
            if (k >= 1 && k <= edge) c = std::max(c, std::exp2(f) / std::pow(static_cast<double>(k) * s, 0.25));
        }
        rep.measured["c_factor_over_ks_quarter"] = c;
    } else if (tag == "proj-roots") {
        for (int n : as_ints(g.axis("n", {16, 32, 64}))) {
            for (int s : as_ints(g.axis("s", {2, 3, 4}))) {
                double worst = 0.0;
                for (const auto& iv : l2_between_roots(n, s)) {
                    if (iv.empty) continue;
                    const double f = sphere_projection_log2_factor(n, s, iv.best_i, 2.0);
                    if (std::isinf(f)) continue;
                    rep.cases.push_back(make_report(tag, {{"n", n}, {"s", s}, {"k", iv.best_i}}, -f / n, 0.0, 1e-9));
                    worst = std::max(worst, f);
                }
                rep.measured["log2_factor_over_n52_n" + std::to_string(n) + "_s" + std::to_string(s)] = worst - 2.5 * std::log2(n);
            }
        }
    } else if (tag == "tail-sphere") {
        for (int n : as_ints(g.axis("n", {64, 128, 256}))) {
            const int s = n / 4;
            const double x = static_cast<double>(s) / n;
            const double lift = 0.5 * (log2_abs(exact_binomial(n, s)) - binary_entropy(x) * n);
            const auto values = kraw_values_fast(n, s);
            double c = 0.0;
            for (int i = 1; i <= n / 2.0 - std::sqrt(static_cast<double>(s) * (n - s)); ++i) {
                const TailBound t = tail_bound(n, s, i);
                const double thr = lift + 0.5 * log2_abs(exact_binomial(n, s)) + t.threshold_exponent * n;
                std::vector<LogValue> hits;
                for (int j = 0; j <= n; ++j) {
                    if (values[j] != 0 && log2_abs(values[j]) >= thr - 1e-12) hits.push_back(LogValue::from_log2(log2_binomial(n, j) - n));
                }
                const LogValue prob = log_sum_exp2(hits);
                const double lhs = prob.zero ? -std::numeric_limits<double>::infinity() : prob.exponent;
                // Lower bound: prob >= (c / sqrt(i)) 2^{(H - 1) n}; record the c needed.
                rep.cases.push_back(make_report(tag, {{"n", n}, {"s", s}, {"i", i}}, -lhs / n, std::numeric_limits<double>::max(), 0.0));
                c = std::max(c, std::exp2(t.prob_exponent * n - lhs) / std::sqrt(static_cast<double>(i)));
            }
            rep.measured["c_inverse_n" + std::to_string(n)] = c;
        }
    } else {
        throw InputError("tightness_sweep: unknown tag '" + tag + "'");
    }
    finalize(rep);
    return rep;
}

// ---------------------------------------------------------------------------
// Remaining suites

namespace {

SuiteReport kraw_identities(const SuiteConfig& cfg) {
    SuiteReport rep;
    const int n_max = as_ints(cfg.grid.axis("n_max", {64})).front();
    if (n_max < 0 || n_max > 256) throw InputError("kraw-identities: n_max outside [0, 256]");
    std::vector<std::vector<KrawTable>> tables(static_cast<std::size_t>(n_max) + 2);
    parallel_for(tables.size(), [&](std::size_t n) { tables[n] = kraw_tables_by_recurrence(static_cast<int>(n), static_cast<int>(n)); });
    std::size_t total = 0;
    for (int n = 0; n <= n_max; ++n) {
        const auto& T = tables[n];
        const auto row = binomial_row(n);
        long bad_zero = 0, bad_sym = 0, bad_rec = 0, bad_norm = 0, bad_dim = 0, bad_sum = 0;
        for (int s = 0; s <= n; ++s) {
            const auto& K = T[s].values;
            bad_zero += K[0] != row[s];
            bad_sum += kraw_values_fast(n, s) != K;
            BigInt norm = 0;
            for (int i = 0; i <= n; ++i) {
                bad_sym += K[n - i] != ((s % 2 == 0) ? K[i] : BigInt(-K[i]));
                bad_rec += row[i] * K[i] != row[s] * T[i].values[s];
                norm += row[i] * K[i] * K[i];
                const auto& up = tables[n + 1][s].values[i];
                bad_dim += up != K[i] + (s > 0 ? T[s - 1].values[i] : BigInt(0));
                total += 3;
            }
            bad_norm += norm != (BigInt(1) << n) * row[s];
            total += 3;
        }
        const Params prm{{"n", n}};
        rep.cases.push_back(make_report("value-at-zero", prm, static_cast<double>(bad_zero), 0.0, 0.0));
        rep.cases.push_back(make_report("symmetry", prm, static_cast<double>(bad_sym), 0.0, 0.0));
        rep.cases.push_back(make_report("reciprocity", prm, static_cast<double>(bad_rec), 0.0, 0.0));
        rep.cases.push_back(make_report("l2-norm", prm, static_cast<double>(bad_norm), 0.0, 0.0));
        rep.cases.push_back(make_report("dimension-recursion", prm, static_cast<double>(bad_dim), 0.0, 0.0));
        rep.cases.push_back(make_report("point-recurrence", prm, static_cast<double>(bad_sum), 0.0, 0.0));
    }
    rep.measured["identities_checked"] = static_cast<double>(total);
    return rep;
}

SuiteReport kraw_roots_suite(const SuiteConfig& cfg) {
    SuiteReport rep;
    const int n_max = as_ints(cfg.grid.axis("n_max", {64})).front();
    for (int n = 2; n <= n_max; ++n) {
        for (int s = 1; 2 * s <= n; ++s) {
            const auto r = kraw_roots(n, s);
            double bad = static_cast<double>(r.roots.size() != static_cast<std::size_t>(s));
            bad += !std::is_sorted(r.roots.begin(), r.roots.end());
            const double spread = std::sqrt(static_cast<double>(s) * (n - s));
            if (!r.roots.empty()) bad += r.roots.front() < n / 2.0 - spread - 1e-9;
            if (!r.roots.empty()) bad += r.roots.back() > n / 2.0 + spread + 1e-9;
            rep.cases.push_back(make_report("kraw-roots", {{"n", n}, {"s", s}}, bad, 0.0, 0.0));
        }
    }
    return rep;
}

SuiteReport cube_identities(const SuiteConfig& cfg) {
    SuiteReport rep;
    const int count = cfg.restarts > 0 ? cfg.restarts : 100;
    const CounterRng root(cfg.seed);
    rep.cases = parallel_map<BoundReport>(static_cast<std::size_t>(count), [&](std::size_t t) {
        Draw d(root.split(t));
        const int n = d.pick(2, 10);
        const CubeFunction f = random_function(n, d);
        const double eps = 0.5 * d.u();
        double r = (apply_noise(f, eps).data - apply_noise_kernel(f, eps).data).cwiseAbs().maxCoeff() /
                   std::max(1.0, f.data.cwiseAbs().maxCoeff());
        // Parseval, and the sign flip reversing levels.
        const auto w = level_weights(f);
        const auto wf = level_weights(alternate_sign(f));
        double sum = 0.0;
        for (int k = 0; k <= n; ++k) {
            sum += w[k];
            r = std::max(r, std::abs(w[k] - wf[n - k]) / std::max(1.0, w[k]));
        }
        r = std::max(r, std::abs(sum - std::pow(lp_norm(f, 2.0), 2.0)) / std::max(1.0, sum));
        // Distance distribution two ways.
        CubeSubset A(n);
        for (Eigen::Index x = 0; x < f.size(); ++x) {
            if (d.u() < 0.3) A.insert(static_cast<std::uint64_t>(x));
        }
        if (A.size() > 0) r = std::max(r, distance_distribution_pairs(A).a == distance_distribution_spectral(A).a ? 0.0 : 1.0);
        // Sphere noise stability against the dense operator.
        const int s = d.pick(0, n);
        const auto sph = sphere_indicator(n, s).second;
        const double dense = std::log2(noise_inner(sph, eps));
        r = std::max(r, std::abs(dense - sphere_noise_log2(n, s, eps)) / n);
        return residual_case("cube-identities", {{"n", n}, {"trial", static_cast<double>(t)}}, r, 1e-9);
    });
    return rep;
}

SuiteReport main_inequality(const SuiteConfig& cfg) {
    SuiteReport rep;
    const int restarts = cfg.restarts > 0 ? cfg.restarts : 200;
    const int iterations = cfg.iterations > 0 ? cfg.iterations : 500;
    struct Cell {
        int n, s;
        double p;
    };
    std::vector<Cell> cells;
    for (int n : as_ints(cfg.grid.axis("n", {6, 8, 10, 12}))) {
        for (int s = 1; 2 * s <= n; ++s) {
            for (double p : cfg.grid.axis("p", {2.5, 3.0, 4.0, 6.0})) cells.push_back({n, s, p});
        }
    }
    const CounterRng root(cfg.seed);
    const auto results = parallel_map<ExtremalSearch>(cells.size(), [&](std::size_t k) {
        return search_extremal_ratio(cells[k].n, cells[k].s, cells[k].p, restarts, root.split(k).bits_at(0), iterations);
    });
    int nonconverged = 0;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const auto& c = cells[k];
        const auto& r = results[k];
        const Params prm{{"n", c.n}, {"s", c.s}, {"p", c.p}};
        rep.cases.push_back(make_report("main-inequality", prm, r.best_log2_ratio / c.n, r.bound_log2 / c.n, 1e-9 / c.n));
        rep.cases.push_back(make_report("krawchouk-start", prm, r.kraw_log2_ratio / c.n, r.bound_log2 / c.n, 1e-9 / c.n));
        nonconverged += r.nonconverged;
        if (r.counterexample) rep.counterexamples.push_back({"main-inequality", prm, r.best_log2_ratio, r.bound_log2, r.best_fourier_coeffs});
    }
    rep.measured["starts_not_converged"] = nonconverged;
    rep.notes.push_back("no counterexample found within budget is not a certificate of the global maximum");
    return rep;
}

enum class BruteKind { Classic, Refined, SetNoise, SupportedProj, Proj };

SuiteReport brute_suite(const SuiteConfig& cfg, BruteKind kind, const std::string& tag) {
    SuiteReport rep;
    const int count = cfg.restarts > 0 ? cfg.restarts : 1000;
    const int n_lo = as_ints(cfg.grid.axis("n_min", {kind == BruteKind::SetNoise ? 14.0 : 6.0})).front();
    const int n_hi = as_ints(cfg.grid.axis("n_max", {kind == BruteKind::SupportedProj || kind == BruteKind::Proj ? 12.0 : 14.0})).front();
    if (n_lo < 1 || n_hi > 14 || n_lo > n_hi) throw InputError(tag + ": need 1 <= n_min <= n_max <= 14");
    const CounterRng root(cfg.seed);
    rep.cases = parallel_map<BoundReport>(static_cast<std::size_t>(count), [&](std::size_t t) {
        Draw d(root.split(t));
        const int n = d.pick(n_lo, n_hi);
        Params prm{{"n", n}, {"trial", static_cast<double>(t)}};
        switch (kind) {
            case BruteKind::Classic:
            case BruteKind::Refined: {
                const CubeFunction f = random_function(n, d);
                const double eps = 0.5 * d.u();
                const double q = 1.0 + (1.0 - 2.0 * eps) * (1.0 - 2.0 * eps);
                const double lhs = log2_noisy_l2(level_weights(f), eps);
                prm["eps"] = eps;
                if (kind == BruteKind::Classic) return make_report(tag, prm, lhs / n, log2_lp(f, q) / n, 1e-9);
                const double p = d.u() < 0.3 ? q : q + 5.0 * d.u();
                const double lp = log2_lp(f, p);
                const double r = std::clamp((lp - log2_lp(f, 1.0)) / n, 0.0, (p - 1.0) / p);
                prm["p"] = p;
                return make_report(tag, prm, lhs / n, hypercontractive_bound(r, eps, p) + lp / n, 1e-9);
            }
            case BruteKind::SetNoise:
            case BruteKind::SupportedProj: {
                const double sigma = 0.02 + 0.48 * d.u();
                const auto pts = random_support(n, std::exp2(binary_entropy(sigma) * n), d);
                CubeFunction f = CubeFunction::zeros(n);
                const bool positive = d.u() < 0.5;
                for (auto x : pts) f.data(static_cast<Eigen::Index>(x)) = positive ? std::exp(d.z()) : d.z();
                const auto w = level_weights(f);
                const double norm2 = std::accumulate(w.begin(), w.end(), 0.0);
                prm["sigma"] = sigma;
                prm["support"] = static_cast<double>(pts.size());
                if (kind == BruteKind::SetNoise) {
                    const double eps = 0.5 * d.u();
                    prm["eps"] = eps;
                    return make_report(tag, prm, std::log2(noise_inner(f, eps) / norm2) / n, set_noise_bound(sigma, eps), 1e-9);
                }
                BoundReport worst;
                worst.margin = std::numeric_limits<double>::infinity();
                for (int k = 0; k <= n; ++k) {
                    if (w[k] <= 0.0) continue;
                    prm["k"] = k;
                    auto c = make_report(tag, prm, 0.5 * std::log2(w[k] / norm2) / n, supported_projection_bound(n, k, sigma), 1e-9);
                    if (c.margin < worst.margin) worst = c;
                }
                return worst;
            }
            case BruteKind::Proj: {
                const CubeFunction f = random_function(n, d);
                const double p = 2.0 + 6.0 * d.u();
                const double lp = log2_lp(f, p);
                const double r = std::clamp((lp - log2_lp(f, 1.0)) / n, 0.0, (p - 1.0) / p);
                const auto w = level_weights(f);
                prm["p"] = p;
                BoundReport worst;
                worst.margin = std::numeric_limits<double>::infinity();
                for (int k = 0; k <= n; ++k) {
                    if (w[k] <= 0.0) continue;
                    prm["k"] = k;
                    auto c = make_report(tag, prm, 0.5 * std::log2(w[k]) / n, projection_bound(n, k, p, r) + lp / n, 1e-9);
                    if (c.margin < worst.margin) worst = c;
                }
                return worst;
            }
        }
        throw InternalError("brute_suite: unhandled kind");
    });
    return rep;
}

SuiteReport tensorization(const SuiteConfig& cfg) {
    SuiteReport rep;
    const int n = 4, s = 1;
    const double p = 4.0;
    const double target = psi(p, static_cast<double>(s) / n).value;
    std::vector<double> gaps;
    const auto ms = as_ints(cfg.grid.axis("m", {8, 16, 32, 64, 128, 256, 512}));
    for (int m : ms) {
        const double g = target - kraw_moments(n * m, s * m, p).log2_ratio / (n * m);
        gaps.push_back(g);
        rep.measured["gap_m" + std::to_string(m)] = g;
    }
    int rises = 0;
    for (std::size_t j = 1; j < gaps.size(); ++j) rises += std::abs(gaps[j]) > std::abs(gaps[j - 1]);
    rep.cases.push_back(make_report("tensorization-monotone", {}, rises, 0.0, 0.0));
    rep.cases.push_back(make_report("tensorization-limit", {{"m", ms.back()}}, std::abs(gaps.back()), 0.01, 0.0));
    return rep;
}

SuiteReport hanner(const SuiteConfig& cfg) {
    SuiteReport rep;
    const double p = cfg.grid.axis("p", {4.0}).front();
    double prev = std::numeric_limits<double>::infinity();
    for (int n : as_ints(cfg.grid.axis("n", {64, 128, 256, 512}))) {
        const auto h = hanner_gap_kraw(n, n / 4, p);
        rep.cases.push_back(make_report("hanner-inequality", {{"n", n}, {"p", p}}, -h.log2_ratio_per_n, 0.0, 1e-12));
        rep.cases.push_back(make_report("hanner-decreasing", {{"n", n}, {"p", p}}, h.log2_ratio_per_n, prev, 0.0));
        rep.measured["log2_ratio_per_n_n" + std::to_string(n)] = h.log2_ratio_per_n;
        prev = h.log2_ratio_per_n;
    }
    return rep;
}

SuiteReport concentration(const SuiteConfig& cfg) {
    SuiteReport rep;
    const int n = as_ints(cfg.grid.axis("n", {512})).front();
    const double p = cfg.grid.axis("p", {4.0}).front();
    const double window = cfg.grid.axis("window", {4.0}).front();
    for (double f : cfg.grid.axis("s_frac", {0.125, 0.25})) {
        const int s = static_cast<int>(std::lround(f * n));
        const auto c = lp_concentration(n, s, p, window);
        rep.cases.push_back(make_report("concentration", {{"n", n}, {"s", s}, {"p", p}, {"i0", c.i0}}, 0.99, c.mass_in_window, 0.0));
        // The default window spans most weights at this n; narrower ones show the actual spread.
        for (double w : {0.05, 0.1, 0.25, 0.5}) {
            char key[64];
            std::snprintf(key, sizeof key, "share_s%d_window%g", s, w);
            rep.measured[key] = lp_concentration(n, s, p, w).mass_in_window;
        }
    }
    rep.measured["window_halfwidth"] = window * std::sqrt(n * std::log(static_cast<double>(n)));
    return rep;
}

SuiteReport recursion(const SuiteConfig& cfg) {
    SuiteReport rep;
    const double p = cfg.grid.axis("p", {4.0}).front();
    double prev = std::numeric_limits<double>::infinity(), prev_ratio = prev;
    for (int n : as_ints(cfg.grid.axis("n", {256, 512, 1024}))) {
        const auto r = recursion_residual(n, n / 4, p);
        const Params prm{{"n", n}, {"s", n / 4}, {"p", p}};
        rep.cases.push_back(make_report("recursion-decreasing", prm, r.residual, prev, 0.0));
        rep.cases.push_back(make_report("ratio-decreasing", prm, r.ratio_residual, prev_ratio, 0.0));
        rep.measured["residual_n" + std::to_string(n)] = r.residual;
        rep.measured["ratio_residual_n" + std::to_string(n)] = r.ratio_residual;
        rep.measured["eps_scale_n" + std::to_string(n)] = r.eps_scale;
        prev = r.residual;
        prev_ratio = r.ratio_residual;
    }
    return rep;
}

SuiteReport moment_gap_suite(const SuiteConfig& cfg) {
    SuiteReport rep;
    double C = 0.0;
    for (int n : as_ints(cfg.grid.axis("n", {16, 32, 64, 128}))) {
        for (int s = 1; 2 * s <= n; ++s) {
            for (double p : cfg.grid.axis("p", {2.5, 3.0, 4.0, 6.0})) {
                const auto g = moment_gap(n, s, p);
                rep.cases.push_back(make_report("moment-gap", {{"n", n}, {"s", s}, {"p", p}}, g.kraw_log2 / n, g.bound_log2 / n, 1e-9 / n));
                C = std::max(C, std::exp2((g.gap_log2 - std::log2(n) - 0.25 * p * std::log2(s)) / p));
            }
        }
    }
    rep.measured["fitted_C"] = C;
    return rep;
}

SuiteReport moment_baseline(const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.cases = sweep2(cfg.grid.axis("p", linspace(2.1, 10, 41)), cfg.grid.axis("x", linspace(0.01, 0.49, 41)), [](double p, double x) {
        return make_report("moment-baseline", {{"p", p}, {"x", x}}, psi(p, x).value, psi_hypercontractive(p, x), 0.0);
    });
    for (auto& c : rep.cases) c.pass = c.margin > 0.0;
    return rep;
}

SuiteReport tail_suite(const SuiteConfig& cfg) {
    SuiteReport rep;
    for (int n : as_ints(cfg.grid.axis("n", {64, 128, 256}))) {
        for (double f : cfg.grid.axis("s_frac", {0.125, 0.25, 0.5})) {
            const int s = static_cast<int>(std::lround(f * n));
            for (int i = 0; 2 * i <= n; ++i) rep.cases.push_back(kraw_tail_check(n, s, i, 1e-9));
            // Branch agreement at the region edge.
            const double x = static_cast<double>(s) / n;
            const double y = root_region_edge(x);
            const double inner = binary_entropy(x) + exponent_I(x, y) - exponent_I(x, 0.0);
            const double outer = 0.5 * (1.0 + binary_entropy(x) - binary_entropy(y));
            rep.cases.push_back(residual_case("tail-branch-continuity", {{"n", n}, {"s", s}}, std::abs(inner - outer), 1e-8));
        }
    }
    return rep;
}

SuiteReport kleitman_west(const SuiteConfig& cfg) {
    SuiteReport rep;
    for (int n : as_ints(cfg.grid.axis("n", linspace(4, 200, 50)))) {
        for (int s = 2; 2 * s <= n; ++s) {
            if (2.0 > 2.0 * s * (n - s) / n) continue;
            const double lhs = edge_iso_bound(n, static_cast<double>(s) / n, 2) * n;
            rep.cases.push_back(make_report("pair-count-distance-two", {{"n", n}, {"s", s}}, lhs, std::log2(kleitman_west_bound(n, s)), 1e-12));
        }
    }
    return rep;
}

SuiteReport edge_iso_exhaustive(const SuiteConfig& cfg) {
    SuiteReport rep;
    auto check = [&](const CubeSubset& A, Params prm) {
        const double L = std::log2(static_cast<double>(A.size()));
        const double sigma = inverse_entropy(std::min(1.0, L / A.n));
        const auto dd = distance_distribution(A);
        BoundReport worst;
        worst.margin = std::numeric_limits<double>::infinity();
        bool any = false;
        for (int i = 1; i <= 2.0 * sigma * (1.0 - sigma) * A.n; ++i) {
            const double actual = dd.a[i] == 0 ? -std::numeric_limits<double>::infinity() : std::log2(static_cast<double>(dd.a[i])) - L;
            prm["i"] = i;
            auto c = make_report("edge-iso", prm, actual / A.n, edge_iso_bound(A.n, sigma, i), 1e-9);
            if (!any || c.margin < worst.margin) worst = c;
            any = true;
        }
        if (any) rep.cases.push_back(worst);
    };
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t N = std::uint64_t{1} << n;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << N); ++mask) {
            CubeSubset A(n);
            for (std::uint64_t x = 0; x < N; ++x) {
                if (mask >> x & 1) A.insert(x);
            }
            check(A, {{"n", n}, {"mask", static_cast<double>(mask)}});
        }
    }
    const int count = cfg.restarts > 0 ? cfg.restarts : 1000;
    const CounterRng root(cfg.seed);
    for (int t = 0; t < count; ++t) {
        Draw d(root.split(static_cast<std::uint64_t>(t)));
        const int n = d.pick(5, 10);
        const double sigma = 0.02 + 0.48 * d.u();
        CubeSubset A(n);
        for (auto x : random_support(n, std::exp2(binary_entropy(sigma) * n), d)) A.insert(x);
        check(A, {{"n", n}, {"trial", t}});
    }
    return rep;
}

struct Entry {
    SuiteInfo info;
    std::function<SuiteReport(const SuiteConfig&)> run;
};

SuiteReport via_identity(const SuiteConfig& c) { return identity_sweep(c.suite, c.grid); }
SuiteReport via_tightness(const SuiteConfig& c) { return tightness_sweep(c.suite, c.grid); }

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = [] {
        using K = SuiteKind;
        std::vector<Entry> e;
        auto add = [&](std::string tag, K kind, std::string summary, std::vector<std::string> covers, auto fn) {
            e.push_back({{std::move(tag), kind, std::move(summary), std::move(covers)}, fn});
        };
        add("kraw-identities", K::Exact, "exact Krawchouk value, symmetry, reciprocity, norm and recursion identities",
            {"krawchouk properties"}, kraw_identities);
        add("kraw-roots", K::Exact, "root count and root interval of Krawchouk polynomials", {"krawchouk properties"}, kraw_roots_suite);
        add("cube-identities", K::Exact, "noise operator, Parseval, level reversal, distance distribution and sphere noise stability",
            {"fourier and noise machinery", "distance distribution", "sphere noise stability"}, cube_identities);
        add("tau-symmetry", K::Identity, "entropy-shifted symmetry of tau", {"bivariate identities"}, via_identity);
        add("psi-two-reps", K::Identity, "agreement of the two psi representations and psi boundary values", {"bivariate identities"},
            via_identity);
        add("pi-min", K::Identity, "pi as a minimum over delta", {"bivariate identities"}, via_identity);
        add("phi-transform", K::Identity, "phi as a maximum over the point variable", {"bivariate identities"}, via_identity);
        add("edge-iso-min", K::Identity, "edge-isoperimetric exponent as a minimum over noise", {"bivariate identities"}, via_identity);
        add("phi-equals-F", K::Identity, "Phi equals the Hanner functional at rho^{p/2}", {"induction objects"}, via_identity);
        add("u-star", K::Identity, "closed-form stationary point of the Hanner functional", {"induction objects"}, via_identity);
        add("rho-bounds", K::Identity, "1 < rho < p - 1 and the quadratic for t", {"induction objects"}, via_identity);
        add("ue-grid", K::Identity, "undetected-error exponent equals the maximum of alpha", {"undetected error exponent"}, via_identity);
        add("main-inequality", K::Search, "gradient search for homogeneous polynomials exceeding the moment bound",
            {"moment inequality"}, main_inequality);
        add("degree-at-most", K::Search, "random mixtures of levels up to s against the moment bound", {"degree-at-most extension"},
            [](const SuiteConfig& c) {
                const int n = as_ints(c.grid.axis("n", {10})).front();
                const int s = as_ints(c.grid.axis("s", {3})).front();
                const double p = c.grid.axis("p", {4}).front();
                return degree_at_most_check(n, s, p, c.restarts > 0 ? c.restarts : 1000, c.seed);
            });
        add("moment-baseline", K::Limit, "psi lies strictly below the hypercontractive baseline", {"moment baseline"}, moment_baseline);
        add("moment-gap", K::Limit, "moment bound against the Krawchouk ratio, with fitted constant", {"moment inequality", "moment gap"},
            moment_gap_suite);
        add("hc-classic", K::Brute, "classic hypercontractive inequality on random functions", {"classic hypercontractivity"},
            [](const SuiteConfig& c) { return brute_suite(c, BruteKind::Classic, "hc-classic"); });
        add("nhc", K::Brute, "refined noise bound from the l_p concentration ratio on random functions",
            {"refined hypercontractivity", "sphere-stable noise bound"},
            [](const SuiteConfig& c) { return brute_suite(c, BruteKind::Refined, "nhc"); });
        add("set-noise", K::Brute, "noise stability of functions with small support", {"supported noise stability"},
            [](const SuiteConfig& c) { return brute_suite(c, BruteKind::SetNoise, "set-noise"); });
        add("max-proj-supported", K::Brute, "spectral projections of functions with small support", {"supported projection bound"},
            [](const SuiteConfig& c) { return brute_suite(c, BruteKind::SupportedProj, "max-proj-supported"); });
        add("max-proj", K::Brute, "spectral projections against l_p norms on random functions", {"projection bound"},
            [](const SuiteConfig& c) { return brute_suite(c, BruteKind::Proj, "max-proj"); });
        add("tail", K::Limit, "exact Krawchouk tails against the tail bound, and branch continuity", {"tail bound"}, tail_suite);
        add("edge-iso-exhaustive", K::Brute, "distance distributions of all sets for n <= 4 and random sets for n <= 10",
            {"edge isoperimetry"}, edge_iso_exhaustive);
        add("kleitman-west", K::Limit, "distance-two specialisation of the edge-isoperimetric bound", {"distance-two pair count"},
            kleitman_west);
        add("edge-iso-sphere", K::Tightness, "edge-isoperimetric bound on spheres, factor over i", {"edge isoperimetry"}, via_tightness);
        add("hc-sphere", K::Tightness, "refined noise bound on spheres, factor against s^{3/4}", {"refined hypercontractivity"},
            via_tightness);
        add("ue-union", K::Tightness, "undetected-error exponent of adjacent-sphere unions", {"undetected error exponent", "distance distribution"},
            via_tightness);
        add("proj-sphere", K::Tightness, "projection bound on a sphere, factor against (ks)^{1/4}", {"projection bound"}, via_tightness);
        add("proj-roots", K::Tightness, "projection bound between consecutive Krawchouk roots", {"projection bound"}, via_tightness);
        add("tail-sphere", K::Tightness, "Krawchouk tail lower bounds before the first root", {"tail bound"}, via_tightness);
        add("tensorization", K::Limit, "tensor-power limit of the Krawchouk ratio", {"tensorization limit"}, tensorization);
        add("hanner", K::Limit, "Hanner near-equality for adjacent Krawchouk polynomials", {"hanner near-equality"}, hanner);
        add("concentration", K::Limit, "l_p mass of K_s near i0", {"krawchouk properties"}, concentration);
        add("recursion", K::Limit, "moment-ratio recursion against Phi and rho", {"induction objects"}, recursion);
        return e;
    }();
    return table;
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

const std::vector<std::string>& coverage_targets() {
    static const std::vector<std::string> targets{
        "moment inequality",        "moment baseline",          "classic hypercontractivity", "distance distribution",
        "fourier and noise machinery", "tensorization limit",   "degree-at-most extension",   "tail bound",
        "edge isoperimetry",        "distance-two pair count",  "undetected error exponent",  "refined hypercontractivity",
        "sphere-stable noise bound",  "projection bound",         "supported projection bound", "supported noise stability",
        "bivariate identities",     "krawchouk properties",     "sphere noise stability",     "induction objects",
        "hanner near-equality",     "moment gap"};
    return targets;
}

SuiteReport run_suite(const SuiteConfig& config) {
    for (const auto& e : entries()) {
        if (e.info.tag != config.suite) continue;
        const auto t0 = std::chrono::steady_clock::now();
        const ThreadBudgetScope budget(config.threads);
        SuiteReport rep = e.run(config);
        rep.config = config;
        finalize(rep, config.tol);
        rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    }
    throw InputError("unknown suite '" + config.suite + "'");
}

}  // namespace krawbound
