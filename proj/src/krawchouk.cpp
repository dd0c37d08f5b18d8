#include "krawbound/krawchouk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "krawbound/bivariate.hpp"
#include "krawbound/error.hpp"

namespace krawbound {

namespace {

void check_exact(int n, int s, const char* who) {
    if (n < 0 || s < 0 || s > n) throw InputError(std::string(who) + ": need 0 <= s <= n");
    if (n > kExactCap) throw InputError(std::string(who) + ": n exceeds the exact arithmetic cap");
}

long double eval_ld(int n, int s, long double x) {
    if (s == 0) return 1.0L;
    const long double c = static_cast<long double>(n) - 2.0L * x;
    long double prev = 1.0L;
    long double cur = c;
    for (int j = 1; j < s; ++j) {
        const long double next = (c * cur - static_cast<long double>(n - j + 1) * prev) / static_cast<long double>(j + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

int sign_of(long double v) { return (v > 0) - (v < 0); }

}  // namespace

KrawTable kraw_table(int n, int s) {
    check_exact(n, s, "kraw_table");
    KrawTable t{n, s, std::vector<BigInt>(static_cast<std::size_t>(n) + 1)};
    for (int i = 0; i <= n; ++i) {
        // Term k is (-1)^k C(i,k) C(n-i,s-k); both binomials are updated incrementally.
        const int k_lo = std::max(0, s - (n - i));
        const int k_hi = std::min(s, i);
        BigInt c_i = exact_binomial(i, k_lo);
        BigInt c_rest = exact_binomial(n - i, s - k_lo);
        BigInt sum = 0;
        for (int k = k_lo; k <= k_hi; ++k) {
            const BigInt term = c_i * c_rest;
            if (k % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
            if (k == k_hi) break;
            c_i = c_i * (i - k) / (k + 1);
            const int j = s - k;  // C(n-i, j) -> C(n-i, j-1)
            c_rest = c_rest * j / (n - i - j + 1);
        }
        t.values[i] = sum;
    }
    return t;
}

std::vector<KrawTable> kraw_tables_by_recurrence(int n, int s_max) {
    check_exact(n, s_max, "kraw_tables_by_recurrence");
    std::vector<KrawTable> out;
    out.reserve(static_cast<std::size_t>(s_max) + 1);
    out.push_back({n, 0, std::vector<BigInt>(static_cast<std::size_t>(n) + 1, BigInt(1))});
    if (s_max == 0) return out;
    KrawTable k1{n, 1, std::vector<BigInt>(static_cast<std::size_t>(n) + 1)};
    for (int i = 0; i <= n; ++i) k1.values[i] = n - 2 * i;
    out.push_back(std::move(k1));
    for (int j = 1; j < s_max; ++j) {
        KrawTable next{n, j + 1, std::vector<BigInt>(static_cast<std::size_t>(n) + 1)};
        const auto& cur = out[j].values;
        const auto& prev = out[j - 1].values;
        for (int i = 0; i <= n; ++i) {
            BigInt num = BigInt(n - 2 * i) * cur[i] - BigInt(n - j + 1) * prev[i];
            BigInt q = num / (j + 1);
            if (q * (j + 1) != num) throw InternalError("kraw_tables_by_recurrence: inexact division");
            next.values[i] = std::move(q);
        }
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<BigInt> kraw_values_fast(int n, int s) {
    check_exact(n, s, "kraw_values_fast");
    std::vector<BigInt> v(static_cast<std::size_t>(n) + 1);
    v[0] = exact_binomial(n, s);
    if (n == 0) return v;
    // K_s(1) = C(n-1, s) - C(n-1, s-1).
    v[1] = (s <= n - 1 ? exact_binomial(n - 1, s) : BigInt(0)) - (s >= 1 ? exact_binomial(n - 1, s - 1) : BigInt(0));
    for (int x = 1; x < n; ++x) {
        BigInt num = BigInt(n - 2 * s) * v[x] - BigInt(x) * v[x - 1];
        BigInt q = num / (n - x);
        if (q * (n - x) != num) throw InternalError("kraw_values_fast: inexact division");
        v[x + 1] = std::move(q);
    }
    return v;
}

std::vector<SignedLog> kraw_log_values_recurrence(int n, int s) {
    if (n < 0 || s < 0 || s > n) throw InputError("kraw_log_values: need 0 <= s <= n");
    std::vector<SignedLog> out(static_cast<std::size_t>(n) + 1);
    // Track K_s(x) / C(n,s) * 2^{-offset}; rescale to keep the pair in range.
    const double base = log2_binomial(n, s);
    const int half = n / 2;
    long double prev = 0.0L;
    long double cur = 1.0L;
    double offset = 0.0;
    const long double big = std::ldexp(1.0L, 1000);
    const long double small = std::ldexp(1.0L, -1000);
    for (int x = 0; x <= half; ++x) {
        if (cur == 0.0L) {
            out[x] = {};
        } else {
            out[x] = {sign_of(cur), base + offset + static_cast<double>(std::log2(std::fabs(cur)))};
        }
        if (x == half) break;
        long double next;
        if (x == 0) {
            next = static_cast<long double>(n - 2 * s) / static_cast<long double>(n);
        } else {
            next = (static_cast<long double>(n - 2 * s) * cur - static_cast<long double>(x) * prev) /
                   static_cast<long double>(n - x);
        }
        prev = cur;
        cur = next;
        const long double mag = std::max(std::fabs(prev), std::fabs(cur));
        if (mag > big) {
            prev *= small;
            cur *= small;
            offset += 1000.0;
        } else if (mag > 0.0L && mag < small) {
            prev *= big;
            cur *= big;
            offset -= 1000.0;
        }
    }
    const int parity = (s % 2 == 0) ? 1 : -1;
    for (int x = half + 1; x <= n; ++x) {
        out[x] = out[n - x];
        out[x].sign *= parity;
    }
    return out;
}

std::vector<SignedLog> kraw_log_values(int n, int s) {
    if (n < 0 || s < 0 || s > n) throw InputError("kraw_log_values: need 0 <= s <= n");
    if (n > kExactCap) return kraw_log_values_recurrence(n, s);
    const auto v = kraw_values_fast(n, s);
    std::vector<SignedLog> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(SignedLog::from_big(x));
    return out;
}

SymmetricProfile kraw_profile(int n, int s) { return make_profile(n, kraw_log_values(n, s)); }

double kraw_eval_real(int n, int s, double x) {
    if (n < 0 || s < 0 || s > n) throw InputError("kraw_eval_real: need 0 <= s <= n");
    return static_cast<double>(eval_ld(n, s, static_cast<long double>(x)));
}

RootList kraw_roots(int n, int s) {
    if (s < 1 || 2 * s > n) throw InputError("kraw_roots: need 1 <= s <= n/2");
    if (n > 512) throw InputError("kraw_roots: n exceeds 512");
    RootList out{n, s, {}};
    const double half_width = std::sqrt(static_cast<double>(s) * (n - s));
    const double lo = 0.5 * n - half_width - 0.25;
    const double hi = 0.5 * n + half_width + 0.25;
    const long double step = 0.25L;
    auto f = [&](long double x) { return eval_ld(n, s, x); };
    long double x_prev = lo;
    int sign_prev = sign_of(f(x_prev));
    if (sign_prev == 0) out.roots.push_back(static_cast<double>(x_prev));
    for (long double x = lo + step; x <= hi + 1e-12L; x += step) {
        const int sg = sign_of(f(x));
        if (sg == 0) {
            out.roots.push_back(static_cast<double>(x));
        } else if (sign_prev != 0 && sg != sign_prev) {
            long double a = x_prev;
            long double b = x;
            const int sa = sign_prev;
            while (b - a > 1e-10L) {
                const long double m = 0.5L * (a + b);
                const int sm = sign_of(f(m));
                if (sm == 0) {
                    a = b = m;
                    break;
                }
                if (sm == sa) {
                    a = m;
                } else {
                    b = m;
                }
            }
            out.roots.push_back(static_cast<double>(0.5L * (a + b)));
        }
        x_prev = x;
        sign_prev = sg;
    }
    if (static_cast<int>(out.roots.size()) != s) {
        throw InternalError("kraw_roots: found " + std::to_string(out.roots.size()) + " roots, expected " +
                            std::to_string(s));
    }
    return out;
}

MomentRecord kraw_moments(int n, int s, double p) {
    if (!(p >= 1.0)) throw InputError("kraw_moments: need p >= 1");
    const auto prof = kraw_profile(n, s);
    MomentRecord r{n, s, p, log2_moment(prof, p), 0.0};
    const double log2_c = n <= kExactCap ? log2_abs(exact_binomial(n, s)) : log2_binomial(n, s);
    r.log2_ratio = r.log2_moment - 0.5 * p * log2_c;
    return r;
}

double solve_i0(double n, double s, double p) {
    if (!(p >= 2.0)) throw InputError("solve_i0: need p >= 2");
    if (!(n > 0.0) || s < 0.0 || 2.0 * s > n) throw InputError("solve_i0: need 0 <= s <= n/2");
    return n * solve_h_inverse(p, 1.0 - 2.0 * s / n);
}

ConcentrationRecord lp_concentration(int n, int s, double p, double window) {
    if (!(p > 2.0)) throw InputError("lp_concentration: need p > 2");
    if (s < 0 || 2 * s > n) throw InputError("lp_concentration: need 0 <= s <= n/2");
    ConcentrationRecord rec;
    const double s0 = n / std::log(static_cast<double>(n));
    rec.in_range = s0 < s && s < 0.5 * n - s0;
    rec.i0 = solve_i0(n, s, p);
    const auto prof = kraw_profile(n, s);
    const double w = window * std::sqrt(n * std::log(static_cast<double>(n)));
    std::vector<LogValue> all;
    std::vector<LogValue> inside;
    for (int i = 0; i <= n; ++i) {
        if (prof.value[i].is_zero()) continue;
        const LogValue t = LogValue::from_log2(prof.log2_mass[i] + p * prof.value[i].log2_abs);
        all.push_back(t);
        if (std::fabs(i - rec.i0) <= w || std::fabs(i - (n - rec.i0)) <= w) inside.push_back(t);
    }
    const LogValue tot = log_sum_exp2(std::span<const LogValue>(all));
    const LogValue in = log_sum_exp2(std::span<const LogValue>(inside));
    rec.mass_in_window = in.zero ? 0.0 : std::exp2(in.exponent - tot.exponent);
    return rec;
}

std::vector<RootInterval> l2_between_roots(int n, int s) {
    if (n > 2048) throw InputError("l2_between_roots: n exceeds 2048");
    std::vector<double> cuts{0.0};
    {
        // Roots beyond the scan cap are located on the exact table by sign changes.
        if (n <= 512) {
            for (double r : kraw_roots(n, s).roots) cuts.push_back(r);
        } else {
            if (s < 1 || 2 * s > n) throw InputError("l2_between_roots: need 1 <= s <= n/2");
            const auto v = kraw_values_fast(n, s);
            for (int i = 0; i < n; ++i) {
                const int a = v[i].sign();
                const int b = v[i + 1].sign();
                if (a == 0) {
                    cuts.push_back(i);
                } else if (b != 0 && a != b) {
                    cuts.push_back(bisect([&](double x) { return kraw_eval_real(n, s, x) * a; }, i, i + 1, 60));
                }
            }
        }
    }
    cuts.push_back(static_cast<double>(n));
    const auto prof = kraw_profile(n, s);
    const double log2_c = log2_abs(exact_binomial(n, s));
    std::vector<RootInterval> out;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        RootInterval iv{cuts[k], cuts[k + 1], -1, 0.0, true};
        const bool last = k + 2 == cuts.size();
        const int first = static_cast<int>(std::ceil(iv.lo));
        double best = -std::numeric_limits<double>::infinity();
        for (int i = first; i <= n; ++i) {
            if (last ? i > iv.hi : i >= iv.hi) break;
            iv.empty = false;
            const double e = prof.value[i].is_zero() ? -std::numeric_limits<double>::infinity()
                                                     : prof.log2_mass[i] + 2.0 * prof.value[i].log2_abs - log2_c;
            if (iv.best_i < 0 || e > best) {
                best = e;
                iv.best_i = i;
            }
        }
        iv.attainment_factor = iv.empty ? 0.0 : std::exp2(best);
        out.push_back(iv);
    }
    return out;
}

}  // namespace krawbound
