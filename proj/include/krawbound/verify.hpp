#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "krawbound/bounds.hpp"

namespace krawbound {

/// One sweep axis: explicit values, or `count` evenly spaced points on [lo, hi].
struct GridAxis {
    std::string name;
    std::vector<double> values;
};

struct GridSpec {
    std::vector<GridAxis> axes;

    /// Parses "name=lo:hi:count" or "name=v1,v2,...".
    static GridAxis parse_axis(const std::string& text);
    /// Values of the named axis, or `fallback` when the axis is absent.
    std::vector<double> axis(const std::string& name, const std::vector<double>& fallback) const;
    /// Replaces or adds an axis.
    void set(GridAxis a);
};

std::vector<double> linspace(double lo, double hi, int count);

struct Tolerances {
    /// When set, replaces every case's own tolerance: pass <=> margin >= -margin.
    std::optional<double> margin;
};

struct SuiteConfig {
    std::string suite;
    GridSpec grid;
    Tolerances tol;
    std::uint64_t seed = 0;
    int restarts = 0;    ///< 0 selects the suite default
    int iterations = 0;  ///< 0 selects the suite default
    unsigned threads = 0;  ///< 0 selects thread_budget()
};

/// A violated bound, with enough data to replay it.
struct Counterexample {
    std::string suite;
    std::map<std::string, double> params;
    double measured = 0.0;
    double bound = 0.0;
    std::vector<double> coefficients;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<BoundReport> cases;
    double worst_margin = 0.0;
    std::map<std::string, double> measured;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;
    bool pass = true;
    double wall_seconds = 0.0;
};

/// Applies a tolerance override, then fills worst_margin and pass from the cases.
void finalize(SuiteReport& r, const Tolerances& tol = {});

struct ExtremalSearch {
    double best_log2_ratio = 0.0;  ///< log2 E|f|^p / (E f^2)^{p/2} of the best start
    std::vector<double> best_fourier_coeffs;  ///< on the weight-s masks in increasing order
    double kraw_log2_ratio = 0.0;
    double bound_log2 = 0.0;
    int starts = 0;
    int nonconverged = 0;
    bool counterexample = false;
};

/// Projected gradient ascent of log2 E|f|^p over the unit sphere of
/// homogeneous degree-s coefficient vectors, from the Krawchouk start and
/// `budget` random starts.
ExtremalSearch search_extremal_ratio(int n, int s, double p, int budget, std::uint64_t seed, int iterations = 500);

/// Random mixtures of levels 0..s against the degree-s moment bound.
SuiteReport degree_at_most_check(int n, int s, double p, int budget, std::uint64_t seed);

/// Residual sweep for one identity tag.
SuiteReport identity_sweep(const std::string& tag, const GridSpec& grid);

/// Tightness measurement for one extremal-object tag.
SuiteReport tightness_sweep(const std::string& tag, const GridSpec& grid);

enum class SuiteKind { Identity, Exact, Search, Brute, Tightness, Limit };

struct SuiteInfo {
    std::string tag;
    SuiteKind kind;
    std::string summary;                ///< one line, by role
    std::vector<std::string> covers;    ///< coverage targets exercised
};

const std::vector<SuiteInfo>& suite_registry();

/// Results that the registry as a whole must exercise.
const std::vector<std::string>& coverage_targets();

/// Dispatches a config to its suite; unknown tags raise InputError.
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace krawbound
