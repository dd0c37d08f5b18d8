// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "krawbound/io.hpp"
#include "krawbound/verify.hpp"

using namespace krawbound;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

SuiteReport run(const std::string& tag) {
    SuiteConfig c;
    c.suite = tag;
    return run_suite(c);
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// Runs each suite and joins their verdicts.
Outcome all_pass(const std::vector<std::string>& tags) {
    Outcome o;
    for (const auto& t : tags) {
        const auto r = run(t);
        o.pass = o.pass && r.pass;
        o.detail += t + (r.pass ? " ok; " : " FAILED; ");
    }
    return o;
}

Outcome kraw_identities() {
    const auto r = run("kraw-identities");
    return {r.pass, fmt("%.0f exact identities", r.measured.at("identities_checked"))};
}

Outcome psi_reconciliation() { return all_pass({"psi-two-reps"}); }

Outcome identity_sweeps() {
    return all_pass({"tau-symmetry", "pi-min", "phi-transform", "edge-iso-min", "phi-equals-F", "u-star"});
}

Outcome main_inequality() {
    const auto r = run("main-inequality");
    Outcome o{r.pass && r.counterexamples.empty(), ""};
    o.detail = fmt("%.0f cases, ", static_cast<double>(r.cases.size())) + fmt("worst margin %.3g, ", r.worst_margin) +
               fmt("%.0f counterexamples", static_cast<double>(r.counterexamples.size()));
    return o;
}

Outcome brute_bounds() { return all_pass({"hc-classic", "nhc", "set-noise", "max-proj"}); }

Outcome sphere_tightness() {
    Outcome o = all_pass({"hc-sphere", "ue-union"});
    const auto e = run("edge-iso-sphere");
    const double c = e.measured.at("c_factor_over_i");
    o.pass = o.pass && e.pass && c <= 10.0;
    o.detail += fmt("edge-iso c = %.3f; ", c);
    return o;
}

Outcome tensorization() {
    const auto r = run("tensorization");
    return {r.pass, fmt("gap at m = 512: %.4f", r.measured.at("gap_m512"))};
}

Outcome hanner() {
    const auto r = run("hanner");
    return {r.pass, fmt("per-n log ratio at n = 512: %.3g", r.measured.at("log2_ratio_per_n_n512"))};
}

Outcome concentration() {
    const auto r = run("concentration");
    double worst = 1.0;
    for (const auto& c : r.cases) worst = std::min(worst, c.rhs_log2n);
    return {r.pass, fmt("smallest window share %.6f", worst)};
}

Outcome determinism() {
    Outcome o;
    for (const std::string tag : {"hc-classic", "set-noise", "main-inequality", "tail", "ue-union"}) {
        SuiteConfig c;
        c.suite = tag;
        c.seed = 1234;
        if (tag == "main-inequality") c.restarts = 10;
        const auto a = to_json(run_suite(c)).dump();
        const auto b = to_json(run_suite(c)).dump();
        if (a != b) {
            o.pass = false;
            o.detail += tag + " differs; ";
        }
    }
    if (o.pass) o.detail = "identical payloads on repeated runs";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double seconds_cap;
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "exact Krawchouk identities for n <= 64", 60, kraw_identities},
        {2, "psi representations agree, boundary values exact", 10, psi_reconciliation},
        {3, "identity sweeps on default grids", 120, identity_sweeps},
        {4, "moment inequality search finds no violation", 1800, main_inequality},
        {5, "brute-force bound suite at n <= 14", 600, brute_bounds},
        {6, "sphere tightness measurements", 300, sphere_tightness},
        {7, "tensorization limit within 0.01 and monotone", 60, tensorization},
        {8, "Hanner near-equality decreasing and nonnegative", 60, hanner},
        {9, "lp mass concentration window >= 0.99", 30, concentration},
        {10, "repeated runs give identical payloads", 1e9, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs <= c.seconds_cap;
        const bool pass = o.pass && in_time;
        failed += !pass;
        std::printf("%s [%d] %s (%.1f s%s): %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, in_time ? "" : ", over time cap",
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
