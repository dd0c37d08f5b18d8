#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "krawbound/bivariate.hpp"
#include "krawbound/error.hpp"
#include "krawbound/io.hpp"
#include "krawbound/parallel.hpp"
#include "krawbound/verify.hpp"

using namespace krawbound;

TEST_CASE("grid axis parsing") {
    const auto a = GridSpec::parse_axis("x=0:1:5");
    CHECK(a.name == "x");
    CHECK(a.values == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    const auto b = GridSpec::parse_axis("n=8,16");
    CHECK(b.values == std::vector<double>{8.0, 16.0});
    CHECK_THROWS_AS(GridSpec::parse_axis("junk"), InputError);
    GridSpec g;
    g.set(b);
    CHECK(g.axis("n", {1.0}) == b.values);
    CHECK(g.axis("m", {1.0}) == std::vector<double>{1.0});
}

TEST_CASE("extremal search: Krawchouk start is feasible and nothing beats the bound") {
    const auto r = search_extremal_ratio(8, 2, 4.0, 20, 1);
    CHECK(r.starts == 21);
    CHECK_FALSE(r.counterexample);
    CHECK(r.best_log2_ratio <= r.bound_log2 + 1e-9);
    CHECK(r.kraw_log2_ratio <= r.bound_log2 + 1e-9);
    CHECK(r.best_log2_ratio >= r.kraw_log2_ratio - 1e-9);
}

TEST_CASE("degree-at-most mixtures") {
    const auto rep = degree_at_most_check(10, 3, 4.0, 200, 3);
    CHECK(rep.pass);
}

TEST_CASE("unknown suite is an input error") {
    SuiteConfig c;
    c.suite = "no-such-suite";
    CHECK_THROWS_AS(run_suite(c), InputError);
}

TEST_CASE("registry covers every target and tags are unique") {
    std::set<std::string> tags;
    std::set<std::string> covered;
    for (const auto& s : suite_registry()) {
        CHECK(tags.insert(s.tag).second);
        CHECK_FALSE(s.summary.empty());
        covered.insert(s.covers.begin(), s.covers.end());
    }
    for (const auto& t : coverage_targets()) {
        INFO(t);
        CHECK(covered.count(t) == 1);
    }
}

TEST_CASE("suite payloads are deterministic and ignore thread count") {
    SuiteConfig c;
    c.suite = "hc-classic";
    c.seed = 5;
    c.restarts = 50;
    const auto a = to_json(run_suite(c));
    CHECK(a.dump() == to_json(run_suite(c)).dump());
    c.threads = 1;
    const auto b = to_json(run_suite(c));
    for (const char* key : {"cases", "measured", "worst_margin", "counterexamples", "pass"}) CHECK(a.at(key) == b.at(key));
    SuiteReport r;
    r.wall_seconds = 3.0;
    CHECK_FALSE(to_json(r).contains("wall_seconds"));
    CHECK(to_json(r, true).contains("wall_seconds"));
}

TEST_CASE("json round trips") {
    const auto br = make_report("moment", {{"n", 8}, {"s", 2}}, 1.0, 1.5, 1e-9);
    const auto back = bound_from_json(to_json(br));
    CHECK(back.bound_name == "moment");
    CHECK(back.margin == doctest::Approx(0.5));
    CHECK(back.pass);
    SuiteConfig c;
    c.suite = "tail";
    c.seed = 9;
    c.grid.set(GridSpec::parse_axis("n=64,128"));
    const auto c2 = config_from_json(to_json(c));
    CHECK(c2.suite == "tail");
    CHECK(c2.seed == 9);
    CHECK(c2.grid.axis("n", {}) == std::vector<double>{64.0, 128.0});
    CHECK_THROWS_AS(config_from_json(Json::parse("{\"seed\": 1}")), InputError);
    const auto env = envelope({"krawbound", "bound"}, "bound", to_json(br));
    CHECK(env.at("artifact_version") == kArtifactVersion);
    CHECK(env.at("payload").at("bound_name") == "moment");
}

TEST_CASE("numbers, csv and bit strings") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
    std::ostringstream os;
    CsvWriter w(os, {"a", "b"});
    w.row({"x,y", "say \"hi\""});
    CHECK(os.str() == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
    CHECK(parse_bitstring("1010") == 5u);
    CHECK(to_bitstring(5, 4) == "1010");
    CHECK_THROWS_AS(parse_bitstring("10a"), InputError);
}

TEST_CASE("parallel map keeps order and propagates errors") {
    const auto v = parallel_map<int>(100, [](std::size_t i) { return static_cast<int>(i * i); });
    for (int i = 0; i < 100; ++i) CHECK(v[i] == i * i);
    CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) { if (i == 7) throw InputError("x"); }), InputError);
}

TEST_CASE("tolerance override replaces case tolerances") {
    SuiteConfig c;
    c.suite = "kleitman-west";
    CHECK(run_suite(c).pass);
    c.tol.margin = -1.0;
    const auto r = run_suite(c);
    CHECK_FALSE(r.pass);
    for (const auto& k : r.cases) CHECK(k.tol == -1.0);
    const auto back = config_from_json(to_json(c));
    REQUIRE(back.tol.margin.has_value());
    CHECK(*back.tol.margin == -1.0);
    CHECK_FALSE(config_from_json(to_json(SuiteConfig{})).tol.margin.has_value());
}
