#include "krawbound/io.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>

#include "krawbound/error.hpp"

namespace krawbound {

namespace {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double number_from(const Json& j) { return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>(); }

Json params_json(const std::map<std::string, double>& m) {
    Json o = Json::object();
    for (const auto& [k, v] : m) o[k] = number(v);
    return o;
}

}  // namespace

Json to_json(const BoundReport& r) {
    return Json{{"bound_name", r.bound_name}, {"params", params_json(r.params)}, {"lhs_log2n", number(r.lhs_log2n)},
                {"rhs_log2n", number(r.rhs_log2n)}, {"margin", number(r.margin)},   {"tol", number(r.tol)},
                {"pass", r.pass}};
}

Json to_json(const SuiteConfig& c) {
    Json axes = Json::array();
    for (const auto& a : c.grid.axes) axes.push_back(Json{{"name", a.name}, {"values", a.values}});
    return Json{{"suite", c.suite},
                {"grid", axes},
                {"tolerances", Json{{"margin", c.tol.margin ? Json(*c.tol.margin) : Json(nullptr)}}},
                {"seed", c.seed},
                {"restarts", c.restarts},
                {"iterations", c.iterations},
                {"threads", c.threads}};
}

Json to_json(const Counterexample& c) {
    return Json{{"suite", c.suite}, {"params", params_json(c.params)}, {"measured", number(c.measured)},
                {"bound", number(c.bound)}, {"coefficients", c.coefficients}};
}

Json to_json(const SuiteReport& r, bool with_timing) {
    Json cases = Json::array();
    for (const auto& c : r.cases) cases.push_back(to_json(c));
    Json cex = Json::array();
    for (const auto& c : r.counterexamples) cex.push_back(to_json(c));
    Json out{{"config", to_json(r.config)},    {"cases", cases},      {"worst_margin", number(r.worst_margin)},
             {"measured", params_json(r.measured)}, {"counterexamples", cex}, {"notes", r.notes},
             {"pass", r.pass}};
    if (with_timing) out["wall_seconds"] = r.wall_seconds;
    return out;
}

SuiteConfig config_from_json(const Json& j) {
    try {
        SuiteConfig c;
        c.suite = j.at("suite").get<std::string>();
        for (const auto& a : j.at("grid")) c.grid.axes.push_back({a.at("name").get<std::string>(), a.at("values").get<std::vector<double>>()});
        const auto& m = j.at("tolerances").at("margin");
        if (!m.is_null()) c.tol.margin = m.get<double>();
        c.seed = j.at("seed").get<std::uint64_t>();
        c.restarts = j.at("restarts").get<int>();
        c.iterations = j.at("iterations").get<int>();
        c.threads = j.at("threads").get<unsigned>();
        return c;
    } catch (const Json::exception& e) {
        throw InputError(std::string("suite config: ") + e.what());
    }
}

BoundReport bound_from_json(const Json& j) {
    try {
        BoundReport r;
        r.bound_name = j.at("bound_name").get<std::string>();
        for (const auto& [k, v] : j.at("params").items()) r.params[k] = number_from(v);
        r.lhs_log2n = number_from(j.at("lhs_log2n"));
        r.rhs_log2n = number_from(j.at("rhs_log2n"));
        r.margin = number_from(j.at("margin"));
        r.tol = number_from(j.at("tol"));
        r.pass = j.at("pass").get<bool>();
        return r;
    } catch (const Json::exception& e) {
        throw InputError(std::string("bound report: ") + e.what());
    }
}

Json envelope(const std::vector<std::string>& command, const std::string& kind, const Json& payload) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return Json{{"command", command}, {"artifact_version", kArtifactVersion}, {"timestamp", stamp},
                {"kind", kind},       {"format", "json"},                    {"payload", payload}};
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header) : out_(out), width_(header.size()) { row(header); }

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw InternalError("csv: row width differs from header");
    for (std::size_t j = 0; j < cells.size(); ++j) {
        if (j) out_ << ',';
        const auto& c = cells[j];
        if (c.find_first_of(",\"\n") == std::string::npos) {
            out_ << c;
        } else {
            out_ << '"';
            for (char ch : c) out_ << (ch == '"' ? "\"\"" : std::string(1, ch));
            out_ << '"';
        }
    }
    out_ << '\n';
}

void CsvWriter::row_numbers(const std::vector<double>& cells) {
    std::vector<std::string> s;
    s.reserve(cells.size());
    for (double v : cells) s.push_back(format_number(v));
    row(s);
}

std::uint64_t parse_bitstring(const std::string& bits) {
    if (bits.size() > 63) throw InputError("bitstring longer than 63");
    std::uint64_t x = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] == '1') {
            x |= std::uint64_t{1} << j;
        } else if (bits[j] != '0') {
            throw InputError("bitstring must contain only 0 and 1");
        }
    }
    return x;
}

std::string to_bitstring(std::uint64_t x, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j) {
        if (x >> j & 1) s[j] = '1';
    }
    return s;
}

}  // namespace krawbound
