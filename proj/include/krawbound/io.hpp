#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "krawbound/verify.hpp"

namespace krawbound {

using Json = nlohmann::json;

/// Version of the JSON layout described by the shipped schema.
inline constexpr const char* kArtifactVersion = "1.0.0";

Json to_json(const BoundReport& r);
Json to_json(const SuiteConfig& c);
Json to_json(const Counterexample& c);

/// Report payload. Wall time is left out unless asked for, so that equal
/// configs give byte-identical payloads.
Json to_json(const SuiteReport& r, bool with_timing = false);

SuiteConfig config_from_json(const Json& j);
BoundReport bound_from_json(const Json& j);

/// Output envelope: command echo, version, UTC timestamp, payload kind, format, payload.
Json envelope(const std::vector<std::string>& command, const std::string& kind, const Json& payload);

/// Shortest round-trip decimal form; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double v);

/// RFC 4180 style CSV writer with a fixed header.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    void row_numbers(const std::vector<double>& cells);

private:
    std::ostream& out_;
    std::size_t width_;
};

/// Bit j of the value is character j of the string, '0' or '1'.
std::uint64_t parse_bitstring(const std::string& bits);
std::string to_bitstring(std::uint64_t x, int n);

}  // namespace krawbound
