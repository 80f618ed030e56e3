#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "landauer/algorithms.hpp"
#include "landauer/bounds.hpp"
#include "landauer/demon.hpp"
#include "landauer/gates.hpp"

namespace landauer {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Doubles are rounded to this many significant digits on insertion so that
// a written report parses back to an identical document.
inline constexpr int kReportDigits = 12;

using Scalar = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

// One command's output. Result keys are dotted paths ("measured_bits.min")
// that nest in JSON and stay flat in CSV. Every result carries a unit.
struct ReportDocument {
  std::string command;
  std::map<std::string, Scalar> parameters;
  std::map<std::string, Scalar> results;
  std::map<std::string, std::string> units;  // result key -> unit
  std::optional<double> temperature_kelvin;
  std::string tool_version = std::string(kToolVersion);
  std::optional<std::uint64_t> seed;

  void set_parameter(const std::string& key, Scalar value);
  void set_result(const std::string& key, Scalar value, std::string unit);

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

enum class ReportFormat { json, csv };

ReportFormat report_format_from_string(std::string_view name);

// JSON: sorted keys, two-space indent, trailing newline. CSV: header
// "key,value,units" then one row per result in key order.
std::string write_report(const ReportDocument& doc, ReportFormat format);

// Inverse of write_report(doc, json). Throws ParseError on malformed input.
ReportDocument parse_report_json(std::string_view text);

// Payload builders. Joule fields are added only when a temperature is given.
ReportDocument gate_report_document(const GateReport& r, const std::map<std::string, Scalar>& params,
                                    std::optional<Temperature> t);
ReportDocument bound_report_document(const BoundReport& r, std::optional<Temperature> t);
ReportDocument profile_report_document(const ProfileReport& r, std::optional<Temperature> t);
ReportDocument demon_report_document(const DemonConfig& cfg, const DemonResult& r,
                                     std::optional<Temperature> t);
ReportDocument grover_report_document(std::uint64_t n);

}  // namespace landauer
