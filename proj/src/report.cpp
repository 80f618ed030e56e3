#include "landauer/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

#include "landauer/errors.hpp"

namespace landauer {

using nlohmann::json;

namespace {

double round_digits(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kReportDigits, x);
  return std::strtod(buf, nullptr);
}

Scalar normalize(Scalar value) {
  if (auto* d = std::get_if<double>(&value)) *d = round_digits(*d);
  return value;
}

json scalar_to_json(const Scalar& s) {
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(bool b) const { return b; }
    json operator()(std::int64_t i) const { return i; }
    json operator()(double d) const { return d; }
    json operator()(const std::string& str) const { return str; }
  };
  return std::visit(Visitor{}, s);
}

Scalar scalar_from_json(const json& j, const std::string& key) {
  switch (j.type()) {
    case json::value_t::null: return std::monostate{};
    case json::value_t::boolean: return j.get<bool>();
    case json::value_t::number_integer: return j.get<std::int64_t>();
    case json::value_t::number_unsigned: return static_cast<std::int64_t>(j.get<std::uint64_t>());
    case json::value_t::number_float: return j.get<double>();
    case json::value_t::string: return j.get<std::string>();
    default: break;
  }
  throw ParseError(0, "value of '" + key + "' is not a scalar");
}

std::string csv_value(const Scalar& s) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.*g", kReportDigits, d);
      return buf;
    }
    std::string operator()(const std::string& str) const {
      if (str.find_first_of(",\"\n") == std::string::npos) return str;
      std::string quoted = "\"";
      for (char c : str) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + "\"";
    }
  };
  return std::visit(Visitor{}, s);
}

void insert_dotted(json& root, const std::string& key, json value) {
  json* node = &root;
  std::size_t start = 0;
  for (auto dot = key.find('.'); dot != std::string::npos; dot = key.find('.', start)) {
    node = &(*node)[key.substr(start, dot - start)];
    start = dot + 1;
  }
  (*node)[key.substr(start)] = std::move(value);
}

void flatten(const json& node, const std::string& prefix, std::map<std::string, Scalar>& out) {
  for (const auto& [k, v] : node.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object()) {
      flatten(v, key, out);
    } else {
      out[key] = scalar_from_json(v, key);
    }
  }
}

Scalar as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

void add_joules(ReportDocument& doc, const std::string& key, double bits, Temperature t) {
  doc.set_result(key, bits_to_joules(EntropyBits(bits), t), "joules");
}

ReportDocument base_document(std::string command, std::optional<Temperature> t) {
  ReportDocument doc;
  doc.command = std::move(command);
  if (t) doc.temperature_kelvin = round_digits(t->kelvin());
  return doc;
}

}  // namespace

void ReportDocument::set_parameter(const std::string& key, Scalar value) {
  parameters[key] = normalize(std::move(value));
}

void ReportDocument::set_result(const std::string& key, Scalar value, std::string unit) {
  results[key] = normalize(std::move(value));
  units[key] = std::move(unit);
}

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw DomainError("unknown report format '" + std::string(name) + "'");
}

std::string write_report(const ReportDocument& doc, ReportFormat format) {
  if (format == ReportFormat::csv) {
    std::string out = "key,value,units\n";
    for (const auto& [key, value] : doc.results) {
      const auto unit = doc.units.find(key);
      out += csv_value(Scalar(key)) + "," + csv_value(value) + "," +
             (unit == doc.units.end() ? std::string() : unit->second) + "\n";
    }
    return out;
  }

  json j = json::object();
  j["command"] = doc.command;
  j["tool_version"] = doc.tool_version;
  json params = json::object();
  for (const auto& [k, v] : doc.parameters) params[k] = scalar_to_json(v);
  j["parameters"] = std::move(params);
  json results = json::object();
  for (const auto& [k, v] : doc.results) insert_dotted(results, k, scalar_to_json(v));
  j["results"] = std::move(results);
  json units = json::object();
  for (const auto& [k, v] : doc.units) units[k] = v;
  j["units"] = std::move(units);
  if (doc.temperature_kelvin) j["temperature_kelvin"] = *doc.temperature_kelvin;
  if (doc.seed) j["seed"] = *doc.seed;
  return j.dump(2) + "\n";
}

ReportDocument parse_report_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(0, "report is not a JSON object");
  for (const char* key : {"command", "parameters", "results", "units", "tool_version"}) {
    if (!j.contains(key)) throw ParseError(0, std::string("report lacks '") + key + "'");
  }
  ReportDocument doc;
  try {
    doc.command = j.at("command").get<std::string>();
    doc.tool_version = j.at("tool_version").get<std::string>();
    for (const auto& [k, v] : j.at("parameters").items()) doc.parameters[k] = scalar_from_json(v, k);
    flatten(j.at("results"), "", doc.results);
    for (const auto& [k, v] : j.at("units").items()) doc.units[k] = v.get<std::string>();
    if (j.contains("temperature_kelvin")) doc.temperature_kelvin = j["temperature_kelvin"].get<double>();
    if (j.contains("seed")) doc.seed = j["seed"].get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
  return doc;
}

ReportDocument gate_report_document(const GateReport& r, const std::map<std::string, Scalar>& params,
                                    std::optional<Temperature> t) {
  ReportDocument doc = base_document("gate", t);
  for (const auto& [k, v] : params) doc.set_parameter(k, v);
  doc.set_result("entropy_in", r.entropy_in.bits(), "bits");
  doc.set_result("entropy_out", r.entropy_out.bits(), "bits");
  doc.set_result("reduction", r.reduction.bits(), "bits");
  doc.set_result("bijective", r.bijective, "flag");
  doc.set_result("analytic", r.analytic, "flag");
  if (t) add_joules(doc, "reduction_joules", r.reduction.bits(), *t);
  return doc;
}

ReportDocument bound_report_document(const BoundReport& r, std::optional<Temperature> t) {
  ReportDocument doc = base_document("bound", t);
  const ProblemSpec& p = r.problem;
  doc.set_parameter("problem", std::string(to_string(p.kind)));
  if (p.is_search_family()) {
    doc.set_parameter("N", as_int(p.N));
    doc.set_parameter("M", as_int(p.M));
  } else {
    doc.set_parameter("n", as_int(p.n));
    if (p.kind == ProblemKind::MatMul) doc.set_parameter("m", as_int(p.M));
  }
  doc.set_result("entropy_bound_bits", r.entropy_bound_bits.bits(), "bits");
  if (r.classical_bound_ops) doc.set_result("classical_bound_ops", as_int(*r.classical_bound_ops), "comparisons");
  if (r.time_steps_lower) doc.set_result("time_steps_lower", *r.time_steps_lower, "steps");
  if (r.encoding) {
    doc.set_result("encoding.prefix_bits", r.encoding->layout.prefix_bits, "bits");
    doc.set_result("encoding.suffix_bits", r.encoding->layout.suffix_bits, "bits");
    doc.set_result("encoding.constraint", std::string(to_string(r.encoding->layout.constraint)), "label");
    doc.set_result("encoding.s1_bits", r.encoding->s1.bits(), "bits");
    doc.set_result("encoding.s2_bits", r.encoding->s2.bits(), "bits");
  }
  if (t) add_joules(doc, "energy_joules", r.entropy_bound_bits.bits(), *t);
  return doc;
}

ReportDocument profile_report_document(const ProfileReport& r, std::optional<Temperature> t) {
  ReportDocument doc = base_document("profile", t);
  doc.seed = r.seed;
  doc.set_parameter("problem", std::string(to_string(r.problem.kind)));
  doc.set_parameter("algorithm", std::string(to_string(r.algorithm)));
  doc.set_parameter("N", as_int(r.problem.N));
  doc.set_parameter("M", as_int(r.problem.M));
  doc.set_parameter("exhaustive", r.exhaustive);
  if (r.radix) {
    doc.set_parameter("buckets", as_int(r.radix->buckets));
    doc.set_parameter("passes", as_int(r.radix->passes));
    doc.set_parameter("clear_buckets", r.radix->charge_bucket_clearing);
  }

  doc.set_result("trials", as_int(r.trials), "count");
  doc.set_result("measured_bits.min", r.measured_bits.min, "bits");
  doc.set_result("measured_bits.mean", r.measured_bits.mean, "bits");
  doc.set_result("measured_bits.max", r.measured_bits.max, "bits");
  doc.set_result("comparisons.min", r.comparisons.min, "comparisons");
  doc.set_result("comparisons.mean", r.comparisons.mean, "comparisons");
  doc.set_result("comparisons.max", r.comparisons.max, "comparisons");
  doc.set_result("entropy_bound_bits", r.entropy_bound_bits.bits(), "bits");
  doc.set_result("classical_bound_ops", as_int(r.classical_bound_ops), "comparisons");
  doc.set_result("ratio_to_entropy_bound",
                 r.ratio_to_entropy_bound ? Scalar(*r.ratio_to_entropy_bound) : Scalar(std::monostate{}),
                 "ratio");
  doc.set_result("model.rng", r.rng, "label");
  doc.set_result("model.comparison_cost_bits", 1.0, "bits");
  doc.set_result("model.assignment_cost_bits", 0.0, "bits");
  doc.set_result("model.loop_control_charged", false, "flag");
  if (r.radix) {
    // One pass with B = N buckets is the textbook account; anything else is
    // the d-pass generalisation.
    const bool generalized = r.radix->passes != 1 || r.radix->buckets != r.problem.N;
    doc.set_result("model.radix_generalized", generalized, "flag");
  }
  if (t) {
    add_joules(doc, "measured_joules.min", r.measured_bits.min, *t);
    add_joules(doc, "measured_joules.mean", r.measured_bits.mean, *t);
    add_joules(doc, "measured_joules.max", r.measured_bits.max, *t);
    add_joules(doc, "entropy_bound_joules", r.entropy_bound_bits.bits(), *t);
  }
  return doc;
}

ReportDocument demon_report_document(const DemonConfig& cfg, const DemonResult& r,
                                     std::optional<Temperature> t) {
  ReportDocument doc = base_document("demon", t);
  doc.set_parameter("particles", as_int(cfg.particles));
  doc.set_parameter("mode", std::string(to_string(cfg.mode)));
  doc.set_parameter("samples", as_int(cfg.samples));
  doc.set_parameter("analytic", !cfg.estimate);
  if (cfg.estimate) doc.seed = cfg.seed;
  doc.set_result("entropy_before_bits", r.entropy_before_bits.bits(), "bits");
  doc.set_result("entropy_after_bits", r.entropy_after_bits.bits(), "bits");
  if (r.entropy_estimate_bits) {
    doc.set_result("entropy_estimate_bits", r.entropy_estimate_bits->bits(), "bits");
    doc.set_result("observed_states", as_int(r.observed_states), "states");
  }
  if (t) doc.set_result("work_joules", r.work_joules(*t), "joules");
  return doc;
}

ReportDocument grover_report_document(std::uint64_t n) {
  ReportDocument doc = base_document("grover", std::nullopt);
  doc.set_parameter("N", as_int(n));
  doc.set_result("energy_ratio", grover_energy_ratio(n), "ratio");
  return doc;
}

}  // namespace landauer
