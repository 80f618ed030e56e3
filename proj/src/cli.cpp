#include "landauer/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "landauer/errors.hpp"
#include "landauer/report.hpp"

namespace landauer {

namespace {

struct CommonOptions {
  std::string format = "json";
  std::optional<double> temp;
};

std::optional<Temperature> temperature(const CommonOptions& common) {
  if (!common.temp) return std::nullopt;
  return Temperature(*common.temp);
}

void add_temp_option(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--temp", common.temp, "Temperature in kelvin; adds joule fields")
      ->check(CLI::PositiveNumber);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open truth-table file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error reading '" + path + "'");
  return ss.str();
}

const std::vector<std::string> kProblemNames{"max", "sort", "search", "matmul", "add", "mul", "compare"};
const std::vector<std::string> kGateNames{"compare_gt", "add", "mul", "toffoli", "fredkin", "identity", "erase"};
const std::vector<std::string> kAlgorithmNames{"max_scan", "max", "bubble_sort", "bubble",
                                               "merge_sort", "merge", "binary_search", "binary",
                                               "radix_sort", "radix"};

ProblemSpec make_problem(const std::string& name, std::uint64_t n, std::uint32_t m) {
  const ProblemKind kind = problem_kind_from_string(name);
  switch (kind) {
    case ProblemKind::MaxOfN:
    case ProblemKind::Sort:
    case ProblemKind::OrderedSearch: return ProblemSpec{kind, n, m, 1};
    default: break;
  }
  if (n > 0xffffffffULL) throw DomainError("--n is too large for " + name);
  return ProblemSpec{kind, 1, m, static_cast<std::uint32_t>(n)};
}

// Fewest base-b digits covering every key_bits-bit key.
unsigned passes_for(std::uint64_t b, unsigned key_bits) {
  unsigned d = 1;
  long double reach = static_cast<long double>(b);
  while (reach < std::pow(2.0L, key_bits)) {
    reach *= b;
    ++d;
  }
  return d;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropy accounting for logical operations and classic problems", "landauer"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions common;
  app.add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));

  // bound
  std::string bound_problem;
  std::uint64_t bound_n = 0;
  std::uint32_t bound_m = 8;
  auto* bound = app.add_subcommand("bound", "Entropy lower bound of a problem");
  bound->add_option("--problem", bound_problem, "Problem kind")
      ->required()
      ->check(CLI::IsMember(kProblemNames));
  bound->add_option("--n", bound_n, "Element count (max, sort, search) or size n")
      ->required()
      ->check(CLI::PositiveNumber);
  bound->add_option("--m", bound_m, "Bits per element")->check(CLI::PositiveNumber);
  add_temp_option(bound, common);

  // gate
  std::string gate_file;
  std::string gate_kind;
  unsigned gate_width = 1;
  auto* gate = app.add_subcommand("gate", "Entropy reduction of a truth map");
  auto* file_opt = gate->add_option("--file", gate_file, "Truth-table document");
  auto* kind_opt = gate->add_option("--kind", gate_kind, "Standard gate")->check(CLI::IsMember(kGateNames));
  file_opt->excludes(kind_opt);
  gate->add_option("--width", gate_width, "Operand width of a standard gate")
      ->check(CLI::PositiveNumber);
  add_temp_option(gate, common);

  // profile
  std::string profile_problem;
  std::string profile_algorithm;
  std::uint64_t profile_n = 0;
  std::uint32_t profile_m = 32;
  std::uint64_t profile_trials = 100;
  std::uint64_t profile_seed = 0;
  std::optional<std::uint64_t> profile_buckets;
  std::optional<unsigned> profile_passes;
  bool profile_clear = false;
  bool profile_exhaustive = false;
  auto* prof = app.add_subcommand("profile", "Metered run of a reference algorithm");
  prof->add_option("--problem", profile_problem, "Problem kind")
      ->required()
      ->check(CLI::IsMember({"max", "sort", "search"}));
  prof->add_option("--algorithm", profile_algorithm, "Algorithm")
      ->required()
      ->check(CLI::IsMember(kAlgorithmNames));
  prof->add_option("--n", profile_n, "Element count")->required()->check(CLI::PositiveNumber);
  prof->add_option("--m", profile_m, "Bits per element")->check(CLI::Range(1u, 64u));
  prof->add_option("--trials", profile_trials, "Random inputs to run")->check(CLI::PositiveNumber);
  prof->add_option("--seed", profile_seed, "RNG seed");
  prof->add_option("--buckets", profile_buckets, "Radix bucket count")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 24));
  prof->add_option("--passes", profile_passes, "Radix digit passes")->check(CLI::PositiveNumber);
  prof->add_flag("--clear-buckets", profile_clear, "Charge bucket clearing between radix passes");
  prof->add_flag("--exhaustive", profile_exhaustive, "Enumerate every input instead of sampling");
  add_temp_option(prof, common);

  // demon
  DemonConfig demon_cfg;
  demon_cfg.samples = 1000000;
  std::string demon_mode = "two_domain";
  bool demon_analytic = false;
  auto* demon = app.add_subcommand("demon", "Maxwell demon Monte Carlo");
  demon->add_option("--particles", demon_cfg.particles, "Particle count")
      ->required()
      ->check(CLI::PositiveNumber);
  demon->add_option("--mode", demon_mode, "two_domain or n_cells")
      ->check(CLI::IsMember({"two_domain", "n_cells"}));
  demon->add_option("--samples", demon_cfg.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  demon->add_option("--seed", demon_cfg.seed, "RNG seed");
  demon->add_flag("--analytic", demon_analytic, "Skip sampling; analytic entropies only");
  add_temp_option(demon, common);

  // grover
  std::uint64_t grover_n = 0;
  auto* grover = app.add_subcommand("grover", "Energy ratio of quadratic-speedup search");
  grover->add_option("--n", grover_n, "Search space size")->required()->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (gate->parsed() && gate_file.empty() && gate_kind.empty()) {
      throw CLI::RequiredError("gate needs --file or --kind");
    }
    if (prof->parsed() && !profile_algorithm.empty() &&
        problem_of(algorithm_from_string(profile_algorithm)) !=
            problem_kind_from_string(profile_problem)) {
      throw CLI::ValidationError("--algorithm",
                                 profile_algorithm + " does not solve the " + profile_problem +
                                     " problem");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsageError;
  }

  try {
    const ReportFormat format = report_format_from_string(common.format);
    const auto t = temperature(common);
    ReportDocument doc;

    if (bound->parsed()) {
      doc = bound_report_document(bound_report(make_problem(bound_problem, bound_n, bound_m)), t);
    } else if (gate->parsed()) {
      std::map<std::string, Scalar> params;
      GateReport report;
      if (!gate_file.empty()) {
        params["file"] = gate_file;
        try {
          report = reduction_bits(parse_truth_map(read_file(gate_file)));
        } catch (const ParseError& e) {
          throw std::runtime_error(gate_file + ": " + e.what());
        }
      } else {
        const GateKind kind = gate_kind_from_string(gate_kind);
        params["kind"] = gate_kind;
        params["width"] = static_cast<std::int64_t>(gate_width);
        report = analyze_standard(kind, gate_width);
      }
      doc = gate_report_document(report, params, t);
    } else if (prof->parsed()) {
      const ProblemSpec p = make_problem(profile_problem, profile_n, profile_m);
      ProfileOptions options;
      options.exhaustive = profile_exhaustive;
      if (profile_buckets || profile_passes || profile_clear) {
        const unsigned key_bits = profile_m;
        const std::uint64_t b = profile_buckets.value_or(2);
        const unsigned d = profile_passes.value_or(passes_for(b, key_bits));
        options.radix = RadixOptions{b, d, profile_clear};
      }
      doc = profile_report_document(
          profile(p, algorithm_from_string(profile_algorithm), profile_trials, profile_seed, options),
          t);
    } else if (demon->parsed()) {
      demon_cfg.mode = demon_mode_from_string(demon_mode);
      demon_cfg.estimate = !demon_analytic;
      doc = demon_report_document(demon_cfg, simulate_demon(demon_cfg), t);
    } else if (grover->parsed()) {
      doc = grover_report_document(grover_n);
    }
    out << write_report(doc, format);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputationError;
  }
}

}  // namespace landauer
