// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "landauer/algorithms.hpp"
#include "landauer/bounds.hpp"
#include "landauer/demon.hpp"
#include "landauer/entropy.hpp"
#include "landauer/gates.hpp"
#include "landauer/maxwellian.hpp"
#include "landauer/rng.hpp"
#include "landauer/truth_map.hpp"

using namespace landauer;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  std::optional<double> limit_ms;
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(12);
  ss << x;
  return ss.str();
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_command(const std::string& cmd) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

const std::string comparator_text = read_file(std::string(LANDAUER_DATA_DIR) + "/comparator.tt");

Outcome comparator_table() {
  Outcome o;
  const GateReport r = reduction_bits(parse_truth_map(comparator_text));
  o.check(near(r.entropy_in.bits(), 3.0, 1e-9), "entropy_in " + fmt(r.entropy_in.bits()));
  o.check(near(r.entropy_out.bits(), 2.0, 1e-9), "entropy_out " + fmt(r.entropy_out.bits()));
  o.check(near(r.reduction.bits(), 1.0, 1e-9), "reduction " + fmt(r.reduction.bits()));
  if (o.pass) o.detail = "3.0 -> 2.0, reduction 1.0 bit";
  return o;
}

Outcome compare_width() {
  Outcome o;
  for (unsigned m = 1; m <= 3; ++m) {
    const TruthMap map = standard_map(GateKind::compare_gt, m);
    o.check(map.input_states() <= 128, "too many states");
    const double red = reduction_bits(map).reduction.bits();
    o.check(near(red, 1.0, 1e-9), "M=" + std::to_string(m) + " reduction " + fmt(red));
  }
  if (o.pass) o.detail = "1.0 bit for M = 1, 2, 3";
  return o;
}

Outcome arithmetic() {
  Outcome o;
  for (unsigned n = 1; n <= 3; ++n) {
    const double add = reduction_bits(standard_map(GateKind::add, n)).reduction.bits();
    const double mul = reduction_bits(standard_map(GateKind::mul, n)).reduction.bits();
    o.check(near(add, n + 1.0, 1e-9), "add(" + std::to_string(n) + ") " + fmt(add));
    o.check(near(mul, 2.0 * n, 1e-9), "mul(" + std::to_string(n) + ") " + fmt(mul));
  }
  if (o.pass) o.detail = "add n+1, mul 2n for n = 1..3";
  return o;
}

Outcome reversibility() {
  Outcome o;
  o.check(reduction_bits(standard_map(GateKind::toffoli, 0)).reduction.bits() == 0.0, "toffoli");
  o.check(reduction_bits(standard_map(GateKind::fredkin, 0)).reduction.bits() == 0.0, "fredkin");
  for (unsigned w = 1; w <= 8; ++w) {
    const double r = reduction_bits(standard_map(GateKind::erase, w)).reduction.bits();
    o.check(near(r, w, 1e-9), "erase(" + std::to_string(w) + ") " + fmt(r));
  }
  const TruthMap nand = TruthMap::from_function(2, 1, [](BitState x) { return BitState{x != 3}; });
  const std::vector<AncillaLine> c{{2, true}};
  const std::vector<unsigned> out{2};
  try {
    const AncillaEmbedding e = embed_with_ancilla(nand, standard_map(GateKind::toffoli, 0), c, out);
    o.check(e.init_cost.bits() == 1.0, "init_cost " + fmt(e.init_cost.bits()));
    for (BitState x = 0; x < 4; ++x) o.check(simulate_embedding(e, x) == nand(x), "NAND mismatch");
  } catch (const std::exception& ex) {
    o.check(false, ex.what());
  }
  if (o.pass) o.detail = "toffoli/fredkin 0, erase(w) = w, NAND embedding init_cost 1.0";
  return o;
}

Outcome bounds_agree() {
  Outcome o;
  int cases = 0;
  for (std::uint64_t n = 2; n <= 1024; n *= 2) {
    for (std::uint32_t m : {1u, 4u, 8u}) {
      for (const auto& p : {ProblemSpec::max_of_n(n, m), ProblemSpec::sort(n, m),
                            ProblemSpec::ordered_search(n, m)}) {
        const auto e = encoding_entropy(p);
        const double diff = e.s1.bits() - e.s2.bits();
        o.check(diff == bound_bits(p).bits(),
                std::string(to_string(p.kind)) + " N=" + std::to_string(n) + " M=" + std::to_string(m));
        ++cases;
      }
    }
  }
  const double mm = bound_bits(ProblemSpec::matmul(4, 8)).bits();
  o.check(mm == 288.0, "matmul " + fmt(mm));
  if (o.pass) o.detail = std::to_string(cases) + " encodings exact, matmul(4,8) = 288";
  return o;
}

Outcome soundness() {
  Outcome o;
  const std::uint64_t bound = classical_comparison_bound(ProblemSpec::sort(8));
  o.check(bound == 16, "ceil(log2 8!) = " + std::to_string(bound));
  const ProfileOptions all{{}, true};
  for (Algorithm a : {Algorithm::merge_sort, Algorithm::bubble_sort}) {
    const ProfileReport r = profile(ProblemSpec::sort(8), a, 1, 0, all);
    o.check(r.trials == 40320, "trials " + std::to_string(r.trials));
    o.check(r.comparisons.min >= static_cast<double>(bound),
            std::string(to_string(a)) + " min " + fmt(r.comparisons.min) + " < " +
                std::to_string(bound) + " (worst " + fmt(r.comparisons.max) + ", mean " +
                fmt(r.comparisons.mean) + " vs log2 8! " + fmt(std::log2(40320.0)) + ")");
  }
  const ProfileReport mx = profile(ProblemSpec::max_of_n(8), Algorithm::max_scan, 1, 0, all);
  o.check(mx.measured_bits.min == 7.0 && mx.measured_bits.max == 7.0,
          "max_scan range " + fmt(mx.measured_bits.min) + ".." + fmt(mx.measured_bits.max));
  if (o.pass) o.detail = "all 40320 permutations meet 16 comparisons; max_scan 7 bits";
  return o;
}

Outcome asymptotics() {
  Outcome o;
  const std::size_t n = std::size_t{1} << 16;
  const std::uint64_t recurrence = merge_sort_worst_comparisons(n);
  const RunResult run = run_algorithm(Algorithm::merge_sort, {merge_sort_worst_case_input(n), 0, {}});
  const double ratio = static_cast<double>(recurrence) / bound_bits(ProblemSpec::sort(n)).bits();
  o.check(run.ledger.total_bits() == static_cast<double>(recurrence),
          "metered " + fmt(run.ledger.total_bits()) + " vs recurrence " + std::to_string(recurrence));
  o.check(ratio >= 0.80 && ratio <= 1.00, "ratio " + fmt(ratio));
  if (o.pass) o.detail = "C(2^16) = " + std::to_string(recurrence) + ", ratio " + fmt(ratio);
  return o;
}

Outcome radix() {
  Outcome o;
  std::vector<Value> keys(1024);
  std::iota(keys.begin(), keys.end(), 0);
  Rng rng(2024);
  rng.shuffle(std::span<Value>(keys));
  const double bound = bound_bits(ProblemSpec::sort(1024)).bits();
  const RunResult full = run_algorithm(Algorithm::radix_sort, {keys, 0, RadixOptions{1024, 1, false}});
  o.check(full.ledger.bucket_bits_written() == 10240.0 && bound == 10240.0,
          "B=1024 charged " + fmt(full.ledger.bucket_bits_written()));
  std::string charged;
  for (std::uint64_t b : {2u, 4u, 16u}) {
    const unsigned d = static_cast<unsigned>(std::ceil(10.0 / std::log2(static_cast<double>(b))));
    const RunResult r = run_algorithm(Algorithm::radix_sort, {keys, 0, RadixOptions{b, d, false}});
    o.check(r.ledger.total_bits() >= 10240.0, "B=" + std::to_string(b) + " charged " + fmt(r.ledger.total_bits()));
    charged += " B=" + std::to_string(b) + ":" + fmt(r.ledger.total_bits());
  }
  if (o.pass) o.detail = "B=1024 exactly 10240;" + charged;
  return o;
}

Outcome demon() {
  Outcome o;
  DemonConfig cfg;
  cfg.particles = 12;
  cfg.samples = 1000000;
  cfg.seed = 20240601;
  const DemonResult r = simulate_demon(cfg);
  const double est = r.entropy_estimate_bits ? r.entropy_estimate_bits->bits() : -1.0;
  o.check(std::abs(est - 12.0) <= 0.02 * 12.0, "estimate " + fmt(est));
  o.check(r.entropy_before_bits.bits() == 12.0 && r.entropy_after_bits.bits() == 0.0, "N=12 analytic");
  DemonConfig one;
  one.particles = 1;
  one.estimate = false;
  const DemonResult r1 = simulate_demon(one);
  o.check(r1.entropy_before_bits.bits() == 1.0 && r1.entropy_after_bits.bits() == 0.0, "N=1 analytic");
  if (o.pass) o.detail = "estimate " + fmt(est) + " bits; (12, 0); (1, 0)";
  return o;
}

Outcome maxwellian() {
  Outcome o;
  Rng rng(99);
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> values;
  while (values.size() < 1000) {
    const std::uint64_t v = rng.next() >> 40;
    if (seen.insert(v).second) values.push_back(v);
  }
  const MaxwellianMap map;
  const auto speeds = quantile_map_to_maxwellian(values, map);
  auto order = [](const auto& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    return idx;
  };
  o.check(order(speeds) == order(values), "sort permutation differs");
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double u = (i + 0.5) / 1000.0;
    worst = std::max(worst, std::abs(map.cdf(map.quantile(u)) - u));
  }
  o.check(worst <= 1e-12, "max residual " + fmt(worst));
  if (o.pass) o.detail = "order preserved, max residual " + fmt(worst);
  return o;
}

Outcome energy() {
  Outcome o;
  const double j = bits_to_joules(EntropyBits(1.0), Temperature(300.0));
  const double rel = std::abs(j - 2.8708e-21) / 2.8708e-21;
  o.check(rel <= 1e-4, fmt(j) + " J, relative error " + fmt(rel));
  if (o.pass) o.detail = fmt(j) + " J";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string cmd = std::string("\"") + LANDAUER_CLI +
                          "\" profile --problem sort --algorithm merge --n 256 --trials 200 --seed 42";
  const std::string a = run_command(cmd);
  const std::string b = run_command(cmd);
  o.check(!a.empty(), "no output from CLI");
  o.check(a == b, "outputs differ");
  if (o.pass) o.detail = std::to_string(a.size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "One-bit comparator table", 1.0, comparator_table},
      {2, "Comparison width independence", 10.0, compare_width},
      {3, "Arithmetic gates", 1000.0, arithmetic},
      {4, "Reversibility and erasure", std::nullopt, reversibility},
      {5, "Bounds agreement", std::nullopt, bounds_agree},
      {6, "Profiler soundness (exhaustive)", 30000.0, soundness},
      {7, "Profiler asymptotics", 10000.0, asymptotics},
      {8, "Radix accounting", std::nullopt, radix},
      {9, "Demon Monte Carlo", 30000.0, demon},
      {10, "Maxwellian mapping", std::nullopt, maxwellian},
      {11, "Energy conversion", std::nullopt, energy},
      {12, "Determinism", std::nullopt, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_ms && ms > *c.limit_ms) o.check(false, "over time limit " + fmt(*c.limit_ms) + " ms");
    if (!o.pass) ++failures;

    char line[128];
    std::snprintf(line, sizeof line, "[%2d] %s  %-34s %10.3f ms  ", c.id, o.pass ? "PASS" : "FAIL",
                  c.name.c_str(), ms);
    std::cout << line << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
