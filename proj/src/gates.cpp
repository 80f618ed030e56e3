#include "landauer/gates.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "landauer/errors.hpp"
#include "landauer/kernels.hpp"

namespace landauer {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 7> kGateNames{{
    {GateKind::compare_gt, "compare_gt"},
    {GateKind::add, "add"},
    {GateKind::mul, "mul"},
    {GateKind::toffoli, "toffoli"},
    {GateKind::fredkin, "fredkin"},
    {GateKind::identity, "identity"},
    {GateKind::erase, "erase"},
}};

BitState field(BitState state, unsigned offset, unsigned width) {
  return (state >> offset) & ((BitState{1} << width) - 1);
}

// Closed-form reduction for the standard gates, in bits.
double closed_form_reduction(GateKind kind, unsigned width) {
  switch (kind) {
    case GateKind::compare_gt: return 1.0;
    case GateKind::add: return width + 1.0;
    case GateKind::mul: return 2.0 * width;
    case GateKind::toffoli:
    case GateKind::fredkin:
    case GateKind::identity: return 0.0;
    case GateKind::erase: return width;
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(GateKind kind) {
  for (const auto& [k, name] : kGateNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

GateKind gate_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kGateNames) {
    if (n == name) return k;
  }
  throw DomainError("unsupported gate kind '" + std::string(name) + "'");
}

unsigned standard_width_in(GateKind kind, unsigned width) {
  switch (kind) {
    case GateKind::compare_gt: return 2 * width + 1;
    case GateKind::add: return 3 * width + 1;
    case GateKind::mul: return 4 * width;
    case GateKind::toffoli:
    case GateKind::fredkin: return 3;
    case GateKind::identity:
    case GateKind::erase: return width;
  }
  throw DomainError("unsupported gate kind");
}

TruthMap standard_map(GateKind kind, unsigned width) {
  if (width == 0 && kind != GateKind::toffoli && kind != GateKind::fredkin) {
    throw DomainError("gate width must be at least 1");
  }
  const unsigned w_in = standard_width_in(kind, width);
  if (w_in > kMaxDenseWidth) {
    throw ValidationError(std::string(to_string(kind)) + "(" + std::to_string(width) + ") needs " +
                          std::to_string(w_in) + " input lines; tables stop at 24");
  }
  const unsigned n = width;
  switch (kind) {
    case GateKind::compare_gt:
      return TruthMap::from_function(w_in, w_in, [n](BitState s) {
        const BitState a = field(s, 0, n);
        const BitState b = field(s, n, n);
        return a | (b << n) | (BitState{a > b} << (2 * n));
      });
    case GateKind::add:
      return TruthMap::from_function(w_in, w_in, [n](BitState s) {
        const BitState a = field(s, 0, n);
        const BitState b = field(s, n, n);
        return a | (b << n) | ((a + b) << (2 * n));
      });
    case GateKind::mul:
      return TruthMap::from_function(w_in, w_in, [n](BitState s) {
        const BitState a = field(s, 0, n);
        const BitState b = field(s, n, n);
        return a | (b << n) | ((a * b) << (2 * n));
      });
    case GateKind::toffoli:
      return TruthMap::from_function(3, 3, [](BitState s) {
        const BitState a = s & 1u;
        const BitState b = (s >> 1) & 1u;
        return s ^ ((a & b) << 2);
      });
    case GateKind::fredkin:
      return TruthMap::from_function(3, 3, [](BitState s) {
        if ((s & 1u) == 0) return s;
        const BitState x = (s >> 1) & 1u;
        const BitState y = (s >> 2) & 1u;
        return 1u | (y << 1) | (x << 2);
      });
    case GateKind::identity:
      return TruthMap::from_function(w_in, w_in, [](BitState s) { return s; });
    case GateKind::erase:
      return TruthMap::from_function(w_in, w_in, [](BitState) { return BitState{0}; });
  }
  throw DomainError("unsupported gate kind");
}

GateReport reduction_bits(const TruthMap& map) {
  const auto counts = kernels::parallel::output_histogram(map.table(), map.output_states());
  const double in = map.width_in();
  const double out = histogram_entropy_bits(counts).bits();
  double reduction = in - out;
  // A bijection gives exactly zero; anything else negative is rounding noise.
  if (reduction < 0.0 && reduction > -kEntropyRelTolerance * std::max(1.0, in)) reduction = 0.0;
  return GateReport{EntropyBits(in), EntropyBits(out), EntropyBits(reduction), map.is_bijective(),
                    false};
}

GateReport analyze_standard(GateKind kind, unsigned width) {
  if (width == 0 && kind != GateKind::toffoli && kind != GateKind::fredkin) {
    throw DomainError("gate width must be at least 1");
  }
  const unsigned w_in = standard_width_in(kind, width);
  if (w_in <= kMaxDenseWidth) return reduction_bits(standard_map(kind, width));

  const double reduction = closed_form_reduction(kind, width);
  const bool bijective = reduction == 0.0;
  return GateReport{EntropyBits(w_in), EntropyBits(w_in - reduction), EntropyBits(reduction),
                    bijective, true};
}

AncillaEmbedding embed_with_ancilla(const TruthMap& target, const TruthMap& host,
                                    std::span<const AncillaLine> ancillas,
                                    std::span<const unsigned> output_lines) {
  if (!host.is_bijective()) throw EmbeddingError("host map is not bijective");

  std::vector<bool> pinned(host.width_in(), false);
  for (const auto& a : ancillas) {
    if (a.line >= host.width_in()) {
      throw EmbeddingError("ancilla line " + std::to_string(a.line) + " is not a host input");
    }
    if (pinned[a.line]) {
      throw EmbeddingError("ancilla line " + std::to_string(a.line) + " listed twice");
    }
    pinned[a.line] = true;
  }
  std::vector<unsigned> free_lines;
  for (unsigned line = 0; line < host.width_in(); ++line) {
    if (!pinned[line]) free_lines.push_back(line);
  }
  if (free_lines.size() != target.width_in()) {
    throw EmbeddingError("host leaves " + std::to_string(free_lines.size()) +
                         " free lines but the target has " + std::to_string(target.width_in()) +
                         " inputs");
  }
  if (output_lines.size() != target.width_out()) {
    throw EmbeddingError("target has " + std::to_string(target.width_out()) + " outputs but " +
                         std::to_string(output_lines.size()) + " output lines were given");
  }
  std::vector<bool> used(host.width_out(), false);
  for (unsigned line : output_lines) {
    if (line >= host.width_out() || used[line]) {
      throw EmbeddingError("output line " + std::to_string(line) + " is invalid or repeated");
    }
    used[line] = true;
  }

  AncillaEmbedding embedding{host,
                             std::vector<AncillaLine>(ancillas.begin(), ancillas.end()),
                             std::move(free_lines),
                             std::vector<unsigned>(output_lines.begin(), output_lines.end()),
                             EntropyBits(static_cast<double>(ancillas.size()))};

  for (std::size_t x = 0; x < target.input_states(); ++x) {
    const auto free_inputs = static_cast<BitState>(x);
    if (simulate_embedding(embedding, free_inputs) != target(free_inputs)) {
      throw EmbeddingError("pinned host disagrees with the target on input " +
                           format_bits(free_inputs, target.width_in()));
    }
  }
  return embedding;
}

BitState simulate_embedding(const AncillaEmbedding& embedding, BitState free_inputs) {
  BitState host_in = 0;
  for (const auto& a : embedding.ancillas) {
    if (a.value) host_in |= BitState{1} << a.line;
  }
  for (std::size_t i = 0; i < embedding.free_lines.size(); ++i) {
    if ((free_inputs >> i) & 1u) host_in |= BitState{1} << embedding.free_lines[i];
  }
  const BitState host_out = embedding.reversible_map(host_in);
  BitState out = 0;
  for (std::size_t i = 0; i < embedding.output_lines.size(); ++i) {
    if ((host_out >> embedding.output_lines[i]) & 1u) out |= BitState{1} << i;
  }
  return out;
}

}  // namespace landauer
