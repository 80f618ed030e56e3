#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "landauer/entropy.hpp"
#include "landauer/truth_map.hpp"

namespace landauer {

enum class GateKind { compare_gt, add, mul, toffoli, fredkin, identity, erase };

std::string_view to_string(GateKind kind);
// Throws DomainError for unknown names.
GateKind gate_kind_from_string(std::string_view name);

// Input width of the standard map, e.g. 3n+1 for add(n).
unsigned standard_width_in(GateKind kind, unsigned width);

// Standard gates. Operand fields are packed low to high in the order listed
// and the output region starts in an arbitrary (uniform) state:
//   compare_gt(M): (a:M, b:M, r:1) -> (a, b, [a > b])
//   add(n):        (a:n, b:n, s:n+1) -> (a, b, a + b)
//   mul(n):        (a:n, b:n, p:2n) -> (a, b, a * b)
//   toffoli:       (a, b, c) -> (a, b, c xor ab)
//   fredkin:       (c, x, y) -> (c, y, x) if c else unchanged
//   identity(w), erase(w): x -> x, x -> 0
// toffoli and fredkin ignore width. Throws DomainError for width 0 and
// ValidationError when the table would exceed 24 input lines.
TruthMap standard_map(GateKind kind, unsigned width);

struct GateReport {
  EntropyBits entropy_in;
  EntropyBits entropy_out;
  EntropyBits reduction;
  bool bijective = false;
  // True when the figures come from the closed form instead of enumeration.
  bool analytic = false;
};

// Entropy reduction of one application of the map with uniform inputs.
GateReport reduction_bits(const TruthMap& map);

// Enumerates when the map fits in 24 input lines, otherwise uses the closed
// forms 1, n+1, 2n, 0, w.
GateReport analyze_standard(GateKind kind, unsigned width);

struct AncillaLine {
  unsigned line;
  bool value;
};

// A reversible host with some input lines pinned to constants. The remaining
// (free) input lines, in increasing order, carry the target's input bits and
// output_lines carry its output bits.
struct AncillaEmbedding {
  TruthMap reversible_map;
  std::vector<AncillaLine> ancillas;
  std::vector<unsigned> free_lines;
  std::vector<unsigned> output_lines;
  EntropyBits init_cost;

  std::size_t ancilla_bits() const noexcept { return ancillas.size(); }
};

// Throws EmbeddingError when the host is not bijective, the lines are
// inconsistent, or the pinned host disagrees with the target on any input.
AncillaEmbedding embed_with_ancilla(const TruthMap& target, const TruthMap& host,
                                    std::span<const AncillaLine> ancillas,
                                    std::span<const unsigned> output_lines);

// Target-shaped output produced by running the host on a free-input
// assignment with the ancillas at their constants.
BitState simulate_embedding(const AncillaEmbedding& embedding, BitState free_inputs);

}  // namespace landauer
