#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace landauer {

using BitState = std::uint32_t;

// Largest input width that is stored as a dense table.
inline constexpr unsigned kMaxDenseWidth = 24;

// Total function from width_in-bit states to width_out-bit states.
//
// States pack lines little-endian: line i is bit i of the state. Multi-field
// gates pack fields in declaration order, lowest field in the lowest bits.
class TruthMap {
 public:
  // Throws ValidationError when the table is not total over 2^width_in inputs
  // or an output does not fit width_out bits.
  TruthMap(unsigned width_in, unsigned width_out, std::vector<BitState> table);

  static TruthMap from_function(unsigned width_in, unsigned width_out,
                                const std::function<BitState(BitState)>& fn);

  unsigned width_in() const noexcept { return width_in_; }
  unsigned width_out() const noexcept { return width_out_; }
  std::size_t input_states() const noexcept { return table_.size(); }
  std::size_t output_states() const noexcept { return std::size_t{1} << width_out_; }

  BitState operator()(BitState input) const { return table_.at(input); }
  std::span<const BitState> table() const noexcept { return table_; }

  bool is_bijective() const;
  std::size_t distinct_outputs() const;

  friend bool operator==(const TruthMap&, const TruthMap&) = default;

 private:
  unsigned width_in_;
  unsigned width_out_;
  std::vector<BitState> table_;
};

// Text form of a state: character i is line i.
std::string format_bits(BitState state, unsigned width);

// Reads the line-oriented truth-table document:
//
//   # comment
//   011 -> 010
//
// Every one of the 2^width_in inputs must appear exactly once.
TruthMap parse_truth_map(std::string_view text);

// Inverse of parse_truth_map, rows in input order.
std::string format_truth_map(const TruthMap& map);

}  // namespace landauer
