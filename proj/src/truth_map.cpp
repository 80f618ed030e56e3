#include "landauer/truth_map.hpp"

#include <optional>
#include <string>
#include <vector>

#include "landauer/errors.hpp"

namespace landauer {

TruthMap::TruthMap(unsigned width_in, unsigned width_out, std::vector<BitState> table)
    : width_in_(width_in), width_out_(width_out), table_(std::move(table)) {
  if (width_in > kMaxDenseWidth || width_out > kMaxDenseWidth) {
    throw ValidationError("truth maps are limited to 24 input and output lines");
  }
  if (table_.size() != (std::size_t{1} << width_in)) {
    throw ValidationError("table has " + std::to_string(table_.size()) + " rows, expected 2^" +
                          std::to_string(width_in));
  }
  const BitState limit = BitState{1} << width_out;
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (table_[x] >= limit) {
      throw ValidationError("output of input " + format_bits(static_cast<BitState>(x), width_in) +
                            " does not fit in " + std::to_string(width_out) + " bits");
    }
  }
}

TruthMap TruthMap::from_function(unsigned width_in, unsigned width_out,
                                 const std::function<BitState(BitState)>& fn) {
  if (width_in > kMaxDenseWidth) {
    throw ValidationError("truth maps are limited to 24 input lines");
  }
  std::vector<BitState> table(std::size_t{1} << width_in);
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = fn(static_cast<BitState>(x));
  return TruthMap(width_in, width_out, std::move(table));
}

bool TruthMap::is_bijective() const {
  if (width_in_ != width_out_) return false;
  std::vector<bool> seen(output_states(), false);
  for (BitState y : table_) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

std::size_t TruthMap::distinct_outputs() const {
  std::vector<bool> seen(output_states(), false);
  std::size_t distinct = 0;
  for (BitState y : table_) {
    if (!seen[y]) {
      seen[y] = true;
      ++distinct;
    }
  }
  return distinct;
}

std::string format_bits(BitState state, unsigned width) {
  std::string s(width, '0');
  for (unsigned i = 0; i < width; ++i) {
    if ((state >> i) & 1u) s[i] = '1';
  }
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

BitState parse_bits(std::string_view field, std::size_t line_no, const char* side) {
  if (field.empty()) throw ParseError(line_no, std::string("empty ") + side + " state");
  if (field.size() > kMaxDenseWidth) {
    throw ParseError(line_no, std::string(side) + " state wider than 24 bits");
  }
  BitState state = 0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const char c = field[i];
    if (c == '1') {
      state |= BitState{1} << i;
    } else if (c != '0') {
      throw ParseError(line_no, std::string("non-binary character '") + c + "' in " + side +
                                    " state");
    }
  }
  return state;
}

}  // namespace

TruthMap parse_truth_map(std::string_view text) {
  std::optional<unsigned> width_in;
  std::optional<unsigned> width_out;
  std::vector<BitState> table;
  std::vector<std::size_t> defined_at;  // line of each input's row, 0 = missing
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError(line_no, "expected '<in-bits> -> <out-bits>'");
    }
    const auto in_field = trim(line.substr(0, arrow));
    const auto out_field = trim(line.substr(arrow + 2));
    const BitState in = parse_bits(in_field, line_no, "input");
    const BitState out = parse_bits(out_field, line_no, "output");

    if (!width_in) {
      width_in = static_cast<unsigned>(in_field.size());
      width_out = static_cast<unsigned>(out_field.size());
      table.assign(std::size_t{1} << *width_in, 0);
      defined_at.assign(table.size(), 0);
    } else if (in_field.size() != *width_in || out_field.size() != *width_out) {
      throw ParseError(line_no, "row width " + std::to_string(in_field.size()) + " -> " +
                                    std::to_string(out_field.size()) + " differs from " +
                                    std::to_string(*width_in) + " -> " +
                                    std::to_string(*width_out));
    }
    if (defined_at[in] != 0) {
      throw ParseError(line_no, "duplicate input " + std::string(in_field) +
                                    " (first defined on line " +
                                    std::to_string(defined_at[in]) + ")");
    }
    defined_at[in] = line_no;
    table[in] = out;
  }

  if (!width_in) throw ParseError(line_no, "document contains no rows");
  for (std::size_t x = 0; x < defined_at.size(); ++x) {
    if (defined_at[x] == 0) {
      throw ParseError(line_no, "missing input " + format_bits(static_cast<BitState>(x), *width_in));
    }
  }
  return TruthMap(*width_in, *width_out, std::move(table));
}

std::string format_truth_map(const TruthMap& map) {
  std::string out;
  const auto table = map.table();
  for (std::size_t x = 0; x < table.size(); ++x) {
    out += format_bits(static_cast<BitState>(x), map.width_in());
    out += " -> ";
    out += format_bits(table[x], map.width_out());
    out += '\n';
  }
  return out;
}

}  // namespace landauer
