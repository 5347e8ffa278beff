#pragma once

#include <stdexcept>
#include <string>

namespace pls {

/// Machine-readable error categories. The CLI prints these names verbatim.
enum class Errc {
  malformed_input,
  duplicate_in_row,
  duplicate_in_column,
  symbol_out_of_range,
  wrong_shape,
  not_l_shaped,
  not_balanced,
  order_too_small,
  ryser_violated,
  too_many_empty_cells,
  flow_deficit,
  row_matching_deficit,
  not_uniform,
  not_regular,
  intersection_mismatch,
  invalid_coloring,
  unrecognized_position,
  not_a_subset,
  invalid_argument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by every text/JSON reader. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(Errc::malformed_input, "line " + std::to_string(line) +
                                         ", column " + std::to_string(column) +
                                         ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace pls
