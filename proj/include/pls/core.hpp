#pragma once

// Grid and framework data model.
//
// Cells are 0-based internally and 1-based in every external format and
// diagnostic. Symbols are 1-based everywhere; 0 marks an empty cell.

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pls/errors.hpp"

namespace pls {

inline constexpr int kEmpty = 0;

struct Cell {
  int row = 0;
  int col = 0;

  auto operator<=>(const Cell&) const = default;
};

using CellSet = std::vector<Cell>;
using SymbolSet = std::set<int>;

/// "(r,c)" with 1-based coordinates.
std::string to_string(Cell cell);
std::string to_string(const CellSet& cells);

class PartialLatinSquare {
 public:
  explicit PartialLatinSquare(int order = 1);

  /// Builds from row vectors (0 = empty) and validates the latin property.
  static PartialLatinSquare from_rows(const std::vector<std::vector<int>>& rows);

  int order() const noexcept { return n_; }

  int at(int row, int col) const { return cells_[index(row, col)]; }
  int at(Cell c) const { return at(c.row, c.col); }
  bool is_empty(int row, int col) const { return at(row, col) == kEmpty; }
  bool is_empty(Cell c) const { return at(c) == kEmpty; }

  /// Unchecked write; callers re-validate when the source is untrusted.
  void set(int row, int col, int symbol) { cells_[index(row, col)] = symbol; }
  void set(Cell c, int symbol) { set(c.row, c.col, symbol); }
  void clear(Cell c) { set(c, kEmpty); }

  int filled_count() const;
  bool is_complete() const { return filled_count() == n_ * n_; }
  CellSet empty_cells() const;

  SymbolSet missing_from_row(int row) const;
  SymbolSet missing_from_col(int col) const;

  /// Symbols supported by a cell: its content if filled, else everything
  /// missing from both its row and its column.
  SymbolSet support(Cell c) const;
  bool supports(Cell c, int symbol) const;

  bool operator==(const PartialLatinSquare&) const = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(col);
  }

  int n_;
  std::vector<int> cells_;
};

using PLS = PartialLatinSquare;

// ---------------------------------------------------------------------------
// Validation

struct Validation {
  bool ok = true;
  Errc kind = Errc::malformed_input;  // meaningful only when !ok
  int line = 0;                       // 1-based row or column index
  int symbol = 0;

  explicit operator bool() const { return ok; }
  std::string message() const;
};

Validation validate(const PartialLatinSquare& p);

/// Throws pls::Error carrying the first violation.
void require_valid(const PartialLatinSquare& p);

/// True when `completion` is complete, valid and agrees with `partial` on
/// every filled cell of `partial`.
bool extends(const PartialLatinSquare& completion,
             const PartialLatinSquare& partial);

// ---------------------------------------------------------------------------
// Elementary queries

SymbolSet support_set(const PartialLatinSquare& p, Cell b);

/// Number of occurrences of `symbol` in the whole square.
int nu(const PartialLatinSquare& p, int symbol);

/// Occurrence counts indexed by symbol (index 0 unused).
std::vector<int> symbol_counts(const PartialLatinSquare& p);

// ---------------------------------------------------------------------------
// Shapes

/// Filled cells are exactly the upper-left rows x cols block.
struct Rectangle {
  int rows = 0;
  int cols = 0;
  bool operator==(const Rectangle&) const = default;
};

/// Filled cells are the upper-left block minus `holes`, at most one hole
/// per column. `holes` is sorted and non-empty.
struct RectangleWithHoles {
  int rows = 0;
  int cols = 0;
  CellSet holes;
  bool operator==(const RectangleWithHoles&) const = default;
};

/// Empty cells are exactly the upper-left rows x cols block.
struct LShape {
  int rows = 0;
  int cols = 0;
  bool operator==(const LShape&) const = default;
};

struct GeneralShape {
  bool operator==(const GeneralShape&) const = default;
};

using ShapeClass = std::variant<Rectangle, RectangleWithHoles, LShape, GeneralShape>;

/// Most specific class: Rectangle, then RectangleWithHoles, then LShape,
/// then GeneralShape.
ShapeClass classify_shape(const PartialLatinSquare& p);

std::optional<Rectangle> as_rectangle(const PartialLatinSquare& p);

/// Accepts plain rectangles too (with an empty hole set).
std::optional<RectangleWithHoles> as_rectangle_with_holes(const PartialLatinSquare& p);

std::optional<LShape> as_lshape(const PartialLatinSquare& p);

std::string describe(const ShapeClass& shape);

// ---------------------------------------------------------------------------
// Frameworks

struct Framework {
  int rows = 0;
  int cols = 0;
  int symbols = 0;
  std::vector<SymbolSet> row_lists;
  std::vector<SymbolSet> col_lists;

  bool operator==(const Framework&) const = default;
};

struct BalanceReport {
  bool row_sizes = true;      // |R_i| = cols
  bool col_sizes = true;      // |C_j| = rows
  bool symbol_counts = true;  // per-symbol counts agree across row and column lists

  bool balanced() const { return row_sizes && col_sizes && symbol_counts; }
};

BalanceReport check_balance(const Framework& f);
inline bool is_balanced(const Framework& f) { return check_balance(f).balanced(); }

/// Throws on lists whose symbols fall outside 1..symbols or on a size mismatch.
void require_well_formed(const Framework& f);

/// Row lists are the symbols missing from each of the first r rows; column
/// lists likewise for the first s columns.
Framework framework_from_lshape(const PartialLatinSquare& p);

class AdmissibleArray {
 public:
  AdmissibleArray(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols)) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  const SymbolSet& at(int i, int j) const { return entries_[index(i, j)]; }
  SymbolSet& at(int i, int j) { return entries_[index(i, j)]; }

  bool operator==(const AdmissibleArray&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_;
  int cols_;
  std::vector<SymbolSet> entries_;
};

/// Entry (i,j) = R_i ∩ C_j.
AdmissibleArray admissible_array(const Framework& f);

/// A dense rows x cols array of symbols, used for latin rectangles and
/// latinizations. Zero marks an unfilled entry.
struct SymbolGrid {
  int rows = 0;
  int cols = 0;
  std::vector<int> data;

  SymbolGrid() = default;
  SymbolGrid(int r, int c)
      : rows(r), cols(c), data(static_cast<std::size_t>(r * c), kEmpty) {}

  int at(int i, int j) const { return data[static_cast<std::size_t>(i * cols + j)]; }
  int& at(int i, int j) { return data[static_cast<std::size_t>(i * cols + j)]; }

  bool operator==(const SymbolGrid&) const = default;
};

/// Latin rectangle whose entry (i,j) lies in R_i ∩ C_j for every cell.
bool is_latinization(const Framework& f, const SymbolGrid& grid);

}  // namespace pls
