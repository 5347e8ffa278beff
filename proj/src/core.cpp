#include "pls/core.hpp"

#include <algorithm>

namespace pls {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::malformed_input: return "malformed-input";
    case Errc::duplicate_in_row: return "duplicate-in-row";
    case Errc::duplicate_in_column: return "duplicate-in-column";
    case Errc::symbol_out_of_range: return "symbol-out-of-range";
    case Errc::wrong_shape: return "wrong-shape";
    case Errc::not_l_shaped: return "not-L-shaped";
    case Errc::not_balanced: return "not-balanced";
    case Errc::order_too_small: return "n-too-small";
    case Errc::ryser_violated: return "ryser-violated";
    case Errc::too_many_empty_cells: return "too-many-empty-cells";
    case Errc::flow_deficit: return "flow-deficit";
    case Errc::row_matching_deficit: return "row-matching-deficit";
    case Errc::not_uniform: return "not-uniform";
    case Errc::not_regular: return "not-regular";
    case Errc::intersection_mismatch: return "intersection-mismatch";
    case Errc::invalid_coloring: return "invalid-coloring";
    case Errc::unrecognized_position: return "unrecognized-position";
    case Errc::not_a_subset: return "J-not-subset-of-holes";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

std::string to_string(Cell cell) {
  return "(" + std::to_string(cell.row + 1) + "," + std::to_string(cell.col + 1) + ")";
}

std::string to_string(const CellSet& cells) {
  std::string out = "{";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(cells[i]);
  }
  return out + "}";
}

PartialLatinSquare::PartialLatinSquare(int order) : n_(order) {
  if (order < 1) {
    throw Error(Errc::invalid_argument, "order must be positive, got " + std::to_string(order));
  }
  cells_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), kEmpty);
}

PartialLatinSquare PartialLatinSquare::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  PartialLatinSquare p(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw Error(Errc::malformed_input, "row " + std::to_string(i + 1) + " has " +
                                             std::to_string(rows[i].size()) +
                                             " entries, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) p.set(i, j, rows[i][j]);
  }
  require_valid(p);
  return p;
}

int PartialLatinSquare::filled_count() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                        [](int v) { return v != kEmpty; }));
}

CellSet PartialLatinSquare::empty_cells() const {
  CellSet out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (is_empty(i, j)) out.push_back({i, j});
  return out;
}

SymbolSet PartialLatinSquare::missing_from_row(int row) const {
  std::vector<bool> present(static_cast<std::size_t>(n_) + 1, false);
  for (int j = 0; j < n_; ++j) present[static_cast<std::size_t>(at(row, j))] = true;
  SymbolSet out;
  for (int s = 1; s <= n_; ++s)
    if (!present[static_cast<std::size_t>(s)]) out.insert(out.end(), s);
  return out;
}

SymbolSet PartialLatinSquare::missing_from_col(int col) const {
  std::vector<bool> present(static_cast<std::size_t>(n_) + 1, false);
  for (int i = 0; i < n_; ++i) present[static_cast<std::size_t>(at(i, col))] = true;
  SymbolSet out;
  for (int s = 1; s <= n_; ++s)
    if (!present[static_cast<std::size_t>(s)]) out.insert(out.end(), s);
  return out;
}

SymbolSet PartialLatinSquare::support(Cell c) const {
  if (!is_empty(c)) return {at(c)};
  std::vector<bool> present(static_cast<std::size_t>(n_) + 1, false);
  for (int k = 0; k < n_; ++k) {
    present[static_cast<std::size_t>(at(c.row, k))] = true;
    present[static_cast<std::size_t>(at(k, c.col))] = true;
  }
  SymbolSet out;
  for (int s = 1; s <= n_; ++s)
    if (!present[static_cast<std::size_t>(s)]) out.insert(out.end(), s);
  return out;
}

bool PartialLatinSquare::supports(Cell c, int symbol) const {
  if (!is_empty(c)) return at(c) == symbol;
  for (int k = 0; k < n_; ++k)
    if (at(c.row, k) == symbol || at(k, c.col) == symbol) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::string Validation::message() const {
  if (ok) return "ok";
  switch (kind) {
    case Errc::duplicate_in_row:
    case Errc::duplicate_in_column:
      return std::string(errc_name(kind)) + "(" + std::to_string(line) + ", symbol " +
             std::to_string(symbol) + ")";
    default:
      return std::string(errc_name(kind)) + "(symbol " + std::to_string(symbol) + ")";
  }
}

Validation validate(const PartialLatinSquare& p) {
  const int n = p.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int v = p.at(i, j);
      if (v < 0 || v > n) return {false, Errc::symbol_out_of_range, 0, v};
    }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (int j = 0; j < n; ++j) {
      const int v = p.at(i, j);
      if (v == kEmpty) continue;
      if (seen[static_cast<std::size_t>(v)]) return {false, Errc::duplicate_in_row, i + 1, v};
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (int i = 0; i < n; ++i) {
      const int v = p.at(i, j);
      if (v == kEmpty) continue;
      if (seen[static_cast<std::size_t>(v)]) return {false, Errc::duplicate_in_column, j + 1, v};
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  return {};
}

void require_valid(const PartialLatinSquare& p) {
  const Validation v = validate(p);
  if (!v) throw Error(v.kind, v.message());
}

bool extends(const PartialLatinSquare& completion, const PartialLatinSquare& partial) {
  if (completion.order() != partial.order()) return false;
  if (!completion.is_complete() || !validate(completion)) return false;
  const int n = partial.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!partial.is_empty(i, j) && partial.at(i, j) != completion.at(i, j)) return false;
  return true;
}

SymbolSet support_set(const PartialLatinSquare& p, Cell b) { return p.support(b); }

int nu(const PartialLatinSquare& p, int symbol) {
  int count = 0;
  const int n = p.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.at(i, j) == symbol) ++count;
  return count;
}

std::vector<int> symbol_counts(const PartialLatinSquare& p) {
  const int n = p.order();
  std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ++counts[static_cast<std::size_t>(p.at(i, j))];
  counts[0] = 0;
  return counts;
}

// ---------------------------------------------------------------------------

namespace {

struct Box {
  int rows = 0;
  int cols = 0;
};

template <typename Pred>
Box bounding_box(const PartialLatinSquare& p, Pred pred) {
  Box box;
  const int n = p.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pred(i, j)) {
        box.rows = std::max(box.rows, i + 1);
        box.cols = std::max(box.cols, j + 1);
      }
  return box;
}

}  // namespace

std::optional<RectangleWithHoles> as_rectangle_with_holes(const PartialLatinSquare& p) {
  const Box box = bounding_box(p, [&](int i, int j) { return !p.is_empty(i, j); });
  RectangleWithHoles shape{box.rows, box.cols, {}};
  std::vector<int> per_col(static_cast<std::size_t>(box.cols), 0);
  for (int i = 0; i < box.rows; ++i)
    for (int j = 0; j < box.cols; ++j)
      if (p.is_empty(i, j)) {
        if (++per_col[static_cast<std::size_t>(j)] > 1) return std::nullopt;
        shape.holes.push_back({i, j});
      }
  return shape;
}

std::optional<Rectangle> as_rectangle(const PartialLatinSquare& p) {
  auto holes = as_rectangle_with_holes(p);
  if (!holes || !holes->holes.empty()) return std::nullopt;
  return Rectangle{holes->rows, holes->cols};
}

std::optional<LShape> as_lshape(const PartialLatinSquare& p) {
  const Box box = bounding_box(p, [&](int i, int j) { return p.is_empty(i, j); });
  for (int i = 0; i < box.rows; ++i)
    for (int j = 0; j < box.cols; ++j)
      if (!p.is_empty(i, j)) return std::nullopt;
  return LShape{box.rows, box.cols};
}

ShapeClass classify_shape(const PartialLatinSquare& p) {
  if (auto holes = as_rectangle_with_holes(p)) {
    if (holes->holes.empty()) return Rectangle{holes->rows, holes->cols};
    return *holes;
  }
  if (auto l = as_lshape(p)) return *l;
  return GeneralShape{};
}

std::string describe(const ShapeClass& shape) {
  struct Visitor {
    std::string operator()(const Rectangle& r) const {
      return "rectangle " + std::to_string(r.rows) + "x" + std::to_string(r.cols);
    }
    std::string operator()(const RectangleWithHoles& r) const {
      return "rectangle " + std::to_string(r.rows) + "x" + std::to_string(r.cols) +
             " with holes " + to_string(r.holes);
    }
    std::string operator()(const LShape& l) const {
      return "L-shaped, empty block " + std::to_string(l.rows) + "x" + std::to_string(l.cols);
    }
    std::string operator()(const GeneralShape&) const { return "general"; }
  };
  return std::visit(Visitor{}, shape);
}

// ---------------------------------------------------------------------------

BalanceReport check_balance(const Framework& f) {
  BalanceReport report;
  std::vector<int> row_count(static_cast<std::size_t>(f.symbols) + 1, 0);
  std::vector<int> col_count(static_cast<std::size_t>(f.symbols) + 1, 0);
  for (const auto& list : f.row_lists) {
    if (static_cast<int>(list.size()) != f.cols) report.row_sizes = false;
    for (int s : list)
      if (s >= 1 && s <= f.symbols) ++row_count[static_cast<std::size_t>(s)];
  }
  for (const auto& list : f.col_lists) {
    if (static_cast<int>(list.size()) != f.rows) report.col_sizes = false;
    for (int s : list)
      if (s >= 1 && s <= f.symbols) ++col_count[static_cast<std::size_t>(s)];
  }
  report.symbol_counts = row_count == col_count;
  return report;
}

void require_well_formed(const Framework& f) {
  if (f.rows < 0 || f.cols < 0 || f.symbols < 0)
    throw Error(Errc::invalid_argument, "framework dimensions must be non-negative");
  if (static_cast<int>(f.row_lists.size()) != f.rows ||
      static_cast<int>(f.col_lists.size()) != f.cols)
    throw Error(Errc::invalid_argument, "framework list counts do not match r and s");
  auto check = [&](const std::vector<SymbolSet>& lists) {
    for (const auto& list : lists)
      for (int s : list)
        if (s < 1 || s > f.symbols)
          throw Error(Errc::symbol_out_of_range,
                      "framework symbol " + std::to_string(s) + " outside 1.." +
                          std::to_string(f.symbols));
  };
  check(f.row_lists);
  check(f.col_lists);
}

Framework framework_from_lshape(const PartialLatinSquare& p) {
  const auto shape = as_lshape(p);
  if (!shape) throw Error(Errc::not_l_shaped, "square is not L-shaped");
  Framework f;
  f.rows = shape->rows;
  f.cols = shape->cols;
  f.symbols = p.order();
  for (int i = 0; i < f.rows; ++i) f.row_lists.push_back(p.missing_from_row(i));
  for (int j = 0; j < f.cols; ++j) f.col_lists.push_back(p.missing_from_col(j));
  return f;
}

AdmissibleArray admissible_array(const Framework& f) {
  AdmissibleArray m(f.rows, f.cols);
  for (int i = 0; i < f.rows; ++i)
    for (int j = 0; j < f.cols; ++j) {
      const auto& row = f.row_lists[static_cast<std::size_t>(i)];
      const auto& col = f.col_lists[static_cast<std::size_t>(j)];
      std::set_intersection(row.begin(), row.end(), col.begin(), col.end(),
                            std::inserter(m.at(i, j), m.at(i, j).end()));
    }
  return m;
}

bool is_latinization(const Framework& f, const SymbolGrid& grid) {
  if (grid.rows != f.rows || grid.cols != f.cols) return false;
  for (int i = 0; i < f.rows; ++i)
    for (int j = 0; j < f.cols; ++j) {
      const int v = grid.at(i, j);
      if (!f.row_lists[static_cast<std::size_t>(i)].contains(v) ||
          !f.col_lists[static_cast<std::size_t>(j)].contains(v))
        return false;
    }
  for (int i = 0; i < f.rows; ++i) {
    SymbolSet seen;
    for (int j = 0; j < f.cols; ++j)
      if (!seen.insert(grid.at(i, j)).second) return false;
  }
  for (int j = 0; j < f.cols; ++j) {
    SymbolSet seen;
    for (int i = 0; i < f.rows; ++i)
      if (!seen.insert(grid.at(i, j)).second) return false;
  }
  return true;
}

}  // namespace pls
