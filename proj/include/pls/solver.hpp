#pragma once

// Backtracking search over latin grids with per-cell candidate lists. Used
// as the brute-force oracle for completion and latinization questions.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pls/core.hpp"

namespace pls {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class SolveStatus { found, none, budget_exhausted };

const char* to_string(SolveStatus s) noexcept;

/// rows x cols grid, symbols 1..symbols, no symbol twice in a row or
/// column. Bit k of a domain stands for symbol k + 1.
struct GridProblem {
  int rows = 0;
  int cols = 0;
  int symbols = 0;
  std::vector<boost::dynamic_bitset<>> domains;  // row-major
  /// Symbols that must appear somewhere in the row/column (empty bitset or
  /// no entry means no such requirement).
  std::vector<boost::dynamic_bitset<>> row_required;
  std::vector<boost::dynamic_bitset<>> col_required;

  GridProblem() = default;
  GridProblem(int r, int c, int t);

  boost::dynamic_bitset<>& domain(int i, int j) {
    return domains[static_cast<std::size_t>(i * cols + j)];
  }
  const boost::dynamic_bitset<>& domain(int i, int j) const {
    return domains[static_cast<std::size_t>(i * cols + j)];
  }
};

/// Empty cells get missing(row) ∩ missing(col); every row and column must
/// contain every symbol.
GridProblem grid_problem(const PartialLatinSquare& p);

/// Entry (i,j) gets R_i ∩ C_j; a row (column) whose list has exactly s (r)
/// symbols must use all of them.
GridProblem grid_problem(const Framework& f);

struct GridResult {
  SolveStatus status = SolveStatus::none;
  SymbolGrid grid;
  std::uint64_t nodes = 0;
};

GridResult solve_grid(const GridProblem& problem, std::uint64_t budget = kDefaultBudget);

struct CountResult {
  std::uint64_t count = 0;
  bool capped = false;           // stopped at the cap
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

CountResult enumerate_grid(const GridProblem& problem, std::uint64_t cap,
                           std::uint64_t budget = kDefaultBudget);

/// Every solution up to `cap`, in search order.
std::vector<SymbolGrid> collect_solutions(const GridProblem& problem, std::uint64_t cap,
                                          std::uint64_t budget = kDefaultBudget);

struct CompletionResult {
  SolveStatus status = SolveStatus::none;
  std::optional<PartialLatinSquare> completion;
  std::uint64_t nodes = 0;
};

CompletionResult complete_pls(const PartialLatinSquare& p, std::uint64_t budget = kDefaultBudget);

struct LatinizationResult {
  SolveStatus status = SolveStatus::none;
  std::optional<SymbolGrid> latinization;
  std::uint64_t nodes = 0;
};

LatinizationResult latinize_framework(const Framework& f, std::uint64_t budget = kDefaultBudget);

CountResult enumerate_small(const PartialLatinSquare& p, std::uint64_t cap,
                            std::uint64_t budget = kDefaultBudget);
CountResult enumerate_small(const Framework& f, std::uint64_t cap,
                            std::uint64_t budget = kDefaultBudget);

}  // namespace pls
