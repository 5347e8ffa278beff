#pragma once

// Hall's Condition for partial latin squares.
//
// alpha(σ, T) is the size of the largest subset of T that is independent
// for σ (pairwise distinct rows and columns, every cell supporting σ). The
// Hall inequality for T reads  Σ_σ alpha(σ, T) ≥ |T|; Hall's Condition asks
// for it on every cell set, equivalently on every set of empty cells.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pls/core.hpp"

namespace pls {

using Rational = boost::multiprecision::cpp_rational;

enum class Verdict { satisfied, violated, inconclusive };
enum class HallMethod { exhaustive, sufficient_condition, single_inequality };

const char* to_string(Verdict v) noexcept;
const char* to_string(HallMethod m) noexcept;

struct HallReport {
  Verdict verdict = Verdict::satisfied;
  HallMethod method = HallMethod::single_inequality;
  /// Violating set for `violated`; for an inconclusive sufficient check, the
  /// first empty cell whose sum falls below 1.
  std::optional<CellSet> certificate;
  std::int64_t alpha_sum = 0;  // Σ alpha over the certificate (or T)
  std::int64_t set_size = 0;   // |certificate| (or |T|)
  std::uint64_t subsets_checked = 0;
};

inline constexpr int kDefaultEmptyCellLimit = 20;

/// Maximum matching between rows and columns over the σ-supporting cells of T.
int alpha(const PartialLatinSquare& p, int symbol, const CellSet& cells);

/// Single Hall inequality, n matchings.
HallReport check_hi(const PartialLatinSquare& p, const CellSet& cells);

/// Every subset of empty cells, by increasing size then lexicographically;
/// stops at the first violation. Throws Errc::too_many_empty_cells when the
/// square has more than `limit` empty cells.
HallReport check_hc_exhaustive(const PartialLatinSquare& p, int limit = kDefaultEmptyCellLimit);

struct CellSum {
  Cell cell;
  Rational sum;
};

/// Σ_{σ ∈ S(b)} 1/(n − ν(σ)) for every empty cell b, in row-major order.
std::vector<CellSum> sufficient_sums(const PartialLatinSquare& p);

/// satisfied when every empty cell sum is at least 1, else inconclusive.
HallReport check_sufficient(const PartialLatinSquare& p);

/// Closed form for an r×s rectangle and H = top r rows:
/// min{r, ν(σ) + n − s}. Throws Errc::wrong_shape.
int alpha_closed_rectangle(const PartialLatinSquare& p, int symbol);

/// Closed form for a rectangle with at most one hole per column, evaluated
/// on H − J: min{r, ν(σ) + ρ(σ) + n − s} where ρ counts rows holding a hole
/// outside J that supports σ. Throws Errc::wrong_shape or Errc::not_a_subset.
int alpha_closed_holes(const PartialLatinSquare& p, int symbol, const CellSet& excluded);

/// All cells of the top `rows` rows, row-major.
CellSet top_rows(int order, int rows);

/// `from` minus `remove`, preserving order.
CellSet difference(const CellSet& from, const CellSet& remove);

}  // namespace pls
