#pragma once

// Ryser's condition, constructive rectangle completion and framework
// realization. Both constructions run the same two edge-colouring phases:
// first the right-hand part of the top rows, then the bottom rows.

#include <vector>

#include "pls/core.hpp"

namespace pls {

struct RyserReport {
  bool completable = true;
  int rows = 0;
  int cols = 0;
  /// deficits[σ] = max(0, r + s − n − ν(σ)); index 0 unused.
  std::vector<int> deficits;
};

/// Throws Errc::wrong_shape unless P is an upper-left rectangle.
RyserReport check_ryser(const PartialLatinSquare& p);

/// Complete latin square extending a rectangle. Throws Errc::wrong_shape or
/// Errc::ryser_violated.
PartialLatinSquare complete_rectangle(const PartialLatinSquare& p);

/// Whether HI(H) holds for H = the top r rows. Throws std::logic_error if the
/// answer disagrees with check_ryser.
bool check_hi_equivalence(const PartialLatinSquare& p);

/// L-shaped square of order n whose first r rows miss exactly the row lists
/// and first s columns miss exactly the column lists. Throws
/// Errc::not_balanced or Errc::order_too_small.
PartialLatinSquare realize_framework(const Framework& f, int order);

}  // namespace pls
