#pragma once

// Random instance generators. Everything starts from a cyclic square
// scrambled by random row, column and symbol permutations.

#include <random>

#include "pls/core.hpp"

namespace pls {

using Rng = std::mt19937_64;

PartialLatinSquare random_latin_square(int order, Rng& rng);

/// Upper-left rows × cols block of a random complete square (completable).
PartialLatinSquare gen_rectangle(int order, int rows, int cols, Rng& rng);

/// rows × cols block filled cyclically from a random cols-subset of the
/// symbols, rows and columns shuffled. Needs rows ≤ cols < order; violates
/// Ryser's condition whenever rows + cols > order.
PartialLatinSquare gen_short_rectangle(int order, int rows, int cols, Rng& rng);

/// Erases at most one cell per column inside the rows × cols block, each
/// column independently with probability `hole_rate`. Retries until the
/// shape is still recognised as a rows × cols rectangle with holes.
PartialLatinSquare punch_holes(const PartialLatinSquare& rect, int rows, int cols, double hole_rate,
                               Rng& rng);

/// Random complete square with the upper-left rows × cols block erased.
PartialLatinSquare gen_lshape(int order, int rows, int cols, Rng& rng);

}  // namespace pls
