#include "pls/generate.hpp"

#include <algorithm>
#include <numeric>

namespace pls {

namespace {

std::vector<int> permutation(int n, Rng& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

void check_dims(int order, int rows, int cols) {
  if (order < 1 || rows < 0 || cols < 0 || rows > order || cols > order)
    throw Error(Errc::invalid_argument, "block " + std::to_string(rows) + "x" +
                                            std::to_string(cols) + " does not fit order " +
                                            std::to_string(order));
}

}  // namespace

PartialLatinSquare random_latin_square(int order, Rng& rng) {
  if (order < 1) throw Error(Errc::invalid_argument, "order must be positive");
  const auto rows = permutation(order, rng);
  const auto cols = permutation(order, rng);
  const auto syms = permutation(order, rng);
  PartialLatinSquare p(order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      p.set(i, j,
            syms[static_cast<std::size_t>((rows[static_cast<std::size_t>(i)] +
                                           cols[static_cast<std::size_t>(j)]) %
                                          order)] +
                1);
  return p;
}

PartialLatinSquare gen_rectangle(int order, int rows, int cols, Rng& rng) {
  check_dims(order, rows, cols);
  const PartialLatinSquare full = random_latin_square(order, rng);
  PartialLatinSquare p(order);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) p.set(i, j, full.at(i, j));
  return p;
}

PartialLatinSquare gen_short_rectangle(int order, int rows, int cols, Rng& rng) {
  check_dims(order, rows, cols);
  if (rows > cols || cols >= order)
    throw Error(Errc::invalid_argument, "short rectangle needs rows <= cols < order");
  auto syms = permutation(order, rng);
  syms.resize(static_cast<std::size_t>(cols));
  const auto rp = permutation(rows, rng);
  const auto cp = permutation(cols, rng);
  PartialLatinSquare p(order);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      p.set(i, j,
            syms[static_cast<std::size_t>((rp[static_cast<std::size_t>(i)] +
                                           cp[static_cast<std::size_t>(j)]) %
                                          cols)] +
                1);
  return p;
}

PartialLatinSquare punch_holes(const PartialLatinSquare& rect, int rows, int cols, double hole_rate,
                               Rng& rng) {
  std::bernoulli_distribution hit(hole_rate);
  std::uniform_int_distribution<int> pick_row(0, std::max(rows - 1, 0));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PartialLatinSquare p = rect;
    for (int j = 0; j < cols; ++j)
      if (rows > 0 && hit(rng)) p.clear({pick_row(rng), j});
    const auto shape = as_rectangle_with_holes(p);
    if (shape && shape->rows == rows && shape->cols == cols) return p;
  }
  return rect;
}

PartialLatinSquare gen_lshape(int order, int rows, int cols, Rng& rng) {
  check_dims(order, rows, cols);
  PartialLatinSquare p = random_latin_square(order, rng);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) p.clear({i, j});
  return p;
}

}  // namespace pls
