#include "pls/ryser.hpp"

#include <algorithm>
#include <stdexcept>

#include "pls/graphs.hpp"
#include "pls/hall.hpp"

namespace pls {

RyserReport check_ryser(const PartialLatinSquare& p) {
  const auto rect = as_rectangle(p);
  if (!rect) throw Error(Errc::wrong_shape, "not an upper-left rectangle");
  const int n = p.order();
  RyserReport rep;
  rep.rows = rect->rows;
  rep.cols = rect->cols;
  rep.deficits.assign(static_cast<std::size_t>(n) + 1, 0);
  const std::vector<int> counts = symbol_counts(p);
  for (int s = 1; s <= n; ++s) {
    const int d = std::max(0, rect->rows + rect->cols - n - counts[static_cast<std::size_t>(s)]);
    rep.deficits[static_cast<std::size_t>(s)] = d;
    if (d > 0) rep.completable = false;
  }
  return rep;
}

namespace {

// Fill columns s..n-1 of rows 0..r-1. `wanted[i]` lists the symbols row i
// still needs; each symbol may be wanted by at most n - s rows.
void fill_right(PartialLatinSquare& q, int rows, int cols,
                const std::vector<std::vector<int>>& wanted) {
  const int n = q.order();
  const int colors = n - cols;
  if (rows == 0 || colors == 0) return;
  BipartiteGraph g1(n, rows);  // symbols x rows
  for (int i = 0; i < rows; ++i)
    for (int s : wanted[static_cast<std::size_t>(i)]) g1.add_edge(s - 1, i);
  if (g1.max_degree() != colors)
    throw std::logic_error("first colouring graph has maximum degree " +
                           std::to_string(g1.max_degree()) + ", expected " +
                           std::to_string(colors));
  const std::vector<int> color = edge_color(g1, colors);
  for (int e = 0; e < g1.edge_count(); ++e) {
    const auto [s, i] = g1.edges()[static_cast<std::size_t>(e)];
    q.set(i, cols + color[static_cast<std::size_t>(e)] - 1, s + 1);
  }
}

// Fill rows r..n-1. `wanted[j]` lists the symbols column j still needs; the
// resulting column/symbol graph must be (n - r)-regular.
void fill_bottom(PartialLatinSquare& q, int rows, const std::vector<std::vector<int>>& wanted) {
  const int n = q.order();
  const int colors = n - rows;
  if (colors == 0) return;
  BipartiteGraph g2(n, n);  // columns x symbols
  for (int j = 0; j < n; ++j)
    for (int s : wanted[static_cast<std::size_t>(j)]) g2.add_edge(j, s - 1);
  for (int v = 0; v < n; ++v)
    if (g2.degree_a(v) != colors || g2.degree_b(v) != colors)
      throw std::logic_error("second colouring graph is not regular");
  const std::vector<int> color = edge_color(g2, colors);
  for (int e = 0; e < g2.edge_count(); ++e) {
    const auto [j, s] = g2.edges()[static_cast<std::size_t>(e)];
    q.set(rows + color[static_cast<std::size_t>(e)] - 1, j, s + 1);
  }
}

std::vector<int> missing_in_top(const PartialLatinSquare& q, int col, int rows) {
  std::vector<bool> present(static_cast<std::size_t>(q.order()) + 1, false);
  for (int i = 0; i < rows; ++i) present[static_cast<std::size_t>(q.at(i, col))] = true;
  std::vector<int> out;
  for (int s = 1; s <= q.order(); ++s)
    if (!present[static_cast<std::size_t>(s)]) out.push_back(s);
  return out;
}

}  // namespace

PartialLatinSquare complete_rectangle(const PartialLatinSquare& p) {
  const RyserReport rep = check_ryser(p);
  if (!rep.completable) {
    for (int s = 1; s <= p.order(); ++s)
      if (rep.deficits[static_cast<std::size_t>(s)] > 0)
        throw Error(Errc::ryser_violated,
                    "symbol " + std::to_string(s) + " short by " +
                        std::to_string(rep.deficits[static_cast<std::size_t>(s)]));
  }
  const int n = p.order();
  const int r = rep.rows;
  const int s = rep.cols;
  PartialLatinSquare q = p;

  std::vector<std::vector<int>> need_row(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    const SymbolSet m = q.missing_from_row(i);
    need_row[static_cast<std::size_t>(i)].assign(m.begin(), m.end());
  }
  fill_right(q, r, s, need_row);

  std::vector<std::vector<int>> need_col(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) need_col[static_cast<std::size_t>(j)] = missing_in_top(q, j, r);
  fill_bottom(q, r, need_col);

  if (!extends(q, p)) throw std::logic_error("rectangle completion does not extend its input");
  return q;
}

bool check_hi_equivalence(const PartialLatinSquare& p) {
  const RyserReport rep = check_ryser(p);
  const bool hi =
      check_hi(p, top_rows(p.order(), rep.rows)).verdict == Verdict::satisfied;
  if (hi != rep.completable)
    throw std::logic_error("HI(H) and Ryser's condition disagree on a rectangle");
  return hi;
}

PartialLatinSquare realize_framework(const Framework& f, int order) {
  require_well_formed(f);
  const BalanceReport bal = check_balance(f);
  if (!bal.balanced()) {
    std::string what = !bal.row_sizes   ? "row list sizes differ from s"
                       : !bal.col_sizes ? "column list sizes differ from r"
                                        : "symbol counts differ between row and column lists";
    throw Error(Errc::not_balanced, what);
  }
  const int r = f.rows;
  const int s = f.cols;
  const int n = order;
  if (n < std::max(f.symbols, r + s) || n < 1)
    throw Error(Errc::order_too_small, "order " + std::to_string(n) + " below max{t, r+s} = " +
                                           std::to_string(std::max(f.symbols, r + s)));

  PartialLatinSquare q(n);

  std::vector<std::vector<int>> need_row(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    for (int sym = 1; sym <= n; ++sym)
      if (!f.row_lists[static_cast<std::size_t>(i)].contains(sym))
        need_row[static_cast<std::size_t>(i)].push_back(sym);
  fill_right(q, r, s, need_row);

  std::vector<std::vector<int>> need_col(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (j < s) {
      for (int sym = 1; sym <= n; ++sym)
        if (!f.col_lists[static_cast<std::size_t>(j)].contains(sym))
          need_col[static_cast<std::size_t>(j)].push_back(sym);
    } else {
      need_col[static_cast<std::size_t>(j)] = missing_in_top(q, j, r);
    }
  }
  fill_bottom(q, r, need_col);
  return q;
}

}  // namespace pls
