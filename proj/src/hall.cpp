#include "pls/hall.hpp"

#include <algorithm>
#include <numeric>

#include "pls/graphs.hpp"

namespace pls {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(HallMethod m) noexcept {
  switch (m) {
    case HallMethod::exhaustive: return "exhaustive";
    case HallMethod::sufficient_condition: return "sufficient-condition";
    case HallMethod::single_inequality: return "single-inequality";
  }
  return "?";
}

namespace {

CellSet sorted_unique(CellSet cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

void require_in_range(const PartialLatinSquare& p, const CellSet& cells) {
  const int n = p.order();
  for (const Cell& c : cells)
    if (c.row < 0 || c.row >= n || c.col < 0 || c.col >= n)
      throw Error(Errc::invalid_argument, "cell " + to_string(c) + " outside the square");
}

// Row/column matching restricted to a handful of cells. Reused across the
// exhaustive scan so that no allocation happens per subset.
class SmallMatcher {
 public:
  explicit SmallMatcher(int n)
      : adj_(static_cast<std::size_t>(n)),
        mate_col_(static_cast<std::size_t>(n), -1),
        seen_(static_cast<std::size_t>(n), 0) {}

  int run(const std::vector<Cell>& cells) {
    rows_.clear();
    for (const Cell& c : cells) {
      auto& a = adj_[static_cast<std::size_t>(c.row)];
      if (a.empty()) rows_.push_back(c.row);
      a.push_back(c.col);
    }
    int size = 0;
    for (int r : rows_) {
      ++stamp_;
      if (augment(r)) ++size;
    }
    for (int r : rows_) {
      for (int c : adj_[static_cast<std::size_t>(r)]) mate_col_[static_cast<std::size_t>(c)] = -1;
      adj_[static_cast<std::size_t>(r)].clear();
    }
    return size;
  }

 private:
  bool augment(int r) {
    for (int c : adj_[static_cast<std::size_t>(r)]) {
      auto& s = seen_[static_cast<std::size_t>(c)];
      if (s == stamp_) continue;
      s = stamp_;
      int& m = mate_col_[static_cast<std::size_t>(c)];
      if (m == -1 || augment(m)) {
        m = r;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_col_;
  std::vector<unsigned> seen_;
  std::vector<int> rows_;
  unsigned stamp_ = 0;
};

}  // namespace

int alpha(const PartialLatinSquare& p, int symbol, const CellSet& cells) {
  const int n = p.order();
  if (symbol < 1 || symbol > n)
    throw Error(Errc::symbol_out_of_range, "symbol " + std::to_string(symbol) + " outside 1.." +
                                               std::to_string(n));
  require_in_range(p, cells);
  BipartiteGraph g(n, n);
  for (const Cell& c : sorted_unique(cells))
    if (p.supports(c, symbol)) g.add_edge(c.row, c.col);
  return max_matching(g).size();
}

HallReport check_hi(const PartialLatinSquare& p, const CellSet& cells) {
  const CellSet t = sorted_unique(cells);
  HallReport rep;
  rep.method = HallMethod::single_inequality;
  rep.set_size = static_cast<std::int64_t>(t.size());
  for (int s = 1; s <= p.order(); ++s) rep.alpha_sum += alpha(p, s, t);
  rep.subsets_checked = 1;
  if (rep.alpha_sum < rep.set_size) {
    rep.verdict = Verdict::violated;
    rep.certificate = t;
  }
  return rep;
}

HallReport check_hc_exhaustive(const PartialLatinSquare& p, int limit) {
  const int n = p.order();
  const CellSet empty = p.empty_cells();
  const int m = static_cast<int>(empty.size());
  if (m > limit)
    throw Error(Errc::too_many_empty_cells, std::to_string(m) + " empty cells exceed the limit of " +
                                                std::to_string(limit));

  std::vector<std::vector<int>> supports(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const SymbolSet s = p.support(empty[static_cast<std::size_t>(i)]);
    supports[static_cast<std::size_t>(i)].assign(s.begin(), s.end());
  }

  HallReport rep;
  rep.method = HallMethod::exhaustive;
  SmallMatcher matcher(n);
  std::vector<std::vector<Cell>> by_symbol(static_cast<std::size_t>(n) + 1);
  std::vector<int> touched;
  std::vector<int> pick;

  for (int k = 1; k <= m; ++k) {
    pick.resize(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      ++rep.subsets_checked;
      touched.clear();
      for (int idx : pick)
        for (int s : supports[static_cast<std::size_t>(idx)]) {
          auto& bucket = by_symbol[static_cast<std::size_t>(s)];
          if (bucket.empty()) touched.push_back(s);
          bucket.push_back(empty[static_cast<std::size_t>(idx)]);
        }
      std::int64_t sum = 0;
      for (int s : touched) {
        auto& bucket = by_symbol[static_cast<std::size_t>(s)];
        sum += matcher.run(bucket);
        bucket.clear();
      }
      if (sum < k) {
        rep.verdict = Verdict::violated;
        rep.alpha_sum = sum;
        rep.set_size = k;
        CellSet cert;
        for (int idx : pick) cert.push_back(empty[static_cast<std::size_t>(idx)]);
        rep.certificate = std::move(cert);
        return rep;
      }

      // next k-combination of 0..m-1 in lexicographic order
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  rep.verdict = Verdict::satisfied;
  return rep;
}

std::vector<CellSum> sufficient_sums(const PartialLatinSquare& p) {
  const int n = p.order();
  const std::vector<int> counts = symbol_counts(p);
  std::vector<CellSum> out;
  for (const Cell& b : p.empty_cells()) {
    Rational sum = 0;
    for (int s : p.support(b)) sum += Rational(1, n - counts[static_cast<std::size_t>(s)]);
    out.push_back({b, sum});
  }
  return out;
}

HallReport check_sufficient(const PartialLatinSquare& p) {
  HallReport rep;
  rep.method = HallMethod::sufficient_condition;
  rep.verdict = Verdict::satisfied;
  for (const CellSum& cs : sufficient_sums(p)) {
    ++rep.subsets_checked;
    if (cs.sum < 1) {
      rep.verdict = Verdict::inconclusive;
      rep.certificate = CellSet{cs.cell};
      rep.set_size = 1;
      break;
    }
  }
  return rep;
}

int alpha_closed_rectangle(const PartialLatinSquare& p, int symbol) {
  const auto rect = as_rectangle(p);
  if (!rect) throw Error(Errc::wrong_shape, "not an upper-left rectangle");
  const int n = p.order();
  return std::min(rect->rows, nu(p, symbol) + n - rect->cols);
}

int alpha_closed_holes(const PartialLatinSquare& p, int symbol, const CellSet& excluded) {
  const auto shape = as_rectangle_with_holes(p);
  if (!shape) throw Error(Errc::wrong_shape, "not a rectangle with column holes");
  const CellSet j = sorted_unique(excluded);
  for (const Cell& c : j)
    if (!std::binary_search(shape->holes.begin(), shape->holes.end(), c))
      throw Error(Errc::not_a_subset, to_string(c) + " is not a hole");

  const int n = p.order();
  std::vector<bool> row_hit(static_cast<std::size_t>(n), false);
  for (const Cell& h : shape->holes)
    if (!std::binary_search(j.begin(), j.end(), h) && p.supports(h, symbol))
      row_hit[static_cast<std::size_t>(h.row)] = true;
  const int rho = static_cast<int>(std::count(row_hit.begin(), row_hit.end(), true));
  return std::min(shape->rows, nu(p, symbol) + rho + n - shape->cols);
}

CellSet top_rows(int order, int rows) {
  CellSet out;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < order; ++j) out.push_back({i, j});
  return out;
}

CellSet difference(const CellSet& from, const CellSet& remove) {
  const CellSet drop = sorted_unique(remove);
  CellSet out;
  for (const Cell& c : from)
    if (!std::binary_search(drop.begin(), drop.end(), c)) out.push_back(c);
  return out;
}

}  // namespace pls
