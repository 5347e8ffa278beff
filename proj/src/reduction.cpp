#include "pls/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "pls/ryser.hpp"
#include "pls/solver.hpp"

namespace pls {

void validate_hypergraph(const Hypergraph& h) {
  const int u = h.vertices;
  if (u < 0) throw Error(Errc::invalid_argument, "negative vertex count");
  std::vector<int> degree(static_cast<std::size_t>(u), 0);
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const auto& edge = h.edges[e];
    for (int v : edge)
      if (v < 0 || v >= u)
        throw Error(Errc::invalid_argument,
                    "edge " + std::to_string(e) + " has vertex " + std::to_string(v) + " out of range");
    std::vector<int> sorted = edge;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != 4 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(Errc::not_uniform, "edge " + std::to_string(e) + " does not have 4 distinct vertices");
    for (int v : edge) ++degree[static_cast<std::size_t>(v)];
  }
  for (int v = 0; v < u; ++v)
    if (degree[static_cast<std::size_t>(v)] != 4)
      throw Error(Errc::not_regular, "vertex " + std::to_string(v) + " lies in " +
                                         std::to_string(degree[static_cast<std::size_t>(v)]) +
                                         " edges");
  if (static_cast<int>(h.edges.size()) != u)
    throw Error(Errc::not_regular, "edge count differs from vertex count");
}

bool is_valid_hypergraph(const Hypergraph& h) {
  try {
    validate_hypergraph(h);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_two_in_four(const Hypergraph& h, const TwoColoring& c) {
  if (static_cast<int>(c.size()) != h.vertices) return false;
  return std::all_of(h.edges.begin(), h.edges.end(), [&](const std::vector<int>& e) {
    return std::count_if(e.begin(), e.end(), [&](int v) {
             return c[static_cast<std::size_t>(v)] == Color::red;
           }) == 2;
  });
}

namespace {

class TwoInFour {
 public:
  explicit TwoInFour(const Hypergraph& h)
      : h_(h),
        incident_(static_cast<std::size_t>(h.vertices)),
        red_(h.edges.size(), 0),
        blue_(h.edges.size(), 0),
        color_(static_cast<std::size_t>(h.vertices), Color::red) {
    for (std::size_t e = 0; e < h.edges.size(); ++e)
      for (int v : h.edges[e]) incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
  }

  bool run(int v = 0) {
    if (v == h_.vertices) return true;
    for (Color c : {Color::red, Color::blue}) {
      auto& count = c == Color::red ? red_ : blue_;
      bool ok = true;
      for (int e : incident_[static_cast<std::size_t>(v)])
        if (++count[static_cast<std::size_t>(e)] > 2) ok = false;
      color_[static_cast<std::size_t>(v)] = c;
      if (ok && run(v + 1)) return true;
      for (int e : incident_[static_cast<std::size_t>(v)]) --count[static_cast<std::size_t>(e)];
    }
    return false;
  }

  const TwoColoring& coloring() const { return color_; }

 private:
  const Hypergraph& h_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> red_;
  std::vector<int> blue_;
  TwoColoring color_;
};

}  // namespace

std::optional<TwoColoring> decide_2in4(const Hypergraph& h) {
  validate_hypergraph(h);
  TwoInFour search(h);
  if (!search.run()) return std::nullopt;
  return search.coloring();
}

// ---------------------------------------------------------------------------

GadgetSymbols::GadgetSymbols(const Hypergraph& h)
    : u_(h.vertices),
      slot_(static_cast<std::size_t>(u_ * u_), -1),
      c_index_(static_cast<std::size_t>(u_ * u_), -1),
      edges_of_(static_cast<std::size_t>(u_)) {
  validate_hypergraph(h);
  std::vector<int> filled(static_cast<std::size_t>(u_), 0);
  for (int j = 0; j < u_; ++j)
    for (int i : h.edges[static_cast<std::size_t>(j)]) {
      int& k = filled[static_cast<std::size_t>(i)];
      slot_[static_cast<std::size_t>(i * u_ + j)] = k;
      edges_of_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = j;
      ++k;
    }
  int next = 0;
  for (int i = 0; i < u_; ++i)
    for (int j = 0; j < u_; ++j)
      if (slot(i, j) < 0) c_index_[static_cast<std::size_t>(i * u_ + j)] = next++;
}

int GadgetSymbols::c(int vertex, int edge, int k) const {
  const int idx = c_index_[static_cast<std::size_t>(vertex * u_ + edge)];
  if (idx < 0) throw std::logic_error("c symbol requested for an incident vertex/edge pair");
  return 28 * u_ + 1 + 4 * idx + k;
}

SymbolClass GadgetSymbols::class_of(int symbol) const {
  if (symbol < 1 || symbol > order()) throw Error(Errc::symbol_out_of_range, "not a gadget symbol");
  if (symbol <= 4 * u_) return SymbolClass::a;
  if (symbol <= 28 * u_) return SymbolClass::b;
  return SymbolClass::c;
}

namespace {

// One admissible entry of an incident block, before naming symbols.
struct Token {
  bool is_a;
  int k;  // a: index 0..3; b: slot
  int l;  // b only
};

// Entry (y, x) of the 4 × 4 block for an edge in slot `k`.
std::vector<Token> block_tokens(int y, int x, int k) {
  const int prev = (k + 3) % 4;
  if (y == 0) return {{true, 0, 0}, {true, 1, 0}, {false, k, x < 2 ? 0 : 1}};
  if (y == 3) return {{true, 2, 0}, {true, 3, 0}, {false, k, x < 2 ? 2 : 3}};
  const int lo = y == 1 ? 0 : 2;
  switch (x) {
    case 0: return {{false, prev, 5}, {false, k, lo}};
    case 1: return {{false, k, 4}, {false, k, lo}};
    case 2: return {{false, k, 4}, {false, k, lo + 1}};
    default: return {{false, k, 5}, {false, k, lo + 1}};
  }
}

}  // namespace

AdmissibleArray build_gadget_array(const Hypergraph& h) {
  const GadgetSymbols sym(h);
  const int u = sym.u();
  AdmissibleArray m(4 * u, 4 * u);
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j) {
      const int k = sym.slot(i, j);
      for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) {
          SymbolSet& entry = m.at(4 * i + y, 4 * j + x);
          if (k < 0) {
            for (int q = 0; q < 4; ++q) entry.insert(sym.c(i, j, q));
            continue;
          }
          for (const Token& t : block_tokens(y, x, k))
            entry.insert(t.is_a ? sym.a(j, t.k) : sym.b(i, t.k, t.l));
        }
    }
  return m;
}

Framework build_framework(const AdmissibleArray& m, int symbols) {
  Framework f;
  f.rows = m.rows();
  f.cols = m.cols();
  f.symbols = symbols;
  f.row_lists.resize(static_cast<std::size_t>(f.rows));
  f.col_lists.resize(static_cast<std::size_t>(f.cols));
  for (int i = 0; i < f.rows; ++i)
    for (int j = 0; j < f.cols; ++j) {
      f.row_lists[static_cast<std::size_t>(i)].insert(m.at(i, j).begin(), m.at(i, j).end());
      f.col_lists[static_cast<std::size_t>(j)].insert(m.at(i, j).begin(), m.at(i, j).end());
    }
  if (admissible_array(f) != m)
    throw Error(Errc::intersection_mismatch, "row and column lists do not reproduce the array");
  if (!is_balanced(f)) throw Error(Errc::not_balanced, "gadget framework is not balanced");
  return f;
}

PartialLatinSquare reduce_to_pls(const Hypergraph& h) {
  const GadgetSymbols sym(h);
  const Framework f = build_framework(build_gadget_array(h), sym.order());
  return realize_framework(f, sym.order());
}

ReductionReport reduction_report(const Hypergraph& h, const PartialLatinSquare& q) {
  const GadgetSymbols sym(h);
  ReductionReport rep;
  rep.u = sym.u();
  rep.order = q.order();
  rep.a_count = sym.a_count();
  rep.b_count = sym.b_count();
  rep.c_count = sym.c_count();
  rep.sufficient = check_sufficient(q).verdict;
  const auto sums = sufficient_sums(q);
  rep.empty_cells = static_cast<int>(sums.size());
  rep.every_sum_is_one =
      std::all_of(sums.begin(), sums.end(), [](const CellSum& cs) { return cs.sum == 1; });
  for (const CellSum& cs : sums) {
    int na = 0, nb = 0, nc = 0;
    for (int s : q.support(cs.cell)) {
      switch (sym.class_of(s)) {
        case SymbolClass::a: ++na; break;
        case SymbolClass::b: ++nb; break;
        case SymbolClass::c: ++nc; break;
      }
    }
    if (na == 0 && nb == 2 && nc == 0) ++rep.pattern_counts[0];
    else if (na == 2 && nb == 1 && nc == 0) ++rep.pattern_counts[1];
    else if (na == 0 && nb == 0 && nc == 4) ++rep.pattern_counts[2];
    else ++rep.other_patterns;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Single-vertex strip: 4 rows, 16 columns, slot k in columns 4k..4k+3 with
// its own a symbols. Local numbering: a = 1 + 4k + m, b = 17 + 6k + l.

namespace {

constexpr int kStripCols = 16;
constexpr int kStripSymbols = 40;

int strip_a(int slot, int m) { return 1 + 4 * slot + m; }
int strip_b(int slot, int l) { return 17 + 6 * slot + l; }

GridProblem strip_problem() {
  GridProblem g(4, kStripCols, kStripSymbols);
  for (int k = 0; k < 4; ++k)
    for (int y = 0; y < 4; ++y)
      for (int x = 0; x < 4; ++x)
        for (const Token& t : block_tokens(y, x, k)) {
          const int s = t.is_a ? strip_a(k, t.k) : strip_b(t.k, t.l);
          g.domain(y, 4 * k + x).set(static_cast<std::size_t>(s - 1));
        }
  // Rows use every listed symbol. A column only has to use its b symbols:
  // its a symbols may sit in another vertex's strip.
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < kStripCols; ++x) g.row_required[static_cast<std::size_t>(y)] |= g.domain(y, x);
  for (int x = 0; x < kStripCols; ++x)
    for (int y = 0; y < 4; ++y) {
      auto d = g.domain(y, x);
      for (int s = 1; s <= 16; ++s) d.reset(static_cast<std::size_t>(s - 1));
      g.col_required[static_cast<std::size_t>(x)] |= d;
    }
  return g;
}

StripPattern pattern_of(const SymbolGrid& grid) {
  StripPattern p{};
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < kStripCols; ++x) {
      const int s = grid.at(y, x);
      p[static_cast<std::size_t>(y * kStripCols + x)] = s >= 17 ? s - 17 : -1;
    }
  return p;
}

StripPattern derive_pattern(Color c) {
  GridProblem g = strip_problem();
  auto& forced = g.domain(0, c == Color::red ? 0 : 1);
  forced.reset();
  forced.set(static_cast<std::size_t>(strip_b(0, 0) - 1));
  const GridResult r = solve_grid(g);
  if (r.status != SolveStatus::found)
    throw std::logic_error("single-vertex strip has no latinization for a forced b position");
  return pattern_of(r.grid);
}

}  // namespace

const StripPattern& strip_pattern(Color c) {
  static const StripPattern red = derive_pattern(Color::red);
  static const StripPattern blue = derive_pattern(Color::blue);
  return c == Color::red ? red : blue;
}

std::vector<StripPattern> enumerate_strip_patterns() {
  std::vector<StripPattern> out;
  for (const SymbolGrid& g : collect_solutions(strip_problem(), 1'000'000)) {
    const StripPattern p = pattern_of(g);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------

SymbolGrid coloring_to_latinization(const Hypergraph& h, const TwoColoring& c) {
  const GadgetSymbols sym(h);
  if (!is_two_in_four(h, c)) throw Error(Errc::invalid_coloring, "not a 2-in-4 colouring");
  const int u = sym.u();
  SymbolGrid grid(4 * u, 4 * u);

  for (int i = 0; i < u; ++i) {
    const StripPattern& pat = strip_pattern(c[static_cast<std::size_t>(i)]);
    for (int k = 0; k < 4; ++k) {
      const int j = sym.edge_at(i, k);
      for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) {
          const int v = pat[static_cast<std::size_t>(y * kStripCols + 4 * k + x)];
          if (v >= 0) grid.at(4 * i + y, 4 * j + x) = sym.b(i, v / 6, v % 6);
        }
    }
    for (int j = 0; j < u; ++j)
      if (sym.slot(i, j) < 0)
        for (int y = 0; y < 4; ++y)
          for (int x = 0; x < 4; ++x) grid.at(4 * i + y, 4 * j + x) = sym.c(i, j, (x + y) % 4);
  }

  // a symbols, one edge block column at a time: in each vertex's top (bottom)
  // row two cells remain, taking a(j,0), a(j,1) (a(j,2), a(j,3)) in one of
  // two orders. Try all 2^4 orders per half.
  for (int j = 0; j < u; ++j) {
    const auto& verts = h.edges[static_cast<std::size_t>(j)];
    for (int half = 0; half < 2; ++half) {
      const int y = half == 0 ? 0 : 3;
      std::array<std::array<int, 2>, 4> free{};
      for (int q = 0; q < 4; ++q) {
        int n_free = 0;
        for (int x = 0; x < 4; ++x)
          if (grid.at(4 * verts[static_cast<std::size_t>(q)] + y, 4 * j + x) == kEmpty) {
            if (n_free == 2) throw std::logic_error("strip pattern leaves too many a cells");
            free[static_cast<std::size_t>(q)][static_cast<std::size_t>(n_free++)] = x;
          }
        if (n_free != 2) throw std::logic_error("strip pattern leaves too few a cells");
      }
      const int lo = sym.a(j, 2 * half);
      const int hi = sym.a(j, 2 * half + 1);
      bool placed = false;
      for (int mask = 0; mask < 16 && !placed; ++mask) {
        std::array<int, 4> lo_cols{}, hi_cols{};
        for (int q = 0; q < 4; ++q) {
          const bool swap = (mask >> q) & 1;
          lo_cols[static_cast<std::size_t>(q)] = free[static_cast<std::size_t>(q)][swap ? 1 : 0];
          hi_cols[static_cast<std::size_t>(q)] = free[static_cast<std::size_t>(q)][swap ? 0 : 1];
        }
        // every column of the block takes lo once and hi once
        std::array<int, 4> lo_hits{}, hi_hits{};
        for (int q = 0; q < 4; ++q) {
          ++lo_hits[static_cast<std::size_t>(lo_cols[static_cast<std::size_t>(q)])];
          ++hi_hits[static_cast<std::size_t>(hi_cols[static_cast<std::size_t>(q)])];
        }
        if (std::all_of(lo_hits.begin(), lo_hits.end(), [](int v) { return v == 1; }) &&
            std::all_of(hi_hits.begin(), hi_hits.end(), [](int v) { return v == 1; })) {
          for (int q = 0; q < 4; ++q) {
            const int row = 4 * verts[static_cast<std::size_t>(q)] + y;
            grid.at(row, 4 * j + lo_cols[static_cast<std::size_t>(q)]) = lo;
            grid.at(row, 4 * j + hi_cols[static_cast<std::size_t>(q)]) = hi;
          }
          placed = true;
        }
      }
      if (!placed)
        throw Error(Errc::invalid_coloring, "edge " + std::to_string(j) + " admits no a placement");
    }
  }

  const Framework f = build_framework(build_gadget_array(h), sym.order());
  if (!is_latinization(f, grid)) throw std::logic_error("colouring produced an invalid latinization");
  return grid;
}

TwoColoring extract_coloring(const Hypergraph& h, const SymbolGrid& latinization) {
  const GadgetSymbols sym(h);
  const int u = sym.u();
  if (latinization.rows != 4 * u || latinization.cols != 4 * u)
    throw Error(Errc::unrecognized_position, "latinization has the wrong dimensions");
  TwoColoring out(static_cast<std::size_t>(u), Color::red);
  for (int i = 0; i < u; ++i) {
    StripPattern seen{};
    for (int k = 0; k < 4; ++k) {
      const int j = sym.edge_at(i, k);
      for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) {
          const int s = latinization.at(4 * i + y, 4 * j + x);
          const int base = sym.b(i, 0, 0);
          seen[static_cast<std::size_t>(y * kStripCols + 4 * k + x)] =
              s >= base && s < base + 24 ? s - base : -1;
        }
    }
    if (seen == strip_pattern(Color::red)) out[static_cast<std::size_t>(i)] = Color::red;
    else if (seen == strip_pattern(Color::blue)) out[static_cast<std::size_t>(i)] = Color::blue;
    else throw Error(Errc::unrecognized_position, "vertex " + std::to_string(i) + " has b symbols in neither position");
  }
  if (!is_two_in_four(h, out))
    throw Error(Errc::unrecognized_position, "recovered colouring is not 2-in-4");
  return out;
}

PartialLatinSquare epsilon_variant(const PartialLatinSquare& q, EpsilonMode mode) {
  if (mode == EpsilonMode::dense) return q;
  const auto shape = as_lshape(q);
  if (!shape) throw Error(Errc::not_l_shaped, "sparse variant needs an L-shaped square");
  PartialLatinSquare out = q;
  for (int i = shape->rows; i < q.order(); ++i)
    for (int j = shape->cols; j < q.order(); ++j) out.clear({i, j});
  return out;
}

}  // namespace pls
