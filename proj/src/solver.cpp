#include "pls/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace pls {

const char* to_string(SolveStatus s) noexcept {
  switch (s) {
    case SolveStatus::found: return "found";
    case SolveStatus::none: return "none";
    case SolveStatus::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

GridProblem::GridProblem(int r, int c, int t)
    : rows(r),
      cols(c),
      symbols(t),
      domains(static_cast<std::size_t>(r * c), boost::dynamic_bitset<>(static_cast<std::size_t>(t))),
      row_required(static_cast<std::size_t>(r), boost::dynamic_bitset<>(static_cast<std::size_t>(t))),
      col_required(static_cast<std::size_t>(c), boost::dynamic_bitset<>(static_cast<std::size_t>(t))) {}

GridProblem grid_problem(const PartialLatinSquare& p) {
  const int n = p.order();
  GridProblem g(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int s : p.support({i, j})) g.domain(i, j).set(static_cast<std::size_t>(s - 1));
  for (auto& b : g.row_required) b.set();
  for (auto& b : g.col_required) b.set();
  return g;
}

GridProblem grid_problem(const Framework& f) {
  require_well_formed(f);
  GridProblem g(f.rows, f.cols, f.symbols);
  for (int i = 0; i < f.rows; ++i)
    for (int j = 0; j < f.cols; ++j)
      for (int s : f.row_lists[static_cast<std::size_t>(i)])
        if (f.col_lists[static_cast<std::size_t>(j)].contains(s))
          g.domain(i, j).set(static_cast<std::size_t>(s - 1));
  for (int i = 0; i < f.rows; ++i)
    if (static_cast<int>(f.row_lists[static_cast<std::size_t>(i)].size()) == f.cols)
      for (int s : f.row_lists[static_cast<std::size_t>(i)])
        g.row_required[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(s - 1));
  for (int j = 0; j < f.cols; ++j)
    if (static_cast<int>(f.col_lists[static_cast<std::size_t>(j)].size()) == f.rows)
      for (int s : f.col_lists[static_cast<std::size_t>(j)])
        g.col_required[static_cast<std::size_t>(j)].set(static_cast<std::size_t>(s - 1));
  return g;
}

namespace {

// Search state keeps every domain in one flat word array so that copying a
// state is a single allocation.
struct State {
  std::vector<int> value;  // 0 = open, else symbol
  std::vector<std::uint64_t> bits;
};

constexpr int kNoBit = -1;

class Search {
 public:
  Search(const GridProblem& p, std::uint64_t budget, std::uint64_t cap,
         std::vector<SymbolGrid>* sink = nullptr)
      : p_(p),
        words_(std::max<std::size_t>(1, (static_cast<std::size_t>(p.symbols) + 63) / 64)),
        budget_(budget),
        cap_(cap),
        sink_(sink) {
    row_req_ = to_words(p.row_required);
    col_req_ = to_words(p.col_required);
  }

  void run() {
    State s;
    const std::size_t cells = p_.domains.size();
    s.value.assign(cells, 0);
    s.bits.assign(cells * words_, 0);
    for (std::size_t c = 0; c < cells; ++c)
      for (std::size_t v = p_.domains[c].find_first(); v != boost::dynamic_bitset<>::npos;
           v = p_.domains[c].find_next(v))
        set_bit(s, static_cast<int>(c), static_cast<int>(v));
    bool ok = true;
    for (std::size_t c = 0; c < cells && ok; ++c) {
      const int k = count(s, static_cast<int>(c));
      if (k == 0) ok = false;
      else if (k == 1) ok = assign(s, static_cast<int>(c), first(s, static_cast<int>(c)));
    }
    if (ok) ok = settle(s);
    if (ok) dfs(std::move(s));
  }

  std::uint64_t nodes = 0;
  std::uint64_t found = 0;
  bool out_of_budget = false;
  std::optional<SymbolGrid> first_solution;

 private:
  std::vector<std::uint64_t> to_words(const std::vector<boost::dynamic_bitset<>>& sets) const {
    std::vector<std::uint64_t> out(sets.size() * words_, 0);
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t v = sets[i].find_first(); v != boost::dynamic_bitset<>::npos;
           v = sets[i].find_next(v))
        out[i * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    return out;
  }

  std::uint64_t* dom(State& s, int c) const { return s.bits.data() + static_cast<std::size_t>(c) * words_; }
  const std::uint64_t* dom(const State& s, int c) const {
    return s.bits.data() + static_cast<std::size_t>(c) * words_;
  }
  bool test(const State& s, int c, int v) const {
    return (dom(s, c)[v / 64] >> (v % 64)) & 1U;
  }
  void set_bit(State& s, int c, int v) const { dom(s, c)[v / 64] |= std::uint64_t{1} << (v % 64); }
  void reset_bit(State& s, int c, int v) const { dom(s, c)[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  int count(const State& s, int c) const {
    int k = 0;
    const std::uint64_t* d = dom(s, c);
    for (std::size_t w = 0; w < words_; ++w) k += __builtin_popcountll(d[w]);
    return k;
  }
  // Next set bit at or after `from` in a word array, or kNoBit.
  int next_in(const std::uint64_t* d, int from) const {
    std::size_t w = static_cast<std::size_t>(from) / 64;
    if (w >= words_) return kNoBit;
    std::uint64_t cur = d[w] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (cur) return static_cast<int>(w * 64) + __builtin_ctzll(cur);
      if (++w == words_) return kNoBit;
      cur = d[w];
    }
  }
  int first(const State& s, int c) const { return next_in(dom(s, c), 0); }

  bool stop() const { return out_of_budget || found >= cap_; }

  void dfs(State s) {
    if (stop()) return;
    if (nodes == budget_) {
      out_of_budget = true;
      return;
    }
    ++nodes;
    int best = -1;
    int best_count = 0;
    for (std::size_t c = 0; c < s.value.size(); ++c) {
      if (s.value[c] != 0) continue;
      const int k = count(s, static_cast<int>(c));
      if (best < 0 || k < best_count) {
        best_count = k;
        best = static_cast<int>(c);
        if (k <= 1) break;
      }
    }
    if (best < 0) {
      ++found;
      SymbolGrid g(p_.rows, p_.cols);
      for (std::size_t c = 0; c < s.value.size(); ++c) g.data[c] = s.value[c];
      if (sink_) sink_->push_back(g);
      if (!first_solution) first_solution = std::move(g);
      return;
    }
    const std::vector<std::uint64_t> options(dom(s, best), dom(s, best) + words_);
    for (int v = next_in(options.data(), 0); v != kNoBit; v = next_in(options.data(), v + 1)) {
      State next = s;
      if (assign(next, best, v) && settle(next)) dfs(std::move(next));
      if (stop()) return;
    }
  }

  // `v` is a 0-based symbol index; State::value stores v + 1.
  bool assign(State& s, int cell, int v) {
    queue_.clear();
    queue_.emplace_back(cell, v);
    while (!queue_.empty()) {
      const auto [c, sym] = queue_.back();
      queue_.pop_back();
      auto& slot = s.value[static_cast<std::size_t>(c)];
      if (slot != 0) {
        if (slot != sym + 1) return false;
        continue;
      }
      if (!test(s, c, sym)) return false;
      slot = sym + 1;
      std::fill(dom(s, c), dom(s, c) + words_, 0);
      set_bit(s, c, sym);
      const int i = c / p_.cols;
      const int j = c % p_.cols;
      auto prune = [&](int other) {
        if (other == c || !test(s, other, sym)) return true;
        reset_bit(s, other, sym);
        const int k = count(s, other);
        if (k == 0) return false;
        if (k == 1 && s.value[static_cast<std::size_t>(other)] == 0)
          queue_.emplace_back(other, first(s, other));
        return true;
      };
      for (int k = 0; k < p_.cols; ++k)
        if (!prune(i * p_.cols + k)) return false;
      for (int k = 0; k < p_.rows; ++k)
        if (!prune(k * p_.cols + j)) return false;
    }
    return true;
  }

  int line_cell(bool is_row, int idx, int k) const {
    return is_row ? idx * p_.cols + k : k * p_.cols + idx;
  }

  // Hidden singles on rows and columns with a required symbol set; repeats
  // until nothing changes, then checks every line can still be filled.
  bool settle(State& s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int line = 0; line < p_.rows + p_.cols; ++line) {
        const bool is_row = line < p_.rows;
        const int idx = is_row ? line : line - p_.rows;
        const std::uint64_t* req = (is_row ? row_req_.data() : col_req_.data()) +
                                   static_cast<std::size_t>(idx) * words_;
        const int len = is_row ? p_.cols : p_.rows;
        for (int sym = next_in(req, 0); sym != kNoBit; sym = next_in(req, sym + 1)) {
          int spot = -1;
          int spots = 0;
          bool placed = false;
          for (int k = 0; k < len && !placed; ++k) {
            const int c = line_cell(is_row, idx, k);
            if (s.value[static_cast<std::size_t>(c)] == sym + 1) placed = true;
            else if (s.value[static_cast<std::size_t>(c)] == 0 && test(s, c, sym)) {
              spot = c;
              ++spots;
            }
          }
          if (placed) continue;
          if (spots == 0) return false;
          if (spots == 1) {
            if (!assign(s, spot, sym)) return false;
            changed = true;
          }
        }
      }
    }
    return lines_feasible(s);
  }

  // Every open cell of a line needs its own symbol: a matching from open
  // cells into their candidates must cover all of them.
  bool lines_feasible(const State& s) {
    if (seen_.size() < static_cast<std::size_t>(p_.symbols)) {
      seen_.assign(static_cast<std::size_t>(p_.symbols), 0);
      owner_.assign(static_cast<std::size_t>(p_.symbols), -1);
    }
    for (int line = 0; line < p_.rows + p_.cols; ++line) {
      const bool is_row = line < p_.rows;
      const int idx = is_row ? line : line - p_.rows;
      const int len = is_row ? p_.cols : p_.rows;
      cells_.clear();
      for (int k = 0; k < len; ++k) {
        const int c = line_cell(is_row, idx, k);
        if (s.value[static_cast<std::size_t>(c)] == 0) cells_.push_back(c);
      }
      if (cells_.size() < 2) continue;
      bool ok = true;
      for (std::size_t i = 0; i < cells_.size() && ok; ++i) {
        ++round_;
        ok = augment(s, static_cast<int>(i));
      }
      for (int c : cells_)
        for (int v = first(s, c); v != kNoBit; v = next_in(dom(s, c), v + 1))
          owner_[static_cast<std::size_t>(v)] = -1;
      if (!ok) return false;
    }
    return true;
  }

  bool augment(const State& s, int i) {
    const std::uint64_t* d = dom(s, cells_[static_cast<std::size_t>(i)]);
    for (int v = next_in(d, 0); v != kNoBit; v = next_in(d, v + 1)) {
      auto& seen = seen_[static_cast<std::size_t>(v)];
      if (seen == round_) continue;
      seen = round_;
      int& o = owner_[static_cast<std::size_t>(v)];
      if (o == -1 || augment(s, o)) {
        o = i;
        return true;
      }
    }
    return false;
  }

  const GridProblem& p_;
  std::size_t words_;
  std::uint64_t budget_;
  std::uint64_t cap_;
  std::vector<SymbolGrid>* sink_;
  std::vector<std::uint64_t> row_req_;
  std::vector<std::uint64_t> col_req_;
  std::vector<std::pair<int, int>> queue_;
  std::vector<int> cells_;
  std::vector<int> owner_;
  std::vector<unsigned> seen_;
  unsigned round_ = 0;
};

}  // namespace

GridResult solve_grid(const GridProblem& problem, std::uint64_t budget) {
  Search search(problem, budget, 1);
  search.run();
  GridResult r;
  r.nodes = search.nodes;
  if (search.first_solution) {
    r.status = SolveStatus::found;
    r.grid = *search.first_solution;
  } else {
    r.status = search.out_of_budget ? SolveStatus::budget_exhausted : SolveStatus::none;
  }
  return r;
}

CountResult enumerate_grid(const GridProblem& problem, std::uint64_t cap, std::uint64_t budget) {
  CountResult r;
  if (cap == 0) {
    r.capped = true;
    return r;
  }
  Search search(problem, budget, cap);
  search.run();
  r.count = search.found;
  r.capped = search.found >= cap;
  r.budget_exhausted = search.out_of_budget;
  r.nodes = search.nodes;
  return r;
}

std::vector<SymbolGrid> collect_solutions(const GridProblem& problem, std::uint64_t cap,
                                          std::uint64_t budget) {
  std::vector<SymbolGrid> out;
  if (cap == 0) return out;
  Search search(problem, budget, cap, &out);
  search.run();
  return out;
}

CompletionResult complete_pls(const PartialLatinSquare& p, std::uint64_t budget) {
  require_valid(p);
  const GridResult g = solve_grid(grid_problem(p), budget);
  CompletionResult r;
  r.status = g.status;
  r.nodes = g.nodes;
  if (g.status == SolveStatus::found) {
    PartialLatinSquare q(p.order());
    for (int i = 0; i < p.order(); ++i)
      for (int j = 0; j < p.order(); ++j) q.set(i, j, g.grid.at(i, j));
    if (!extends(q, p)) throw std::logic_error("solver returned a square that does not extend P");
    r.completion = std::move(q);
  }
  return r;
}

LatinizationResult latinize_framework(const Framework& f, std::uint64_t budget) {
  const GridResult g = solve_grid(grid_problem(f), budget);
  LatinizationResult r;
  r.status = g.status;
  r.nodes = g.nodes;
  if (g.status == SolveStatus::found) {
    if (!is_latinization(f, g.grid)) throw std::logic_error("solver returned an invalid latinization");
    r.latinization = g.grid;
  }
  return r;
}

CountResult enumerate_small(const PartialLatinSquare& p, std::uint64_t cap, std::uint64_t budget) {
  require_valid(p);
  return enumerate_grid(grid_problem(p), cap, budget);
}

CountResult enumerate_small(const Framework& f, std::uint64_t cap, std::uint64_t budget) {
  return enumerate_grid(grid_problem(f), cap, budget);
}

}  // namespace pls
