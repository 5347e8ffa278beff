#pragma once

// Hardness gadget: 4-uniform 4-regular hypergraphs → balanced frameworks →
// L-shaped partial latin squares, plus conversions between 2-in-4
// colourings and latinizations of the gadget framework.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pls/core.hpp"
#include "pls/hall.hpp"
#include "pls/hypergraph.hpp"

namespace pls {

enum class Color { red, blue };
using TwoColoring = std::vector<Color>;

/// Throws Errc::not_uniform (edge without 4 distinct vertices) or
/// Errc::not_regular (vertex not in exactly 4 edges), Errc::invalid_argument
/// for out-of-range vertices.
void validate_hypergraph(const Hypergraph& h);
bool is_valid_hypergraph(const Hypergraph& h);

/// Every edge has exactly two red vertices.
bool is_two_in_four(const Hypergraph& h, const TwoColoring& c);

/// Backtracking over vertices in index order, red first, pruning any edge
/// with more than two vertices of one colour.
std::optional<TwoColoring> decide_2in4(const Hypergraph& h);

enum class SymbolClass { a, b, c };

/// Bijection between gadget symbols and 1..n.
///   a(j,k): edge j, 0 ≤ k < 4
///   b(i,k,l): vertex i, edge slot k, 0 ≤ l < 6
///   c(i,j,k): vertex i not on edge j, 0 ≤ k < 4
class GadgetSymbols {
 public:
  explicit GadgetSymbols(const Hypergraph& h);

  int u() const noexcept { return u_; }
  int order() const noexcept { return 4 * u_ * u_ + 12 * u_; }
  int a_count() const noexcept { return 4 * u_; }
  int b_count() const noexcept { return 24 * u_; }
  int c_count() const noexcept { return 4 * u_ * (u_ - 4); }

  int a(int edge, int k) const { return 1 + 4 * edge + k; }
  int b(int vertex, int slot, int l) const { return 4 * u_ + 1 + 24 * vertex + 6 * slot + l; }
  int c(int vertex, int edge, int k) const;

  SymbolClass class_of(int symbol) const;

  /// Slot of edge j among vertex i's edges (ascending edge index), or -1.
  int slot(int vertex, int edge) const { return slot_[static_cast<std::size_t>(vertex * u_ + edge)]; }
  /// Edge in a given slot of vertex i.
  int edge_at(int vertex, int slot) const {
    return edges_of_[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(slot)];
  }

 private:
  int u_;
  std::vector<int> slot_;
  std::vector<int> c_index_;  // by vertex*u + edge, -1 when incident
  std::vector<std::array<int, 4>> edges_of_;
};

/// 4u × 4u admissible array; block (i, j) covers rows 4i.. and columns 4j..
AdmissibleArray build_gadget_array(const Hypergraph& h);

/// R_i and C_j as unions of row and column entries, over t symbols. Throws
/// Errc::intersection_mismatch or Errc::not_balanced.
Framework build_framework(const AdmissibleArray& m, int symbols);

/// Realization of the gadget framework at order 4u² + 12u.
PartialLatinSquare reduce_to_pls(const Hypergraph& h);

struct ReductionReport {
  int u = 0;
  int order = 0;
  int a_count = 0;
  int b_count = 0;
  int c_count = 0;
  Verdict sufficient = Verdict::inconclusive;
  bool every_sum_is_one = false;
  int empty_cells = 0;
  /// Empty cells by support pattern: two b; one b and two a; four c.
  std::array<int, 3> pattern_counts{0, 0, 0};
  int other_patterns = 0;
};

ReductionReport reduction_report(const Hypergraph& h, const PartialLatinSquare& q);

/// Placement of one vertex's b symbols inside its 4 × 16 strip (its four
/// incident blocks in slot order): entry y*16 + x holds 6k + l for b(·,k,l)
/// or -1 for a cell taken by an a symbol.
using StripPattern = std::array<int, 64>;

/// Both placements, derived once by solving the single-vertex strip with
/// b(·,0,0) forced into column 0 (red) or column 1 (blue) of the top row.
const StripPattern& strip_pattern(Color c);

/// Every distinct b placement admitted by the single-vertex strip.
std::vector<StripPattern> enumerate_strip_patterns();

/// Throws Errc::invalid_coloring.
SymbolGrid coloring_to_latinization(const Hypergraph& h, const TwoColoring& c);

/// Throws Errc::unrecognized_position.
TwoColoring extract_coloring(const Hypergraph& h, const SymbolGrid& latinization);

enum class EpsilonMode { dense, sparse };

/// dense: unchanged. sparse: clears every cell below and right of the empty
/// upper-left block.
PartialLatinSquare epsilon_variant(const PartialLatinSquare& q, EpsilonMode mode);

}  // namespace pls
