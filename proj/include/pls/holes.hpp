#pragma once

// Completion of an upper-left r×s rectangle that has at most one empty cell
// ("hole") per column. Pipeline: a flow places each short symbol in enough
// holes (step 1), per-row matchings fill every hole (step 2), a
// Dulmage-Mendelsohn merge keeps both properties (step 3), and the
// resulting rectangle is completed by edge colouring.

#include <utility>
#include <vector>

#include "pls/core.hpp"
#include "pls/graphs.hpp"

namespace pls {

struct HoleInstance {
  PartialLatinSquare square;
  int rows = 0;
  int cols = 0;
  CellSet holes;  // sorted

  /// Throws Errc::wrong_shape unless P is a rectangle with column holes (a
  /// plain rectangle gives an empty hole set).
  static HoleInstance from(const PartialLatinSquare& p);
};

struct MuProfile {
  std::vector<int> mu;   // mu[σ]: extra placements σ needs; index 0 unused
  std::vector<int> rho;  // rho[σ]: rows holding a hole that supports σ
  int u = 0;             // Σ mu
};

MuProfile compute_mu(const HoleInstance& inst);

/// Flow network α → σ → (σ,w) → hole → ω, with bookkeeping to decode flows.
struct HoleNetwork {
  struct XNode {
    int symbol;
    int row;
    int vertex;
    int in_edge;  // σ → (σ,w)
  };
  struct Placement {
    int x;      // index into xs
    int hole;   // index into inst.holes
    int edge;   // (σ,w) → hole
  };

  FlowNetwork net{2, 0, 1};
  std::vector<int> symbol_vertex;  // by symbol, -1 when σ ∉ U
  std::vector<int> source_edge;    // by symbol, -1 when σ ∉ U
  std::vector<XNode> xs;
  std::vector<int> hole_vertex;    // by hole index
  std::vector<Placement> placements;
};

HoleNetwork build_flow_network(const HoleInstance& inst, const MuProfile& mu);

/// Raised when the pipeline meets a failing Hall inequality. `tested()` is
/// the cell set T whose inequality fails (H − B′ for a flow deficit, B′ for
/// a row deficit); `holes()` is B′.
class HallViolation : public Error {
 public:
  HallViolation(Errc code, const std::string& what, CellSet holes, CellSet tested)
      : Error(code, what), holes_(std::move(holes)), tested_(std::move(tested)) {}

  const CellSet& holes() const noexcept { return holes_; }
  const CellSet& tested() const noexcept { return tested_; }

 private:
  CellSet holes_;
  CellSet tested_;
};

/// Q1: each short symbol σ placed in μ(σ) holes. Throws HallViolation with
/// Errc::flow_deficit.
PartialLatinSquare step1_partial_fill(const HoleInstance& inst);

/// Q2: every hole filled, row by row. Throws HallViolation with
/// Errc::row_matching_deficit.
PartialLatinSquare step2_full_fill(const HoleInstance& inst);

/// Q: every hole filled, keeping each symbol placed by Q1.
PartialLatinSquare step3_merge(const HoleInstance& inst, const PartialLatinSquare& q1,
                               const PartialLatinSquare& q2);

/// Full pipeline followed by rectangle completion.
PartialLatinSquare complete_with_holes(const HoleInstance& inst);
PartialLatinSquare complete_with_holes(const PartialLatinSquare& p);

}  // namespace pls
