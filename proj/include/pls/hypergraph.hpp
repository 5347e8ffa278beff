#pragma once

#include <vector>

namespace pls {

/// Vertices are 0..vertices-1; each edge lists its vertices. Edges may repeat.
struct Hypergraph {
  int vertices = 0;
  std::vector<std::vector<int>> edges;

  bool operator==(const Hypergraph&) const = default;
};

}  // namespace pls
