#pragma once

// Bipartite matching, vertex covers, integral max-flow, bipartite edge
// colouring and the Dulmage-Mendelsohn matching merge.

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

namespace pls {

/// Bipartite (multi)graph with parts A = 0..size_a-1 and B = 0..size_b-1.
/// Parallel edges are kept as separate instances; matching routines treat
/// them as one edge, edge_color colours every instance.
class BipartiteGraph {
 public:
  BipartiteGraph(int size_a = 0, int size_b = 0);

  /// Returns the edge instance id.
  int add_edge(int a, int b);

  int size_a() const noexcept { return size_a_; }
  int size_b() const noexcept { return size_b_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  /// Distinct B-neighbours of `a` in insertion order.
  const std::vector<int>& neighbors(int a) const { return adj_[static_cast<std::size_t>(a)]; }

  bool has_edge(int a, int b) const;
  int degree_a(int a) const { return deg_a_[static_cast<std::size_t>(a)]; }
  int degree_b(int b) const { return deg_b_[static_cast<std::size_t>(b)]; }

  /// Maximum degree counting parallel edges.
  int max_degree() const;

 private:
  int size_a_;
  int size_b_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::unordered_set<std::uint64_t> distinct_;
  std::vector<int> deg_a_;
  std::vector<int> deg_b_;
};

inline constexpr int kUnmatched = -1;

struct Matching {
  std::vector<int> mate_a;  // mate_a[a] = b or kUnmatched
  std::vector<int> mate_b;

  Matching() = default;
  Matching(int size_a, int size_b)
      : mate_a(static_cast<std::size_t>(size_a), kUnmatched),
        mate_b(static_cast<std::size_t>(size_b), kUnmatched) {}

  /// Builds from pairs; throws pls::Error if a vertex repeats.
  static Matching from_pairs(int size_a, int size_b, const std::vector<std::pair<int, int>>& pairs);

  void add(int a, int b);
  int size() const;
  bool covers_a(int a) const { return mate_a[static_cast<std::size_t>(a)] != kUnmatched; }
  bool covers_b(int b) const { return mate_b[static_cast<std::size_t>(b)] != kUnmatched; }

  /// Pairs sorted by A-vertex.
  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const Matching&) const = default;
};

/// True when every pair is an edge of `g` and no vertex repeats.
bool is_matching(const BipartiteGraph& g, const Matching& m);

/// Maximum-cardinality matching by alternating-path augmentation, O(V·E).
Matching max_matching(const BipartiteGraph& g);

struct VertexCover {
  std::vector<int> a;
  std::vector<int> b;

  int size() const { return static_cast<int>(a.size() + b.size()); }
};

bool is_vertex_cover(const BipartiteGraph& g, const VertexCover& cover);

/// König's construction from a maximum matching. |cover| = |max matching|.
VertexCover min_vertex_cover(const BipartiteGraph& g);
VertexCover min_vertex_cover(const BipartiteGraph& g, const Matching& maximum);

/// A-vertices reachable from unmatched A-vertices along alternating paths.
/// When `maximum` leaves some A-vertex uncovered, the result is a Hall
/// violator: it has strictly fewer B-neighbours than members.
std::vector<int> alternating_reach_a(const BipartiteGraph& g, const Matching& maximum);

/// Proper edge colouring with colours 1..k where k = max(colors, Δ(g)).
/// Result is indexed by edge instance id. The graph is padded with dummy
/// vertices and edges to a k-regular bipartite multigraph and k perfect
/// matchings are peeled off; dummies are discarded.
std::vector<int> edge_color(const BipartiteGraph& g, int colors = 0);

/// Matching M ⊆ M1 ∪ M2 covering every A-vertex covered by M1 and every
/// B-vertex covered by M2.
Matching dm_merge(const BipartiteGraph& g, const Matching& m1, const Matching& m2);

// ---------------------------------------------------------------------------

/// Directed network with integral capacities. The source may not receive
/// edges and the sink may not emit them.
class FlowNetwork {
 public:
  struct Edge {
    int from;
    int to;
    std::int64_t capacity;
  };

  FlowNetwork(int vertices, int source, int sink);

  int add_vertex();
  int add_edge(int from, int to, std::int64_t capacity);

  int vertex_count() const noexcept { return vertices_; }
  int source() const noexcept { return source_; }
  int sink() const noexcept { return sink_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

 private:
  int vertices_;
  int source_;
  int sink_;
  std::vector<Edge> edges_;
};

struct Flow {
  std::vector<std::int64_t> edge_flow;  // indexed like FlowNetwork::edges()
  std::int64_t value = 0;
};

/// Shortest-augmenting-path (Edmonds-Karp) maximum flow.
Flow max_flow_integral(const FlowNetwork& net);

/// Vertices reachable from the source in the residual network of `flow`.
/// For a maximum flow this is the source side of a minimum cut.
std::vector<bool> residual_source_side(const FlowNetwork& net, const Flow& flow);

/// Total capacity of edges leaving `side`.
std::int64_t cut_capacity(const FlowNetwork& net, const std::vector<bool>& side);

/// Capacity and conservation constraints plus value bookkeeping.
bool is_feasible_flow(const FlowNetwork& net, const Flow& flow);

}  // namespace pls
