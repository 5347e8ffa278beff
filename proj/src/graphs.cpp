#include "pls/graphs.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

#include "pls/errors.hpp"

namespace pls {

BipartiteGraph::BipartiteGraph(int size_a, int size_b)
    : size_a_(size_a),
      size_b_(size_b),
      adj_(static_cast<std::size_t>(size_a)),
      deg_a_(static_cast<std::size_t>(size_a), 0),
      deg_b_(static_cast<std::size_t>(size_b), 0) {
  if (size_a < 0 || size_b < 0) throw Error(Errc::invalid_argument, "negative part size");
}

int BipartiteGraph::add_edge(int a, int b) {
  if (a < 0 || a >= size_a_ || b < 0 || b >= size_b_) {
    throw Error(Errc::invalid_argument,
                "edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
  }
  const auto key = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(size_b_) +
                   static_cast<std::uint64_t>(b);
  if (distinct_.insert(key).second) adj_[static_cast<std::size_t>(a)].push_back(b);
  ++deg_a_[static_cast<std::size_t>(a)];
  ++deg_b_[static_cast<std::size_t>(b)];
  edges_.emplace_back(a, b);
  return static_cast<int>(edges_.size()) - 1;
}

bool BipartiteGraph::has_edge(int a, int b) const {
  if (a < 0 || a >= size_a_ || b < 0 || b >= size_b_) return false;
  return distinct_.contains(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(size_b_) +
                            static_cast<std::uint64_t>(b));
}

int BipartiteGraph::max_degree() const {
  int best = 0;
  for (int d : deg_a_) best = std::max(best, d);
  for (int d : deg_b_) best = std::max(best, d);
  return best;
}

// ---------------------------------------------------------------------------

Matching Matching::from_pairs(int size_a, int size_b,
                              const std::vector<std::pair<int, int>>& pairs) {
  Matching m(size_a, size_b);
  for (auto [a, b] : pairs) m.add(a, b);
  return m;
}

void Matching::add(int a, int b) {
  if (covers_a(a) || covers_b(b)) {
    throw Error(Errc::invalid_argument,
                "vertex already matched when adding (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
  }
  mate_a[static_cast<std::size_t>(a)] = b;
  mate_b[static_cast<std::size_t>(b)] = a;
}

int Matching::size() const {
  return static_cast<int>(
      std::count_if(mate_a.begin(), mate_a.end(), [](int b) { return b != kUnmatched; }));
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < mate_a.size(); ++a)
    if (mate_a[a] != kUnmatched) out.emplace_back(static_cast<int>(a), mate_a[a]);
  return out;
}

bool is_matching(const BipartiteGraph& g, const Matching& m) {
  if (static_cast<int>(m.mate_a.size()) != g.size_a() ||
      static_cast<int>(m.mate_b.size()) != g.size_b())
    return false;
  for (int a = 0; a < g.size_a(); ++a) {
    const int b = m.mate_a[static_cast<std::size_t>(a)];
    if (b == kUnmatched) continue;
    if (b < 0 || b >= g.size_b() || m.mate_b[static_cast<std::size_t>(b)] != a) return false;
    if (!g.has_edge(a, b)) return false;
  }
  for (int b = 0; b < g.size_b(); ++b) {
    const int a = m.mate_b[static_cast<std::size_t>(b)];
    if (a != kUnmatched && (a < 0 || a >= g.size_a() || m.mate_a[static_cast<std::size_t>(a)] != b))
      return false;
  }
  return true;
}

namespace {

class Augmenter {
 public:
  Augmenter(const BipartiteGraph& g, Matching& m)
      : g_(g), m_(m), stamp_(static_cast<std::size_t>(g.size_b()), 0) {}

  bool augment_from(int a) {
    ++round_;
    return dfs(a);
  }

 private:
  bool dfs(int a) {
    for (int b : g_.neighbors(a)) {
      auto& seen = stamp_[static_cast<std::size_t>(b)];
      if (seen == round_) continue;
      seen = round_;
      const int other = m_.mate_b[static_cast<std::size_t>(b)];
      if (other == kUnmatched || dfs(other)) {
        m_.mate_a[static_cast<std::size_t>(a)] = b;
        m_.mate_b[static_cast<std::size_t>(b)] = a;
        return true;
      }
    }
    return false;
  }

  const BipartiteGraph& g_;
  Matching& m_;
  std::vector<unsigned> stamp_;
  unsigned round_ = 0;
};

}  // namespace

Matching max_matching(const BipartiteGraph& g) {
  Matching m(g.size_a(), g.size_b());
  // Greedy seed, then augment from each exposed A-vertex.
  for (int a = 0; a < g.size_a(); ++a)
    for (int b : g.neighbors(a))
      if (!m.covers_b(b)) {
        m.add(a, b);
        break;
      }
  Augmenter aug(g, m);
  for (int a = 0; a < g.size_a(); ++a)
    if (!m.covers_a(a)) aug.augment_from(a);
  return m;
}

std::vector<int> alternating_reach_a(const BipartiteGraph& g, const Matching& maximum) {
  std::vector<bool> seen_a(static_cast<std::size_t>(g.size_a()), false);
  std::vector<bool> seen_b(static_cast<std::size_t>(g.size_b()), false);
  std::deque<int> queue;
  for (int a = 0; a < g.size_a(); ++a)
    if (!maximum.covers_a(a)) {
      seen_a[static_cast<std::size_t>(a)] = true;
      queue.push_back(a);
    }
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int b : g.neighbors(a)) {
      if (seen_b[static_cast<std::size_t>(b)]) continue;
      seen_b[static_cast<std::size_t>(b)] = true;
      const int next = maximum.mate_b[static_cast<std::size_t>(b)];
      if (next != kUnmatched && !seen_a[static_cast<std::size_t>(next)]) {
        seen_a[static_cast<std::size_t>(next)] = true;
        queue.push_back(next);
      }
    }
  }
  std::vector<int> out;
  for (int a = 0; a < g.size_a(); ++a)
    if (seen_a[static_cast<std::size_t>(a)]) out.push_back(a);
  return out;
}

bool is_vertex_cover(const BipartiteGraph& g, const VertexCover& cover) {
  std::vector<bool> in_a(static_cast<std::size_t>(g.size_a()), false);
  std::vector<bool> in_b(static_cast<std::size_t>(g.size_b()), false);
  for (int a : cover.a) in_a[static_cast<std::size_t>(a)] = true;
  for (int b : cover.b) in_b[static_cast<std::size_t>(b)] = true;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const auto& e) {
    return in_a[static_cast<std::size_t>(e.first)] || in_b[static_cast<std::size_t>(e.second)];
  });
}

VertexCover min_vertex_cover(const BipartiteGraph& g, const Matching& maximum) {
  const auto reach_a = alternating_reach_a(g, maximum);
  std::vector<bool> z_a(static_cast<std::size_t>(g.size_a()), false);
  std::vector<bool> z_b(static_cast<std::size_t>(g.size_b()), false);
  for (int a : reach_a) {
    z_a[static_cast<std::size_t>(a)] = true;
    for (int b : g.neighbors(a)) z_b[static_cast<std::size_t>(b)] = true;
  }
  VertexCover cover;
  for (int a = 0; a < g.size_a(); ++a)
    if (!z_a[static_cast<std::size_t>(a)]) cover.a.push_back(a);
  for (int b = 0; b < g.size_b(); ++b)
    if (z_b[static_cast<std::size_t>(b)]) cover.b.push_back(b);
  if (cover.size() != maximum.size()) {
    throw std::logic_error("König-Egerváry equality failed: matching is not maximum");
  }
  return cover;
}

VertexCover min_vertex_cover(const BipartiteGraph& g) {
  return min_vertex_cover(g, max_matching(g));
}

// ---------------------------------------------------------------------------

std::vector<int> edge_color(const BipartiteGraph& g, int colors) {
  const int k = std::max(colors, g.max_degree());
  std::vector<int> result(static_cast<std::size_t>(g.edge_count()), 0);
  if (k == 0 || g.edge_count() == 0) return result;

  const int n = std::max(g.size_a(), g.size_b());
  struct Bucket {
    std::vector<int> real;
    int dummy = 0;
    int total() const { return static_cast<int>(real.size()) + dummy; }
  };
  std::vector<std::map<int, Bucket>> buckets(static_cast<std::size_t>(n));
  std::vector<int> deg_a(static_cast<std::size_t>(n), 0);
  std::vector<int> deg_b(static_cast<std::size_t>(n), 0);
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto [a, b] = g.edges()[static_cast<std::size_t>(id)];
    buckets[static_cast<std::size_t>(a)][b].real.push_back(id);
    ++deg_a[static_cast<std::size_t>(a)];
    ++deg_b[static_cast<std::size_t>(b)];
  }

  // Pad to a k-regular bipartite multigraph on n + n vertices. Both sides
  // have the same total deficit n*k - |E|, so a two-pointer sweep closes it.
  int ia = 0;
  int ib = 0;
  while (true) {
    while (ia < n && deg_a[static_cast<std::size_t>(ia)] == k) ++ia;
    while (ib < n && deg_b[static_cast<std::size_t>(ib)] == k) ++ib;
    if (ia == n || ib == n) break;
    const int add = std::min(k - deg_a[static_cast<std::size_t>(ia)],
                             k - deg_b[static_cast<std::size_t>(ib)]);
    buckets[static_cast<std::size_t>(ia)][ib].dummy += add;
    deg_a[static_cast<std::size_t>(ia)] += add;
    deg_b[static_cast<std::size_t>(ib)] += add;
  }

  for (int color = 1; color <= k; ++color) {
    BipartiteGraph support(n, n);
    for (int a = 0; a < n; ++a)
      for (const auto& [b, bucket] : buckets[static_cast<std::size_t>(a)])
        if (bucket.total() > 0) support.add_edge(a, b);
    const Matching m = max_matching(support);
    if (m.size() != n) {
      throw std::logic_error("regular bipartite multigraph without a perfect matching");
    }
    for (int a = 0; a < n; ++a) {
      auto& row = buckets[static_cast<std::size_t>(a)];
      const auto it = row.find(m.mate_a[static_cast<std::size_t>(a)]);
      Bucket& bucket = it->second;
      if (!bucket.real.empty()) {
        result[static_cast<std::size_t>(bucket.real.back())] = color;
        bucket.real.pop_back();
      } else {
        --bucket.dummy;
      }
      if (bucket.total() == 0) row.erase(it);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

Matching dm_merge(const BipartiteGraph& g, const Matching& m1, const Matching& m2) {
  if (!is_matching(g, m1) || !is_matching(g, m2)) {
    throw Error(Errc::invalid_argument, "dm_merge inputs must be matchings of the graph");
  }
  const int na = g.size_a();
  const int nb = g.size_b();
  Matching out(na, nb);

  // Vertices are encoded as a in [0, na) and na + b for B-vertices. Every
  // vertex has at most one M1-partner and one M2-partner, so components of
  // M1 ∪ M2 are alternating paths and even cycles.
  auto partners = [&](int v) {
    std::vector<int> p;
    if (v < na) {
      const int b1 = m1.mate_a[static_cast<std::size_t>(v)];
      const int b2 = m2.mate_a[static_cast<std::size_t>(v)];
      if (b1 != kUnmatched) p.push_back(na + b1);
      if (b2 != kUnmatched && b2 != b1) p.push_back(na + b2);
    } else {
      const int a1 = m1.mate_b[static_cast<std::size_t>(v - na)];
      const int a2 = m2.mate_b[static_cast<std::size_t>(v - na)];
      if (a1 != kUnmatched) p.push_back(a1);
      if (a2 != kUnmatched && a2 != a1) p.push_back(a2);
    }
    return p;
  };

  std::vector<bool> visited(static_cast<std::size_t>(na + nb), false);
  for (int start = 0; start < na + nb; ++start) {
    if (visited[static_cast<std::size_t>(start)] || partners(start).empty()) continue;
    std::vector<int> component;
    std::deque<int> queue{start};
    visited[static_cast<std::size_t>(start)] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      component.push_back(v);
      for (int w : partners(v))
        if (!visited[static_cast<std::size_t>(w)]) {
          visited[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
    }

    // Try the M1 edges of the component first, then the M2 edges.
    auto choose = [&](const Matching& pick) -> bool {
      std::vector<std::pair<int, int>> chosen;
      for (int v : component)
        if (v < na && pick.covers_a(v)) chosen.emplace_back(v, pick.mate_a[static_cast<std::size_t>(v)]);
      std::vector<bool> hit_a(static_cast<std::size_t>(na), false);
      std::vector<bool> hit_b(static_cast<std::size_t>(nb), false);
      for (auto [a, b] : chosen) {
        hit_a[static_cast<std::size_t>(a)] = true;
        hit_b[static_cast<std::size_t>(b)] = true;
      }
      for (int v : component) {
        if (v < na && m1.covers_a(v) && !hit_a[static_cast<std::size_t>(v)]) return false;
        if (v >= na && m2.covers_b(v - na) && !hit_b[static_cast<std::size_t>(v - na)]) return false;
      }
      for (auto [a, b] : chosen) out.add(a, b);
      return true;
    };
    if (!choose(m1) && !choose(m2)) {
      throw std::logic_error("Dulmage-Mendelsohn merge found no covering subset");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

FlowNetwork::FlowNetwork(int vertices, int source, int sink)
    : vertices_(vertices), source_(source), sink_(sink) {
  if (source < 0 || source >= vertices || sink < 0 || sink >= vertices || source == sink) {
    throw Error(Errc::invalid_argument, "invalid source/sink");
  }
}

int FlowNetwork::add_vertex() { return vertices_++; }

int FlowNetwork::add_edge(int from, int to, std::int64_t capacity) {
  if (from < 0 || from >= vertices_ || to < 0 || to >= vertices_)
    throw Error(Errc::invalid_argument, "flow edge endpoint out of range");
  if (capacity < 0) throw Error(Errc::invalid_argument, "negative capacity");
  if (to == source_) throw Error(Errc::invalid_argument, "source must have zero in-degree");
  if (from == sink_) throw Error(Errc::invalid_argument, "sink must have zero out-degree");
  edges_.push_back({from, to, capacity});
  return static_cast<int>(edges_.size()) - 1;
}

namespace {

// Arc 2e is edge e, arc 2e+1 its reverse.
struct Residual {
  std::vector<std::vector<int>> out;
  std::vector<int> head;
  std::vector<std::int64_t> cap;

  explicit Residual(const FlowNetwork& net, const std::vector<std::int64_t>* flow = nullptr)
      : out(static_cast<std::size_t>(net.vertex_count())) {
    const auto& edges = net.edges();
    head.resize(edges.size() * 2);
    cap.resize(edges.size() * 2);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const std::int64_t f = flow ? (*flow)[e] : 0;
      head[2 * e] = edges[e].to;
      head[2 * e + 1] = edges[e].from;
      cap[2 * e] = edges[e].capacity - f;
      cap[2 * e + 1] = f;
      out[static_cast<std::size_t>(edges[e].from)].push_back(static_cast<int>(2 * e));
      out[static_cast<std::size_t>(edges[e].to)].push_back(static_cast<int>(2 * e + 1));
    }
  }

  std::vector<bool> reachable(int source) const {
    std::vector<bool> seen(out.size(), false);
    std::deque<int> queue{source};
    seen[static_cast<std::size_t>(source)] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int arc : out[static_cast<std::size_t>(v)]) {
        const int w = head[static_cast<std::size_t>(arc)];
        if (cap[static_cast<std::size_t>(arc)] > 0 && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
      }
    }
    return seen;
  }
};

}  // namespace

Flow max_flow_integral(const FlowNetwork& net) {
  Residual res(net);
  const auto n = static_cast<std::size_t>(net.vertex_count());
  Flow flow;
  while (true) {
    std::vector<int> via(n, -1);
    std::vector<bool> seen(n, false);
    std::deque<int> queue{net.source()};
    seen[static_cast<std::size_t>(net.source())] = true;
    while (!queue.empty() && !seen[static_cast<std::size_t>(net.sink())]) {
      const int v = queue.front();
      queue.pop_front();
      for (int arc : res.out[static_cast<std::size_t>(v)]) {
        const int w = res.head[static_cast<std::size_t>(arc)];
        if (res.cap[static_cast<std::size_t>(arc)] > 0 && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          via[static_cast<std::size_t>(w)] = arc;
          queue.push_back(w);
        }
      }
    }
    if (!seen[static_cast<std::size_t>(net.sink())]) break;

    std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
    for (int v = net.sink(); v != net.source();) {
      const int arc = via[static_cast<std::size_t>(v)];
      bottleneck = std::min(bottleneck, res.cap[static_cast<std::size_t>(arc)]);
      v = res.head[static_cast<std::size_t>(arc ^ 1)];
    }
    for (int v = net.sink(); v != net.source();) {
      const int arc = via[static_cast<std::size_t>(v)];
      res.cap[static_cast<std::size_t>(arc)] -= bottleneck;
      res.cap[static_cast<std::size_t>(arc ^ 1)] += bottleneck;
      v = res.head[static_cast<std::size_t>(arc ^ 1)];
    }
    flow.value += bottleneck;
  }

  flow.edge_flow.resize(net.edges().size());
  for (std::size_t e = 0; e < net.edges().size(); ++e) flow.edge_flow[e] = res.cap[2 * e + 1];
  return flow;
}

std::vector<bool> residual_source_side(const FlowNetwork& net, const Flow& flow) {
  return Residual(net, &flow.edge_flow).reachable(net.source());
}

std::int64_t cut_capacity(const FlowNetwork& net, const std::vector<bool>& side) {
  std::int64_t total = 0;
  for (const auto& e : net.edges())
    if (side[static_cast<std::size_t>(e.from)] && !side[static_cast<std::size_t>(e.to)])
      total += e.capacity;
  return total;
}

bool is_feasible_flow(const FlowNetwork& net, const Flow& flow) {
  if (flow.edge_flow.size() != net.edges().size()) return false;
  std::vector<std::int64_t> balance(static_cast<std::size_t>(net.vertex_count()), 0);
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    const auto& edge = net.edges()[e];
    const std::int64_t f = flow.edge_flow[e];
    if (f < 0 || f > edge.capacity) return false;
    balance[static_cast<std::size_t>(edge.from)] -= f;
    balance[static_cast<std::size_t>(edge.to)] += f;
  }
  for (int v = 0; v < net.vertex_count(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    if (balance[static_cast<std::size_t>(v)] != 0) return false;
  }
  return -balance[static_cast<std::size_t>(net.source())] == flow.value &&
         balance[static_cast<std::size_t>(net.sink())] == flow.value;
}

}  // namespace pls
