#include "pls/holes.hpp"

#include <algorithm>
#include <stdexcept>

#include "pls/hall.hpp"
#include "pls/ryser.hpp"

namespace pls {

HoleInstance HoleInstance::from(const PartialLatinSquare& p) {
  const auto shape = as_rectangle_with_holes(p);
  if (!shape) throw Error(Errc::wrong_shape, "not a rectangle with at most one hole per column");
  return {p, shape->rows, shape->cols, shape->holes};
}

MuProfile compute_mu(const HoleInstance& inst) {
  const PartialLatinSquare& p = inst.square;
  const int n = p.order();
  const std::vector<int> counts = symbol_counts(p);
  MuProfile prof;
  prof.mu.assign(static_cast<std::size_t>(n) + 1, 0);
  prof.rho.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int s = 1; s <= n; ++s) {
    const int m = std::max(0, inst.rows + inst.cols - n - counts[static_cast<std::size_t>(s)]);
    prof.mu[static_cast<std::size_t>(s)] = m;
    prof.u += m;
    std::vector<bool> row_hit(static_cast<std::size_t>(n), false);
    for (const Cell& h : inst.holes)
      if (p.supports(h, s)) row_hit[static_cast<std::size_t>(h.row)] = true;
    prof.rho[static_cast<std::size_t>(s)] =
        static_cast<int>(std::count(row_hit.begin(), row_hit.end(), true));
  }
  return prof;
}

HoleNetwork build_flow_network(const HoleInstance& inst, const MuProfile& mu) {
  const PartialLatinSquare& p = inst.square;
  const int n = p.order();
  HoleNetwork hn;
  hn.symbol_vertex.assign(static_cast<std::size_t>(n) + 1, -1);
  hn.source_edge.assign(static_cast<std::size_t>(n) + 1, -1);
  FlowNetwork& net = hn.net;
  const int source = net.source();
  const int sink = net.sink();

  for (std::size_t k = 0; k < inst.holes.size(); ++k) hn.hole_vertex.push_back(net.add_vertex());
  for (int s = 1; s <= n; ++s) {
    const int m = mu.mu[static_cast<std::size_t>(s)];
    if (m == 0) continue;
    const int v = net.add_vertex();
    hn.symbol_vertex[static_cast<std::size_t>(s)] = v;
    hn.source_edge[static_cast<std::size_t>(s)] = net.add_edge(source, v, m);
    // (σ, w) for each row w holding a hole that supports σ, ascending rows
    for (std::size_t k = 0; k < inst.holes.size(); ++k) {
      const Cell& h = inst.holes[k];
      if (!p.supports(h, s)) continue;
      auto it = std::find_if(hn.xs.begin(), hn.xs.end(),
                             [&](const HoleNetwork::XNode& x) { return x.symbol == s && x.row == h.row; });
      int xi;
      if (it == hn.xs.end()) {
        const int xv = net.add_vertex();
        hn.xs.push_back({s, h.row, xv, net.add_edge(v, xv, 1)});
        xi = static_cast<int>(hn.xs.size()) - 1;
      } else {
        xi = static_cast<int>(it - hn.xs.begin());
      }
      const int e = net.add_edge(hn.xs[static_cast<std::size_t>(xi)].vertex,
                                 hn.hole_vertex[k], std::max(mu.u, 1));
      hn.placements.push_back({xi, static_cast<int>(k), e});
    }
  }
  for (int hv : hn.hole_vertex) net.add_edge(hv, sink, 1);
  return hn;
}

PartialLatinSquare step1_partial_fill(const HoleInstance& inst) {
  const MuProfile mu = compute_mu(inst);
  PartialLatinSquare q1 = inst.square;
  if (mu.u == 0) return q1;

  const HoleNetwork hn = build_flow_network(inst, mu);
  const Flow flow = max_flow_integral(hn.net);

  if (flow.value < mu.u) {
    const std::vector<bool> side = residual_source_side(hn.net, flow);
    const int n = inst.square.order();
    // U′ after cut normalisation: keep σ on the source side only while
    // fewer than μ(σ) of its σ → (σ,w) edges are cut.
    std::vector<bool> keep(static_cast<std::size_t>(n) + 1, false);
    for (int s = 1; s <= n; ++s) {
      const int v = hn.symbol_vertex[static_cast<std::size_t>(s)];
      if (v < 0 || !side[static_cast<std::size_t>(v)]) continue;
      int cut = 0;
      for (const auto& x : hn.xs)
        if (x.symbol == s && !side[static_cast<std::size_t>(x.vertex)]) ++cut;
      keep[static_cast<std::size_t>(s)] = cut < mu.mu[static_cast<std::size_t>(s)];
    }
    std::vector<bool> in_b(inst.holes.size(), false);
    for (const auto& pl : hn.placements) {
      const auto& x = hn.xs[static_cast<std::size_t>(pl.x)];
      if (keep[static_cast<std::size_t>(x.symbol)] && side[static_cast<std::size_t>(x.vertex)])
        in_b[static_cast<std::size_t>(pl.hole)] = true;
    }
    CellSet b_prime;
    for (std::size_t k = 0; k < inst.holes.size(); ++k)
      if (in_b[k]) b_prime.push_back(inst.holes[k]);
    CellSet tested = difference(top_rows(n, inst.rows), b_prime);
    throw HallViolation(Errc::flow_deficit,
                        "max flow " + std::to_string(flow.value) + " below u = " +
                            std::to_string(mu.u) + "; HI(H - B') fails for B' = " +
                            to_string(b_prime),
                        std::move(b_prime), std::move(tested));
  }

  for (const auto& pl : hn.placements)
    if (flow.edge_flow[static_cast<std::size_t>(pl.edge)] > 0)
      q1.set(inst.holes[static_cast<std::size_t>(pl.hole)],
             hn.xs[static_cast<std::size_t>(pl.x)].symbol);
  return q1;
}

namespace {

// Holes of each row, as indices into inst.holes.
std::vector<std::vector<int>> holes_by_row(const HoleInstance& inst) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(inst.square.order()));
  for (std::size_t k = 0; k < inst.holes.size(); ++k)
    rows[static_cast<std::size_t>(inst.holes[k].row)].push_back(static_cast<int>(k));
  return rows;
}

}  // namespace

PartialLatinSquare step2_full_fill(const HoleInstance& inst) {
  const PartialLatinSquare& p = inst.square;
  const int n = p.order();
  PartialLatinSquare q2 = p;
  for (const auto& row : holes_by_row(inst)) {
    if (row.empty()) continue;
    BipartiteGraph g(static_cast<int>(row.size()), n);  // holes x symbols
    for (std::size_t i = 0; i < row.size(); ++i)
      for (int s : p.support(inst.holes[static_cast<std::size_t>(row[i])]))
        g.add_edge(static_cast<int>(i), s - 1);
    const Matching m = max_matching(g);
    if (m.size() < static_cast<int>(row.size())) {
      CellSet b_prime;
      for (int i : alternating_reach_a(g, m)) b_prime.push_back(inst.holes[static_cast<std::size_t>(row[static_cast<std::size_t>(i)])]);
      CellSet tested = b_prime;
      throw HallViolation(Errc::row_matching_deficit,
                          "holes " + to_string(b_prime) + " support fewer symbols than cells",
                          std::move(b_prime), std::move(tested));
    }
    for (std::size_t i = 0; i < row.size(); ++i)
      q2.set(inst.holes[static_cast<std::size_t>(row[i])], m.mate_a[i] + 1);
  }
  return q2;
}

PartialLatinSquare step3_merge(const HoleInstance& inst, const PartialLatinSquare& q1,
                               const PartialLatinSquare& q2) {
  const PartialLatinSquare& p = inst.square;
  const int n = p.order();
  PartialLatinSquare q = p;
  for (const auto& row : holes_by_row(inst)) {
    if (row.empty()) continue;
    const int k = static_cast<int>(row.size());
    BipartiteGraph g(n, k);  // symbols x holes of this row
    for (int i = 0; i < k; ++i)
      for (int s : p.support(inst.holes[static_cast<std::size_t>(row[static_cast<std::size_t>(i)])]))
        g.add_edge(s - 1, i);
    Matching m1(n, k);
    Matching m2(n, k);
    for (int i = 0; i < k; ++i) {
      const Cell h = inst.holes[static_cast<std::size_t>(row[static_cast<std::size_t>(i)])];
      if (q1.at(h) != kEmpty) m1.add(q1.at(h) - 1, i);
      if (q2.at(h) != kEmpty) m2.add(q2.at(h) - 1, i);
    }
    const Matching m = dm_merge(g, m1, m2);
    for (int i = 0; i < k; ++i) {
      const int s = m.mate_b[static_cast<std::size_t>(i)];
      if (s != kUnmatched) q.set(inst.holes[static_cast<std::size_t>(row[static_cast<std::size_t>(i)])], s + 1);
    }
  }
  return q;
}

PartialLatinSquare complete_with_holes(const HoleInstance& inst) {
  const PartialLatinSquare q1 = step1_partial_fill(inst);
  const PartialLatinSquare q2 = step2_full_fill(inst);
  const PartialLatinSquare q = step3_merge(inst, q1, q2);
  PartialLatinSquare done = complete_rectangle(q);
  if (!extends(done, inst.square))
    throw std::logic_error("hole completion does not extend its input");
  return done;
}

PartialLatinSquare complete_with_holes(const PartialLatinSquare& p) {
  return complete_with_holes(HoleInstance::from(p));
}

}  // namespace pls
