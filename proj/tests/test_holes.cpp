#include "doctest.h"
#include "oracles.hpp"
#include "pls/generate.hpp"
#include "pls/hall.hpp"
#include "pls/holes.hpp"
#include "pls/ryser.hpp"
#include "pls/solver.hpp"
#include "support.hpp"

using namespace pls;

namespace {

HoleInstance random_instance(Rng& rng, int n, double rate) {
  std::uniform_int_distribution<int> d(1, n);
  const int r = d(rng), s = d(rng);
  return HoleInstance::from(punch_holes(gen_rectangle(n, r, s, rng), r, s, rate, rng));
}

// Short rectangle (Ryser fails) with holes punched in: often not completable.
std::optional<HoleInstance> short_instance(Rng& rng, int n) {
  std::uniform_int_distribution<int> d(1, n - 1);
  int r = d(rng), s = d(rng);
  if (r > s) std::swap(r, s);
  if (r + s <= n) return std::nullopt;
  return HoleInstance::from(punch_holes(gen_short_rectangle(n, r, s, rng), r, s, 0.4, rng));
}

std::vector<int> quota(const MuProfile& mu) { return mu.mu; }

}  // namespace

TEST_CASE("mu profile arithmetic") {
  // 2x2 rectangle in order 3 with one hole: r + s − n = 1
  const auto p = PartialLatinSquare::from_rows({{1, 2, 0}, {2, 0, 0}, {0, 0, 0}});
  const HoleInstance inst = HoleInstance::from(p);
  CHECK(inst.holes == CellSet{{1, 1}});
  const MuProfile mu = compute_mu(inst);
  CHECK(mu.mu == std::vector<int>{0, 0, 0, 1});
  CHECK(mu.u == 1);
  // the hole (2,2) supports 1 and 3
  CHECK(mu.rho == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("u = 0 leaves step 1 vacuous") {
  Rng rng(1);
  const auto p = gen_rectangle(6, 2, 3, rng);
  const HoleInstance inst = HoleInstance::from(p);
  CHECK(compute_mu(inst).u == 0);
  CHECK(step1_partial_fill(inst) == p);
  CHECK(step2_full_fill(inst) == p);
  CHECK(step3_merge(inst, p, p) == p);
  CHECK(extends(complete_with_holes(inst), p));
}

TEST_CASE("single path network") {
  // order 2, 2x1 rectangle with its top cell erased: symbol 2 needs one copy
  const auto p = PartialLatinSquare::from_rows({{0, 0}, {1, 0}});
  const HoleInstance inst{p, 2, 1, {{0, 0}}};
  const MuProfile mu = compute_mu(inst);
  CHECK(mu.u == 1);
  CHECK(mu.mu[2] == 1);
  const HoleNetwork hn = build_flow_network(inst, mu);
  CHECK(hn.xs.size() == 1);
  CHECK(hn.placements.size() == 1);
  CHECK(max_flow_integral(hn.net).value == 1);
  const auto q1 = step1_partial_fill(inst);
  CHECK(q1.at(0, 0) == 2);
  CHECK(complete_with_holes(inst) == PartialLatinSquare::from_rows({{2, 1}, {1, 2}}));
}

TEST_CASE("mu never exceeds rho when HI(H) holds") {
  Rng rng(2);
  for (int trial = 0; trial < 150; ++trial) {
    const HoleInstance inst = random_instance(rng, 3 + trial % 6, 0.5);
    const MuProfile mu = compute_mu(inst);
    if (check_hi(inst.square, top_rows(inst.square.order(), inst.rows)).verdict != Verdict::satisfied)
      continue;
    for (int s = 1; s <= inst.square.order(); ++s) CHECK(mu.mu[static_cast<std::size_t>(s)] <= mu.rho[static_cast<std::size_t>(s)]);
  }
}

TEST_CASE("flow value equals the best placement count") {
  Rng rng(3);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 80; ++trial) {
    const int n = 3 + trial % 5;
    auto inst = rng() % 2 ? short_instance(rng, n) : std::optional(random_instance(rng, n, 0.6));
    if (!inst || inst->holes.size() > 8) continue;
    const MuProfile mu = compute_mu(*inst);
    if (mu.u == 0) continue;
    ++tested;
    const HoleNetwork hn = build_flow_network(*inst, mu);
    CHECK(max_flow_integral(hn.net).value == oracle::max_placements(inst->square, inst->holes, quota(mu)));
  }
  CHECK(tested >= 40);
}

TEST_CASE("step outputs on completable instances") {
  Rng rng(4);
  for (int trial = 0; trial < 120; ++trial) {
    const HoleInstance inst = random_instance(rng, 2 + trial % 8, 0.5);
    const int n = inst.square.order();
    const MuProfile mu = compute_mu(inst);
    const auto q1 = step1_partial_fill(inst);
    const auto q2 = step2_full_fill(inst);
    const auto q = step3_merge(inst, q1, q2);
    CHECK(validate(q1));
    CHECK(validate(q2));
    CHECK(validate(q));
    for (const Cell& h : inst.holes) {
      CHECK_FALSE(q2.is_empty(h));
      CHECK_FALSE(q.is_empty(h));
      if (!q1.is_empty(h)) CHECK(q.at(h) == q1.at(h));
    }
    const auto counts = symbol_counts(q);
    for (int s = 1; s <= n; ++s)
      CHECK(counts[static_cast<std::size_t>(s)] >= inst.rows + inst.cols - n);
    CHECK(step3_merge(inst, q2, q2) == q2);
    const auto done = complete_with_holes(inst);
    CHECK(extends(done, inst.square));
  }
}

TEST_CASE("no holes reduces to rectangle completion") {
  Rng rng(5);
  const auto p = gen_rectangle(7, 3, 5, rng);
  CHECK(complete_with_holes(p) == complete_rectangle(p));
}

TEST_CASE("row deficit") {
  // both holes of row 1 support only symbol 1
  const auto p = parse_pls(read_file(testing_support::data_path("row_deficit.pls")));
  const HoleInstance inst = HoleInstance::from(p);
  try {
    step2_full_fill(inst);
    FAIL("row deficit not detected");
  } catch (const HallViolation& v) {
    CHECK(v.code() == Errc::row_matching_deficit);
    CHECK(v.holes().size() == 2);
    CHECK(check_hi(p, v.tested()).verdict == Verdict::violated);
  }
  CHECK_FALSE(oracle::completable(p));
}

TEST_CASE("pipeline agrees with the solver and certificates fail HI") {
  Rng rng(6);
  int failures = 0, successes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 5;
    auto inst = trial % 3 == 0 ? std::optional(random_instance(rng, n, 0.5)) : short_instance(rng, n);
    if (!inst) continue;
    const CompletionResult s = complete_pls(inst->square);
    REQUIRE(s.status != SolveStatus::budget_exhausted);
    try {
      const auto done = complete_with_holes(*inst);
      CHECK(extends(done, inst->square));
      CHECK(s.status == SolveStatus::found);
      ++successes;
    } catch (const HallViolation& v) {
      ++failures;
      CHECK(s.status == SolveStatus::none);
      CHECK(check_hi(inst->square, v.tested()).verdict == Verdict::violated);
      if (v.code() == Errc::flow_deficit)
        CHECK(v.tested() == difference(top_rows(n, inst->rows), v.holes()));
      else
        CHECK(v.tested() == v.holes());
    }
  }
  CHECK(failures > 20);
  CHECK(successes > 20);
}
