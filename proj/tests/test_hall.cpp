#include "doctest.h"
#include "oracles.hpp"
#include "pls/generate.hpp"
#include "pls/hall.hpp"
#include "pls/solver.hpp"
#include "support.hpp"

using namespace pls;
using testing_support::goldwasser;

namespace {

PartialLatinSquare random_partial(Rng& rng, int n, double erase_rate) {
  PartialLatinSquare p = random_latin_square(n, rng);
  std::bernoulli_distribution erase(erase_rate);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (erase(rng)) p.clear({i, j});
  return p;
}

// Random partial square that need not be completable: random symbols
// dropped into random cells while the latin property holds.
PartialLatinSquare random_scatter(Rng& rng, int n, int attempts) {
  PartialLatinSquare p(n);
  std::uniform_int_distribution<int> cell(0, n - 1), sym(1, n);
  for (int k = 0; k < attempts; ++k) {
    const Cell c{cell(rng), cell(rng)};
    const int s = sym(rng);
    if (p.is_empty(c) && p.supports(c, s)) p.set(c, s);
  }
  return p;
}

CellSet random_subset(Rng& rng, const CellSet& from, double keep) {
  std::bernoulli_distribution pick(keep);
  CellSet out;
  for (const Cell& c : from)
    if (pick(rng)) out.push_back(c);
  return out;
}

CellSet all_cells(int n) { return top_rows(n, n); }

}  // namespace

TEST_CASE("Goldwasser square") {
  const auto g = goldwasser();
  const CellSet empty = g.empty_cells();
  CHECK(empty.size() == 12);
  CHECK(alpha(g, 1, empty) == 2);

  const HallReport hi = check_hi(g, empty);
  CHECK(hi.verdict == Verdict::satisfied);
  CHECK(hi.alpha_sum >= 12);

  const HallReport hc = check_hc_exhaustive(g);
  CHECK(hc.verdict == Verdict::satisfied);
  CHECK(hc.subsets_checked == 4095);

  const HallReport suff = check_sufficient(g);
  CHECK(suff.verdict == Verdict::satisfied);
  for (const CellSum& cs : sufficient_sums(g)) CHECK(cs.sum == 1);

  CHECK(complete_pls(g).status == SolveStatus::none);
}

TEST_CASE("empty set and complete squares") {
  CHECK(check_hi(goldwasser(), {}).verdict == Verdict::satisfied);
  Rng rng(1);
  const auto full = random_latin_square(5, rng);
  const HallReport r = check_hc_exhaustive(full);
  CHECK(r.verdict == Verdict::satisfied);
  CHECK(r.subsets_checked == 0);
}

TEST_CASE("order-3 square with a stuck 2x2 block") {
  const auto p = PartialLatinSquare::from_rows({{1, 2, 0}, {2, 1, 0}, {0, 0, 0}});
  const HallReport r = check_hc_exhaustive(p);
  REQUIRE(r.verdict == Verdict::violated);
  REQUIRE(r.certificate);
  // both cells of column 3 in rows 1-2 support only symbol 3
  CHECK(*r.certificate == CellSet{{0, 2}, {1, 2}});
  CHECK(r.alpha_sum == 1);
  CHECK(r.set_size == 2);
  CHECK(check_hi(p, *r.certificate).verdict == Verdict::violated);
  CHECK_FALSE(oracle::hall_inequality(p, *r.certificate));

  const HallReport bottom = check_hi(p, {{2, 0}, {2, 1}});
  CHECK(bottom.verdict == Verdict::violated);
  CHECK(bottom.alpha_sum == 1);
}

TEST_CASE("Goldwasser with an extra 6 in row 4") {
  auto p = goldwasser();
  p.set(3, 2, 6);
  REQUIRE(validate(p));
  const CellSet t{{4, 2}, {5, 2}};
  const HallReport r = check_hi(p, t);
  CHECK((r.verdict == Verdict::violated) == !oracle::hall_inequality(p, t));
  for (int s = 1; s <= 6; ++s) CHECK(alpha(p, s, t) == oracle::alpha(p, s, t));
}

TEST_CASE("limit and argument errors") {
  CHECK_THROWS_AS(check_hc_exhaustive(PartialLatinSquare(5)), Error);
  try {
    check_hc_exhaustive(PartialLatinSquare(5), 24);
    FAIL("limit ignored");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_many_empty_cells);
  }
  CHECK_THROWS_AS(alpha(goldwasser(), 7, {}), Error);
  CHECK_THROWS_AS(alpha(goldwasser(), 1, {{6, 0}}), Error);
}

TEST_CASE("sufficient check never reports a violation") {
  // symbol 1 appears 3 times in order 4, so an empty cell supporting only 1
  // sums to 1/(4-3) = 1; with 2 copies it is 1/2
  auto p = PartialLatinSquare::from_rows({{1, 2, 0, 0}, {2, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  const HallReport r = check_sufficient(p);
  CHECK(r.verdict != Verdict::violated);
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto q = random_scatter(rng, 4 + trial % 3, 12);
    const HallReport s = check_sufficient(q);
    CHECK(s.verdict != Verdict::violated);
    if (s.verdict == Verdict::satisfied && q.empty_cells().size() <= 14)
      CHECK(oracle::hall_condition(q));
  }
}

TEST_CASE("alpha matches the subset oracle") {
  Rng rng(2);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 4;
    const auto p = random_scatter(rng, n, n * n / 2);
    const CellSet t = random_subset(rng, all_cells(n), 0.5);
    if (t.size() > 16) continue;
    for (int s = 1; s <= n; ++s) CHECK(alpha(p, s, t) == oracle::alpha(p, s, t));
  }
}

TEST_CASE("exhaustive check agrees with the oracle and the solver") {
  Rng rng(3);
  int violated = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + trial % 3;
    const auto p = random_scatter(rng, n, n * n);
    if (p.empty_cells().size() > 12) continue;
    const HallReport r = check_hc_exhaustive(p);
    const bool hc = oracle::hall_condition(p);
    CHECK((r.verdict == Verdict::satisfied) == hc);
    if (r.verdict == Verdict::violated) {
      ++violated;
      CHECK_FALSE(oracle::hall_inequality(p, *r.certificate));
    }
    // completable squares satisfy Hall's Condition
    if (complete_pls(p).status == SolveStatus::found) CHECK(r.verdict == Verdict::satisfied);
  }
  CHECK(violated > 0);
}

TEST_CASE("monotonicity in T") {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 3;
    const auto p = random_partial(rng, n, 0.5);
    const CellSet big = random_subset(rng, all_cells(n), 0.6);
    const CellSet small = random_subset(rng, big, 0.5);
    for (int s = 1; s <= n; ++s) CHECK(alpha(p, s, small) <= alpha(p, s, big));
  }
}

TEST_CASE("a filled cell never changes the verdict of one inequality") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    const auto p = random_scatter(rng, n, n * n);
    CellSet t = random_subset(rng, p.empty_cells(), 0.7);
    const bool before = check_hi(p, t).verdict == Verdict::satisfied;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!p.is_empty(i, j)) {
          CellSet with = t;
          with.push_back({i, j});
          CHECK((check_hi(p, with).verdict == Verdict::satisfied) == before);
        }
  }
}

TEST_CASE("lower bound ceil(t/k) for a symbol missing from k rows and k columns") {
  Rng rng(6);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + trial % 4;
    const auto p = random_partial(rng, n, 0.4);
    const CellSet empty = p.empty_cells();
    for (int s = 1; s <= n; ++s) {
      const int k = n - nu(p, s);  // a symbol in ν cells misses n − ν rows and columns
      if (k == 0) continue;
      const CellSet t = random_subset(rng, empty, 0.6);
      int supporting = 0;
      for (const Cell& c : t) supporting += p.supports(c, s) ? 1 : 0;
      CHECK(alpha(p, s, t) >= (supporting + k - 1) / k);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("closed form on rectangles") {
  Rng rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 6;
    std::uniform_int_distribution<int> d(1, n);
    const int r = d(rng), s = d(rng);
    PartialLatinSquare p = gen_rectangle(n, r, s, rng);
    if (r <= s && s < n && trial % 2 == 0) p = gen_short_rectangle(n, r, s, rng);
    const CellSet h = top_rows(n, r);
    for (int sym = 1; sym <= n; ++sym) CHECK(alpha_closed_rectangle(p, sym) == alpha(p, sym, h));
  }
  Rng r2(1);
  const auto full = random_latin_square(4, r2);
  for (int s = 1; s <= 4; ++s) CHECK(alpha_closed_rectangle(full, s) == 4);
  CHECK_THROWS_AS(alpha_closed_rectangle(goldwasser(), 1), Error);
}

TEST_CASE("closed form on rectangles with holes") {
  Rng rng(8);
  int with_holes = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 6;
    std::uniform_int_distribution<int> d(1, n);
    const int r = d(rng), s = d(rng);
    const auto p = punch_holes(gen_rectangle(n, r, s, rng), r, s, 0.5, rng);
    const auto shape = as_rectangle_with_holes(p);
    REQUIRE(shape);
    with_holes += shape->holes.empty() ? 0 : 1;
    const CellSet h = top_rows(n, r);
    const CellSet j = random_subset(rng, shape->holes, 0.5);
    for (int sym = 1; sym <= n; ++sym) {
      CHECK(alpha_closed_holes(p, sym, j) == alpha(p, sym, difference(h, j)));
      CHECK(alpha_closed_holes(p, sym, {}) == alpha(p, sym, h));
      CHECK(alpha_closed_holes(p, sym, shape->holes) == alpha(p, sym, difference(h, shape->holes)));
    }
  }
  CHECK(with_holes > 50);

  const auto p = PartialLatinSquare::from_rows({{1, 0, 3}, {2, 3, 1}, {0, 0, 0}});
  CHECK_THROWS_AS(alpha_closed_holes(p, 1, {{1, 1}}), Error);
  try {
    alpha_closed_holes(p, 1, {{2, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_subset);
  }
}
