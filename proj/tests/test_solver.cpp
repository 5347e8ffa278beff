#include "doctest.h"
#include "oracles.hpp"
#include "pls/generate.hpp"
#include "pls/ryser.hpp"
#include "pls/solver.hpp"
#include "support.hpp"

using namespace pls;

TEST_CASE("counts of small latin squares") {
  CHECK(enumerate_small(PartialLatinSquare(1), 100).count == 1);
  CHECK(enumerate_small(PartialLatinSquare(2), 100).count == 2);
  CHECK(enumerate_small(PartialLatinSquare(3), 100).count == 12);
  CHECK(enumerate_small(PartialLatinSquare(4), 1000).count == 576);
  const CountResult capped = enumerate_small(PartialLatinSquare(4), 10);
  CHECK(capped.count == 10);
  CHECK(capped.capped);
}

TEST_CASE("counts match the plain oracle") {
  Rng rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    PartialLatinSquare p(n);
    std::uniform_int_distribution<int> cell(0, n - 1), sym(1, n);
    for (int k = 0; k < n + trial % 5; ++k) {
      const Cell c{cell(rng), cell(rng)};
      const int s = sym(rng);
      if (p.is_empty(c) && p.supports(c, s)) p.set(c, s);
    }
    const CountResult r = enumerate_small(p, 1'000'000);
    CHECK(r.count == oracle::count_completions(p));
    CHECK((complete_pls(p).status == SolveStatus::found) == oracle::completable(p));
  }
}

TEST_CASE("completion results") {
  const CompletionResult g = complete_pls(testing_support::goldwasser());
  CHECK(g.status == SolveStatus::none);
  CHECK_FALSE(g.completion);

  Rng rng(2);
  const auto full = random_latin_square(6, rng);
  const CompletionResult f = complete_pls(full);
  REQUIRE(f.status == SolveStatus::found);
  CHECK(*f.completion == full);

  const auto rect = gen_rectangle(7, 3, 4, rng);
  const CompletionResult r = complete_pls(rect);
  REQUIRE(r.status == SolveStatus::found);
  CHECK(extends(*r.completion, rect));
  CHECK(extends(complete_rectangle(rect), rect));
}

TEST_CASE("budget exhaustion is not a verdict") {
  const CompletionResult r = complete_pls(PartialLatinSquare(9), 3);
  CHECK(r.status == SolveStatus::budget_exhausted);
  CHECK(r.nodes <= 3);
  CHECK(enumerate_small(PartialLatinSquare(5), 1'000'000, 50).budget_exhausted);
}

TEST_CASE("deterministic output") {
  Rng rng(3);
  const auto l = gen_lshape(8, 4, 5, rng);
  const CompletionResult a = complete_pls(l);
  const CompletionResult b = complete_pls(l);
  CHECK(a.completion == b.completion);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("framework latinization") {
  const Framework empty_entry{1, 1, 4, {{1, 2}}, {{3, 4}}};
  CHECK(latinize_framework(empty_entry).status == SolveStatus::none);

  const Framework single{1, 1, 5, {{5}}, {{5}}};
  const LatinizationResult one = latinize_framework(single);
  REQUIRE(one.status == SolveStatus::found);
  CHECK(one.latinization->at(0, 0) == 5);

  const Framework two{2, 2, 2, {{1, 2}, {1, 2}}, {{1, 2}, {1, 2}}};
  CHECK(enumerate_small(two, 100).count == 2);

  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    std::uniform_int_distribution<int> d(0, n);
    const Framework f = framework_from_lshape(gen_lshape(n, d(rng), d(rng), rng));
    const LatinizationResult r = latinize_framework(f);
    REQUIRE(r.status == SolveStatus::found);
    CHECK(is_latinization(f, *r.latinization));
  }
}

TEST_CASE("collected solutions are distinct and valid") {
  const auto p = PartialLatinSquare::from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  const auto all = collect_solutions(grid_problem(p), 100);
  CHECK(all.size() == 4);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].at(0, 0) == 1);
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
  }
}
