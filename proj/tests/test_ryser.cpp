#include "doctest.h"
#include "oracles.hpp"
#include "pls/generate.hpp"
#include "pls/hall.hpp"
#include "pls/ryser.hpp"
#include "pls/solver.hpp"

using namespace pls;

namespace {

PartialLatinSquare random_rectangle(Rng& rng, int n) {
  std::uniform_int_distribution<int> d(0, n);
  int r = d(rng), s = d(rng);
  if (r > s) std::swap(r, s);
  if (s < n && r + s > n && rng() % 2 == 0) return gen_short_rectangle(n, r, s, rng);
  return gen_rectangle(n, r, s, rng);
}

}  // namespace

TEST_CASE("Ryser deficits") {
  const auto p = PartialLatinSquare::from_rows({{1, 2, 0}, {2, 1, 0}, {0, 0, 0}});
  const RyserReport r = check_ryser(p);
  CHECK_FALSE(r.completable);
  CHECK(r.rows == 2);
  CHECK(r.cols == 2);
  CHECK(r.deficits == std::vector<int>{0, 0, 0, 1});
  CHECK_FALSE(oracle::completable(p));
  CHECK_FALSE(check_hi_equivalence(p));
  try {
    complete_rectangle(p);
    FAIL("completed a Ryser-violating rectangle");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ryser_violated);
    CHECK(std::string(e.what()).find("symbol 3 short by 1") != std::string::npos);
  }

  Rng rng(1);
  const auto full = random_latin_square(5, rng);
  CHECK(check_ryser(full).completable);
  CHECK(complete_rectangle(full) == full);
  CHECK(check_hi_equivalence(PartialLatinSquare(4)));
  CHECK_THROWS_AS(check_ryser(PartialLatinSquare::from_rows({{0, 1}, {0, 0}})), Error);
}

TEST_CASE("small completions") {
  const auto empty = complete_rectangle(PartialLatinSquare(5));
  CHECK(validate(empty));
  CHECK(empty.is_complete());

  const auto one = complete_rectangle(PartialLatinSquare::from_rows({{1, 0}, {0, 0}}));
  CHECK(one == PartialLatinSquare::from_rows({{1, 2}, {2, 1}}));
}

TEST_CASE("random rectangles: completion, HI(H) and the solver agree") {
  Rng rng(2);
  int violating = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 6;
    const auto p = random_rectangle(rng, n);
    const RyserReport r = check_ryser(p);
    const bool hi = check_hi_equivalence(p);
    CHECK(hi == r.completable);
    const CompletionResult s = complete_pls(p);
    REQUIRE(s.status != SolveStatus::budget_exhausted);
    CHECK((s.status == SolveStatus::found) == r.completable);
    if (r.completable) {
      const auto q = complete_rectangle(p);
      CHECK(extends(q, p));
    } else {
      ++violating;
      CHECK_THROWS_AS(complete_rectangle(p), Error);
    }
  }
  CHECK(violating > 10);
}

TEST_CASE("realize the smallest framework") {
  const Framework f{1, 1, 2, {{1}}, {{1}}};
  const auto p = realize_framework(f, 2);
  CHECK(p == PartialLatinSquare::from_rows({{0, 2}, {2, 1}}));
  CHECK(framework_from_lshape(p) == f);
}

TEST_CASE("realization errors") {
  CHECK_THROWS_AS(realize_framework({1, 1, 2, {{1}}, {{2}}}, 2), Error);
  try {
    realize_framework({1, 1, 2, {{1}}, {{1}}}, 1);
    FAIL("small order accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::order_too_small);
  }
  try {
    realize_framework({1, 1, 2, {{1}}, {{2}}}, 3);
    FAIL("unbalanced framework accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_balanced);
  }
}

TEST_CASE("realization round trip on random L-shapes") {
  Rng rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 9;
    std::uniform_int_distribution<int> d(0, n);
    const int r = d(rng);
    const int s = std::uniform_int_distribution<int>(0, n - r)(rng);
    const auto l = gen_lshape(n, r, s, rng);
    const Framework f = framework_from_lshape(l);
    const auto p = realize_framework(f, n);
    CHECK(validate(p));
    CHECK(framework_from_lshape(p) == f);
    const auto shape = as_lshape(p);
    REQUIRE(shape);
    // a larger order realizes the same framework
    const auto big = realize_framework(f, n + 2);
    CHECK(validate(big));
    CHECK(framework_from_lshape(big).row_lists == f.row_lists);
    CHECK(framework_from_lshape(big).col_lists == f.col_lists);
  }
}
