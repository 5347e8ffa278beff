#include "doctest.h"
#include "pls/generate.hpp"
#include "pls/io.hpp"
#include "pls/reduction.hpp"
#include "support.hpp"

using namespace pls;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_pls(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError for: " << text);
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("pls text round trip") {
  const auto g = testing_support::goldwasser();
  CHECK(parse_pls(to_pls_text(g)) == g);
  CHECK(to_pls_text(PartialLatinSquare::from_rows({{1, 0}, {0, 0}})) == "2\n1 .\n. .\n");
  CHECK(parse_pls("# header\n2\n\n1 .\n  # inside\n. 1\n") ==
        PartialLatinSquare::from_rows({{1, 0}, {0, 1}}));
}

TEST_CASE("pls parse errors carry positions") {
  auto e = parse_error("3\n1 2 3\n2 3 1\n");
  CHECK(std::string(e.what()).find("expected 3 rows, got 2") != std::string::npos);

  e = parse_error("2\n1 5\n. .\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 3);

  e = parse_error("2\n1 x\n. .\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 3);

  e = parse_error("2\n1 . .\n. .\n");
  CHECK(e.line() == 2);

  CHECK_THROWS_AS(parse_pls(""), ParseError);
  CHECK_THROWS_AS(parse_pls("0\n"), ParseError);
  try {
    parse_pls("2\n1 1\n. .\n");
    FAIL("duplicate accepted");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::duplicate_in_row);
  }
}

TEST_CASE("framework text round trip") {
  Framework f{2, 1, 3, {{1}, {}}, {{1}}};
  const std::string text = to_fw_text(f);
  CHECK(parse_framework(text) == f);
  CHECK(text.find("-") != std::string::npos);
  CHECK(parse_framework(read_file(testing_support::data_path("tiny.fw"))) ==
        Framework{1, 1, 2, {{1}}, {{1}}});
  CHECK_THROWS_AS(parse_framework("1 1 2\n3\n1\n"), Error);
  CHECK_THROWS_AS(parse_framework("1 1 2\n1\n"), ParseError);
}

TEST_CASE("hypergraph text round trip") {
  const Hypergraph h = testing_support::six_cycle();
  CHECK(parse_hypergraph(to_hg_text(h)) == h);
  CHECK(read_hypergraph(read_file(testing_support::data_path("fig3.hg")), false) == h);
  CHECK_THROWS_AS(parse_hypergraph("1\n0 1 2\n"), ParseError);
}

TEST_CASE("json round trips") {
  Rng rng(4);
  PartialLatinSquare p = gen_lshape(6, 2, 3, rng);
  CHECK(pls_from_json(to_json(p)) == p);
  CHECK(read_pls(to_json(p).dump(), true) == p);
  CHECK(looks_like_json("  {\"order\": 1}"));
  CHECK_FALSE(looks_like_json("3\n"));

  const Framework f = framework_from_lshape(p);
  CHECK(framework_from_json(to_json(f)) == f);
  const Hypergraph h = testing_support::four_copies();
  CHECK(hypergraph_from_json(to_json(h)) == h);

  CHECK(is_json_path("a/b.json"));
  CHECK_FALSE(is_json_path("a/b.pls"));
  CHECK_THROWS_AS(read_pls("{\"order\": ", true), ParseError);
}

TEST_CASE("golden files") {
  CHECK(read_pls(read_file(testing_support::data_path("goldwasser.pls")), false) ==
        testing_support::goldwasser());
  CHECK(to_pls_text(testing_support::goldwasser()) ==
        read_file(testing_support::data_path("goldwasser.golden")));
}
