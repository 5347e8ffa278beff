// plscert: command-line front end. Artifacts go to stdout (or -o), reports
// and diagnostics to stderr.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pls/generate.hpp"
#include "pls/hall.hpp"
#include "pls/holes.hpp"
#include "pls/io.hpp"
#include "pls/reduction.hpp"
#include "pls/ryser.hpp"
#include "pls/solver.hpp"

namespace {

using namespace pls;
using nlohmann::json;

constexpr int kExitInput = 4;

struct Input {
  std::string content;
  bool json = false;
};

Input read_input(const std::string& path) {
  Input in;
  if (path.empty() || path == "-") {
    in.content.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    in.json = looks_like_json(in.content);
  } else {
    in.content = read_file(path);
    in.json = is_json_path(path) || looks_like_json(in.content);
  }
  return in;
}

// Writes an artifact in text form, or as JSON when asked or when the output
// path says so.
void emit(const std::string& out_path, bool as_json, const std::string& text, const json& j) {
  const bool use_json = as_json || (!out_path.empty() && is_json_path(out_path));
  const std::string body = use_json ? j.dump(2) + "\n" : text;
  if (out_path.empty() || out_path == "-") std::cout << body;
  else write_file(out_path, body);
}

void emit(const std::string& out, bool as_json, const PartialLatinSquare& p) {
  emit(out, as_json, to_pls_text(p), to_json(p));
}

std::string one_based(const CellSet& cells) { return to_string(cells); }

int hall_limit(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PLS_HALL_LIMIT")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(Errc::invalid_argument, "PLS_HALL_LIMIT is not an integer");
    }
  }
  return kDefaultEmptyCellLimit;
}

int report_hall(const HallReport& rep) {
  std::cerr << "verdict: " << to_string(rep.verdict) << "\n"
            << "method: " << to_string(rep.method) << "\n";
  if (rep.method == HallMethod::exhaustive) std::cerr << "subsets: " << rep.subsets_checked << "\n";
  if (rep.certificate) {
    if (rep.verdict == Verdict::violated)
      std::cerr << "certificate: " << one_based(*rep.certificate) << "\n"
                << "alpha-sum: " << rep.alpha_sum << " < " << rep.set_size << "\n";
    else
      std::cerr << "first-cell-below-one: " << one_based(*rep.certificate) << "\n";
  }
  switch (rep.verdict) {
    case Verdict::satisfied: return 0;
    case Verdict::violated: return 1;
    case Verdict::inconclusive: return 2;
  }
  return 2;
}

void report_violation(const HallViolation& v, const PartialLatinSquare& p) {
  const HallReport check = check_hi(p, v.tested());
  std::cerr << "B': " << one_based(v.holes()) << "\n"
            << "tested: " << (v.code() == Errc::flow_deficit ? "H - B'" : "B'") << " ("
            << v.tested().size() << " cells)\n"
            << "alpha-sum: " << check.alpha_sum << " < " << check.set_size << "\n";
}

json report_json(const ReductionReport& r) {
  return {{"u", r.u},
          {"order", r.order},
          {"a_symbols", r.a_count},
          {"b_symbols", r.b_count},
          {"c_symbols", r.c_count},
          {"empty_cells", r.empty_cells},
          {"sufficient_condition", to_string(r.sufficient)},
          {"every_sum_is_one", r.every_sum_is_one},
          {"support_patterns",
           {{"two_b", r.pattern_counts[0]},
            {"one_b_two_a", r.pattern_counts[1]},
            {"four_c", r.pattern_counts[2]},
            {"other", r.other_patterns}}}};
}

int solve_exit(SolveStatus s) {
  switch (s) {
    case SolveStatus::found: return 0;
    case SolveStatus::none: std::cerr << "incompletable\n"; return 1;
    case SolveStatus::budget_exhausted: std::cerr << "budget-exhausted\n"; return 2;
  }
  return 2;
}

constexpr const char* kGoldwasser =
    "6\n"
    "1 2 3 4 5 6\n"
    "3 6 1 2 4 5\n"
    "5 4 2 6 3 1\n"
    "2 5 . . . .\n"
    "4 1 . . . .\n"
    "6 3 . . . .\n";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial latin square completability: Hall's Condition, Ryser completion, "
               "hole completion, framework realization and the hardness gadget."};
  app.require_subcommand(1);

  std::string input;
  std::string out;
  bool as_json = false;
  std::uint64_t budget = kDefaultBudget;

  // check-hall
  auto* hall = app.add_subcommand("check-hall", "Check Hall's Condition");
  bool exhaustive = false;
  bool sufficient = false;
  std::optional<int> limit;
  hall->add_option("file", input, "Input .pls (default stdin)");
  auto* ex_flag = hall->add_flag("--exhaustive", exhaustive, "Check every set of empty cells");
  hall->add_flag("--sufficient", sufficient, "Check the per-cell fractional sufficient condition")
      ->excludes(ex_flag);
  hall->add_option("--limit", limit, "Maximum empty cells for --exhaustive (env PLS_HALL_LIMIT)");

  auto* ryser = app.add_subcommand("check-ryser", "Ryser's condition for a rectangle");
  ryser->add_option("file", input, "Input .pls (default stdin)");

  auto* complete = app.add_subcommand("complete", "Complete a partial latin square");
  std::string method = "auto";
  complete->add_option("file", input, "Input .pls (default stdin)");
  complete->add_option("--method", method, "auto|rectangle|holes|solver")
      ->check(CLI::IsMember({"auto", "rectangle", "holes", "solver"}));
  complete->add_option("--budget", budget, "Solver node budget");

  auto* realize = app.add_subcommand("realize", "Realize a balanced framework");
  int order = 0;
  realize->add_option("file", input, "Input .fw (default stdin)");
  realize->add_option("--order", order, "Order n >= max{t, r+s}")->required();

  auto* reduce = app.add_subcommand("reduce", "Reduce a 4-uniform 4-regular hypergraph");
  bool sparse = false;
  std::string report_path;
  reduce->add_option("file", input, "Input .hg (default stdin)");
  reduce->add_flag("--sparse", sparse, "Clear the filled block below and right of the hole");
  reduce->add_option("--report", report_path, "Also write the JSON report to this path");

  auto* solve = app.add_subcommand("solve", "Backtracking completion");
  solve->add_option("file", input, "Input .pls (default stdin)");
  solve->add_option("--budget", budget, "Node budget");

  auto* latinize = app.add_subcommand("latinize", "Backtracking latinization of a framework");
  latinize->add_option("file", input, "Input .fw (default stdin)");
  latinize->add_option("--budget", budget, "Node budget");

  auto* demo = app.add_subcommand("demo", "Built-in instances");
  std::string demo_name;
  demo->add_option("name", demo_name, "goldwasser")->required()->check(CLI::IsMember({"goldwasser"}));

  auto* gen = app.add_subcommand("gen", "Random instances from scrambled cyclic squares");
  gen->require_subcommand(1);
  int gen_order = 6;
  int gen_rows = 3;
  int gen_cols = 3;
  double rate = 0.5;
  std::uint64_t seed = 1;
  bool short_rect = false;
  auto add_gen_opts = [&](CLI::App* sub) {
    sub->add_option("--order", gen_order, "Order n")->check(CLI::PositiveNumber);
    sub->add_option("--rows", gen_rows, "Filled rows r");
    sub->add_option("--cols", gen_cols, "Filled columns s");
    sub->add_option("--seed", seed, "Random seed");
    sub->add_flag("--short", short_rect,
                  "Fill from only s symbols so that Ryser's condition fails when r+s > n");
  };
  auto* gen_rect = gen->add_subcommand("rectangle", "Upper-left rectangle");
  add_gen_opts(gen_rect);
  auto* gen_holes = gen->add_subcommand("holes", "Rectangle with at most one hole per column");
  add_gen_opts(gen_holes);
  gen_holes->add_option("--rate", rate, "Per-column hole probability")->check(CLI::Range(0.0, 1.0));

  for (auto* sub : {complete, realize, reduce, solve, latinize, demo, gen_rect, gen_holes}) {
    sub->add_option("-o,--output", out, "Write the artifact here (.json selects JSON)");
    sub->add_flag("--json", as_json, "Write the artifact as JSON");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*hall) {
      const Input in = read_input(input);
      const PartialLatinSquare p = read_pls(in.content, in.json);
      if (sufficient) return report_hall(check_sufficient(p));
      const int lim = hall_limit(limit);
      const int empties = static_cast<int>(p.empty_cells().size());
      if (empties > lim) {
        if (exhaustive) {
          std::cerr << "error: too-many-empty-cells: " << empties << " empty cells exceed the limit of "
                    << lim << "\n";
          return 3;
        }
        return report_hall(check_sufficient(p));
      }
      return report_hall(check_hc_exhaustive(p, lim));
    }

    if (*ryser) {
      const Input in = read_input(input);
      const RyserReport rep = check_ryser(read_pls(in.content, in.json));
      std::cerr << "verdict: " << (rep.completable ? "completable" : "not-completable") << "\n"
                << "rectangle: " << rep.rows << "x" << rep.cols << "\n";
      for (std::size_t s = 1; s < rep.deficits.size(); ++s)
        if (rep.deficits[s] > 0) std::cerr << "deficit: symbol " << s << " short by " << rep.deficits[s] << "\n";
      return rep.completable ? 0 : 1;
    }

    if (*complete) {
      const Input in = read_input(input);
      const PartialLatinSquare p = read_pls(in.content, in.json);
      std::string chosen = method;
      if (chosen == "auto") {
        const ShapeClass shape = classify_shape(p);
        chosen = std::holds_alternative<Rectangle>(shape)             ? "rectangle"
                 : std::holds_alternative<RectangleWithHoles>(shape) ? "holes"
                                                                      : "solver";
      }
      std::cerr << "method: " << chosen << "\n";
      if (chosen == "rectangle") {
        emit(out, as_json, complete_rectangle(p));
        return 0;
      }
      if (chosen == "holes") {
        try {
          emit(out, as_json, complete_with_holes(p));
          return 0;
        } catch (const HallViolation& v) {
          std::cerr << "error: " << errc_name(v.code()) << ": " << v.what() << "\n";
          report_violation(v, p);
          return 1;
        }
      }
      const CompletionResult r = complete_pls(p, budget);
      if (r.completion) emit(out, as_json, *r.completion);
      return solve_exit(r.status);
    }

    if (*realize) {
      const Input in = read_input(input);
      emit(out, as_json, realize_framework(read_framework(in.content, in.json), order));
      return 0;
    }

    if (*reduce) {
      const Input in = read_input(input);
      const Hypergraph h = read_hypergraph(in.content, in.json);
      const PartialLatinSquare q = reduce_to_pls(h);
      json rep = report_json(reduction_report(h, q));
      rep["mode"] = sparse ? "sparse" : "dense";
      const PartialLatinSquare result = epsilon_variant(q, sparse ? EpsilonMode::sparse : EpsilonMode::dense);
      if (sparse) {
        rep["sparse_filled_cells"] = result.filled_count();
        rep["sparse_sufficient_condition"] = to_string(check_sufficient(result).verdict);
      }
      emit(out, as_json, result);
      std::cerr << rep.dump(2) << "\n";
      if (!report_path.empty()) write_file(report_path, rep.dump(2) + "\n");
      return 0;
    }

    if (*solve) {
      const Input in = read_input(input);
      const CompletionResult r = complete_pls(read_pls(in.content, in.json), budget);
      if (r.completion) emit(out, as_json, *r.completion);
      std::cerr << "nodes: " << r.nodes << "\n";
      return solve_exit(r.status);
    }

    if (*latinize) {
      const Input in = read_input(input);
      const LatinizationResult r = latinize_framework(read_framework(in.content, in.json), budget);
      if (r.latinization) emit(out, as_json, to_grid_text(*r.latinization), to_json(*r.latinization));
      std::cerr << "nodes: " << r.nodes << "\n";
      return solve_exit(r.status);
    }

    if (*demo) {
      emit(out, as_json, parse_pls(kGoldwasser));
      return 0;
    }

    if (*gen) {
      Rng rng(seed);
      PartialLatinSquare p = short_rect ? gen_short_rectangle(gen_order, gen_rows, gen_cols, rng)
                                        : gen_rectangle(gen_order, gen_rows, gen_cols, rng);
      if (*gen_holes) p = punch_holes(p, gen_rows, gen_cols, rate, rng);
      emit(out, as_json, p);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
