#include "pls/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pls {

namespace {

struct Token {
  std::string_view text;
  int line;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      if (i >= raw.size()) break;
      if (line.tokens.empty() && raw[i] == '#') break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      line.tokens.push_back({raw.substr(i, j - i), number, static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

int parse_int(const Token& tok, const char* what) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(tok.line, tok.column,
                     std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
  }
  return value;
}

int end_line(const std::vector<Line>& lines) {
  return lines.empty() ? 1 : lines.back().number + 1;
}

void expect_tokens(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count) {
    const Token& at = line.tokens.size() > count ? line.tokens[count] : line.tokens.back();
    throw ParseError(line.number, at.column,
                     std::string("expected ") + std::to_string(count) + " " + what + ", got " +
                         std::to_string(line.tokens.size()));
  }
}

std::string join(const SymbolSet& set) {
  if (set.empty()) return "-";
  std::string out;
  for (int s : set) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s);
  }
  return out;
}

std::pair<int, int> line_col_of(std::string_view text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

nlohmann::json parse_json_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, col, "invalid JSON");
  }
}

template <typename F>
auto with_schema_errors(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, std::string("unexpected JSON structure: ") + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------------------

PartialLatinSquare parse_pls(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing order line");
  expect_tokens(lines[0], 1, "token (the order n)");
  const int n = parse_int(lines[0].tokens[0], "order");
  if (n < 1) throw ParseError(lines[0].number, lines[0].tokens[0].column, "order must be >= 1");

  const int given = static_cast<int>(lines.size()) - 1;
  if (given < n) {
    throw ParseError(end_line(lines), 1, "expected " + std::to_string(n) + " rows, got " +
                                             std::to_string(given));
  }
  if (given > n) {
    throw ParseError(lines[static_cast<std::size_t>(n) + 1].number, 1,
                     "expected " + std::to_string(n) + " rows, got " + std::to_string(given));
  }

  PartialLatinSquare p(n);
  for (int i = 0; i < n; ++i) {
    const Line& line = lines[static_cast<std::size_t>(i) + 1];
    expect_tokens(line, static_cast<std::size_t>(n), "cells");
    for (int j = 0; j < n; ++j) {
      const Token& tok = line.tokens[static_cast<std::size_t>(j)];
      if (tok.text == ".") continue;
      const int v = parse_int(tok, "symbol or '.'");
      if (v < 1 || v > n) {
        throw ParseError(tok.line, tok.column,
                         "symbol " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
      p.set(i, j, v);
    }
  }
  require_valid(p);
  return p;
}

std::string to_pls_text(const PartialLatinSquare& p) {
  std::string out = std::to_string(p.order()) + "\n";
  for (int i = 0; i < p.order(); ++i) {
    for (int j = 0; j < p.order(); ++j) {
      if (j > 0) out += ' ';
      out += p.is_empty(i, j) ? std::string(".") : std::to_string(p.at(i, j));
    }
    out += '\n';
  }
  return out;
}

Framework parse_framework(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing 'r s t' header");
  expect_tokens(lines[0], 3, "header values (r s t)");
  Framework f;
  f.rows = parse_int(lines[0].tokens[0], "r");
  f.cols = parse_int(lines[0].tokens[1], "s");
  f.symbols = parse_int(lines[0].tokens[2], "t");
  for (std::size_t k = 0; k < 3; ++k) {
    const int v = k == 0 ? f.rows : k == 1 ? f.cols : f.symbols;
    if (v < 0) throw ParseError(lines[0].number, lines[0].tokens[k].column, "must be >= 0");
  }

  const int expected = f.rows + f.cols;
  const int given = static_cast<int>(lines.size()) - 1;
  if (given != expected) {
    const int at = given < expected ? end_line(lines)
                                    : lines[static_cast<std::size_t>(expected) + 1].number;
    throw ParseError(at, 1, "expected " + std::to_string(expected) + " list lines, got " +
                                std::to_string(given));
  }

  for (int k = 0; k < expected; ++k) {
    const Line& line = lines[static_cast<std::size_t>(k) + 1];
    SymbolSet list;
    if (!(line.tokens.size() == 1 && line.tokens[0].text == "-")) {
      for (const Token& tok : line.tokens) {
        const int v = parse_int(tok, "symbol or '-'");
        if (v < 1 || v > f.symbols) {
          throw ParseError(tok.line, tok.column, "symbol " + std::to_string(v) + " outside 1.." +
                                                     std::to_string(f.symbols));
        }
        if (!list.insert(v).second) {
          throw ParseError(tok.line, tok.column, "repeated symbol " + std::to_string(v));
        }
      }
    }
    (k < f.rows ? f.row_lists : f.col_lists).push_back(std::move(list));
  }
  return f;
}

std::string to_fw_text(const Framework& f) {
  std::string out = std::to_string(f.rows) + " " + std::to_string(f.cols) + " " +
                    std::to_string(f.symbols) + "\n";
  for (const auto& list : f.row_lists) out += join(list) + "\n";
  for (const auto& list : f.col_lists) out += join(list) + "\n";
  return out;
}

Hypergraph parse_hypergraph(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing vertex count");
  expect_tokens(lines[0], 1, "token (u)");
  Hypergraph h;
  h.vertices = parse_int(lines[0].tokens[0], "u");
  if (h.vertices < 1) throw ParseError(lines[0].number, lines[0].tokens[0].column, "u must be >= 1");

  const int given = static_cast<int>(lines.size()) - 1;
  if (given != h.vertices) {
    const int at = given < h.vertices ? end_line(lines)
                                      : lines[static_cast<std::size_t>(h.vertices) + 1].number;
    throw ParseError(at, 1, "expected " + std::to_string(h.vertices) + " edges, got " +
                                std::to_string(given));
  }
  for (std::size_t k = 1; k < lines.size(); ++k) {
    std::vector<int> edge;
    for (const Token& tok : lines[k].tokens) {
      const int v = parse_int(tok, "vertex index");
      if (v < 0 || v >= h.vertices) {
        throw ParseError(tok.line, tok.column, "vertex " + std::to_string(v) + " outside 0.." +
                                                   std::to_string(h.vertices - 1));
      }
      edge.push_back(v);
    }
    h.edges.push_back(std::move(edge));
  }
  return h;
}

std::string to_hg_text(const Hypergraph& h) {
  std::string out = std::to_string(h.vertices) + "\n";
  for (const auto& edge : h.edges) {
    for (std::size_t k = 0; k < edge.size(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(edge[k]);
    }
    out += '\n';
  }
  return out;
}

std::string to_grid_text(const SymbolGrid& grid) {
  std::string out;
  for (int i = 0; i < grid.rows; ++i) {
    for (int j = 0; j < grid.cols; ++j) {
      if (j > 0) out += ' ';
      out += grid.at(i, j) == kEmpty ? std::string(".") : std::to_string(grid.at(i, j));
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const PartialLatinSquare& p) {
  nlohmann::json grid = nlohmann::json::array();
  for (int i = 0; i < p.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < p.order(); ++j) {
      if (p.is_empty(i, j)) {
        row.push_back(nullptr);
      } else {
        row.push_back(p.at(i, j));
      }
    }
    grid.push_back(std::move(row));
  }
  return {{"n", p.order()}, {"grid", std::move(grid)}};
}

nlohmann::json to_json(const Framework& f) {
  return {{"r", f.rows},
          {"s", f.cols},
          {"t", f.symbols},
          {"row_lists", f.row_lists},
          {"col_lists", f.col_lists}};
}

nlohmann::json to_json(const Hypergraph& h) {
  return {{"u", h.vertices}, {"edges", h.edges}};
}

nlohmann::json to_json(const SymbolGrid& g) {
  nlohmann::json grid = nlohmann::json::array();
  for (int i = 0; i < g.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < g.cols; ++j) row.push_back(g.at(i, j));
    grid.push_back(std::move(row));
  }
  return {{"rows", g.rows}, {"cols", g.cols}, {"grid", std::move(grid)}};
}

PartialLatinSquare pls_from_json(const nlohmann::json& j) {
  return with_schema_errors([&] {
    const int n = j.at("n").get<int>();
    if (n < 1) throw ParseError(1, 1, "order must be >= 1");
    const auto& grid = j.at("grid");
    if (!grid.is_array() || static_cast<int>(grid.size()) != n) {
      throw ParseError(1, 1, "grid must have " + std::to_string(n) + " rows");
    }
    PartialLatinSquare p(n);
    for (int r = 0; r < n; ++r) {
      const auto& row = grid[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw ParseError(1, 1, "grid row " + std::to_string(r + 1) + " must have " +
                                   std::to_string(n) + " cells");
      }
      for (int c = 0; c < n; ++c) {
        const auto& cell = row[static_cast<std::size_t>(c)];
        if (cell.is_null()) continue;
        const int v = cell.get<int>();
        if (v < 1 || v > n) {
          throw ParseError(1, 1, "symbol " + std::to_string(v) + " at " + to_string(Cell{r, c}) +
                                     " outside 1.." + std::to_string(n));
        }
        p.set(r, c, v);
      }
    }
    require_valid(p);
    return p;
  });
}

Framework framework_from_json(const nlohmann::json& j) {
  return with_schema_errors([&] {
    Framework f;
    f.rows = j.at("r").get<int>();
    f.cols = j.at("s").get<int>();
    f.symbols = j.at("t").get<int>();
    f.row_lists = j.at("row_lists").get<std::vector<SymbolSet>>();
    f.col_lists = j.at("col_lists").get<std::vector<SymbolSet>>();
    try {
      require_well_formed(f);
    } catch (const Error& e) {
      throw ParseError(1, 1, e.what());
    }
    return f;
  });
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  return with_schema_errors([&] {
    Hypergraph h;
    h.vertices = j.at("u").get<int>();
    h.edges = j.at("edges").get<std::vector<std::vector<int>>>();
    for (const auto& edge : h.edges)
      for (int v : edge)
        if (v < 0 || v >= h.vertices)
          throw ParseError(1, 1, "vertex " + std::to_string(v) + " out of range");
    return h;
  });
}

bool is_json_path(const std::filesystem::path& path) { return path.extension() == ".json"; }

bool looks_like_json(std::string_view content) {
  for (char c : content) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

PartialLatinSquare read_pls(const std::string& content, bool json) {
  return json ? pls_from_json(parse_json_text(content)) : parse_pls(content);
}

Framework read_framework(const std::string& content, bool json) {
  return json ? framework_from_json(parse_json_text(content)) : parse_framework(content);
}

Hypergraph read_hypergraph(const std::string& content, bool json) {
  return json ? hypergraph_from_json(parse_json_text(content)) : parse_hypergraph(content);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_argument, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path.string());
  out << content;
}

}  // namespace pls
