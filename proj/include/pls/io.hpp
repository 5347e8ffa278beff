#pragma once

// Text formats:
//
//   .pls  line 1 = n, then n lines of n whitespace-separated tokens, each a
//         decimal symbol or "." for an empty cell.
//   .fw   line 1 = "r s t", then r row lists and s column lists, one per
//         line, symbols separated by spaces; an empty list is a lone "-".
//   .hg   line 1 = u, then u lines of 4 vertex indices (0-based).
//
// Lines whose first non-blank character is '#' and blank lines are ignored.
// Any path ending in ".json" selects the structured form instead.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pls/core.hpp"
#include "pls/hypergraph.hpp"

namespace pls {

PartialLatinSquare parse_pls(std::string_view text);
std::string to_pls_text(const PartialLatinSquare& p);

Framework parse_framework(std::string_view text);
std::string to_fw_text(const Framework& f);

Hypergraph parse_hypergraph(std::string_view text);
std::string to_hg_text(const Hypergraph& h);

/// Rows of a latin rectangle, space separated.
std::string to_grid_text(const SymbolGrid& grid);

nlohmann::json to_json(const PartialLatinSquare& p);
nlohmann::json to_json(const Framework& f);
nlohmann::json to_json(const Hypergraph& h);
nlohmann::json to_json(const SymbolGrid& g);

PartialLatinSquare pls_from_json(const nlohmann::json& j);
Framework framework_from_json(const nlohmann::json& j);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

bool is_json_path(const std::filesystem::path& path);

/// Chooses text or JSON by extension. JSON text is also recognized by a
/// leading '{' so that stdin can carry either form.
PartialLatinSquare read_pls(const std::string& content, bool json);
Framework read_framework(const std::string& content, bool json);
Hypergraph read_hypergraph(const std::string& content, bool json);

bool looks_like_json(std::string_view content);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace pls
