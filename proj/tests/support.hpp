#pragma once

#include <string>

#include "pls/core.hpp"
#include "pls/hypergraph.hpp"
#include "pls/io.hpp"

namespace testing_support {

inline std::string data_path(const std::string& name) { return std::string(PLS_TEST_DATA) + "/" + name; }

inline pls::PartialLatinSquare goldwasser() {
  return pls::PartialLatinSquare::from_rows({{1, 2, 3, 4, 5, 6},
                                             {3, 6, 1, 2, 4, 5},
                                             {5, 4, 2, 6, 3, 1},
                                             {2, 5, 0, 0, 0, 0},
                                             {4, 1, 0, 0, 0, 0},
                                             {6, 3, 0, 0, 0, 0}});
}

inline pls::Hypergraph four_copies() {
  return {4, {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}}};
}

// Incidence rows (1,0,0,1,1,1), (1,1,0,0,1,1), (1,1,1,0,0,1), (1,1,1,1,0,0),
// (0,1,1,1,1,0), (0,0,1,1,1,1): row = vertex, column = edge.
inline pls::Hypergraph six_cycle() {
  return {6, {{0, 1, 2, 3}, {1, 2, 3, 4}, {2, 3, 4, 5}, {0, 3, 4, 5}, {0, 1, 4, 5}, {0, 1, 2, 5}}};
}

inline pls::Hypergraph uncolorable_six() {
  return {6, {{0, 1, 3, 4}, {0, 2, 4, 5}, {2, 3, 4, 5}, {1, 2, 4, 5}, {0, 1, 3, 5}, {0, 1, 2, 3}}};
}

inline pls::Hypergraph all_four_subsets_of_five() {
  return {5, {{1, 2, 3, 4}, {0, 2, 3, 4}, {0, 1, 3, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}}};
}

}  // namespace testing_support
