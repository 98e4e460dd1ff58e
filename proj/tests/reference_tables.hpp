#pragma once

// Cell CSM classes and Chern-Mather classes of Schubert varieties in
// Gr(3, 6), as published. Rows and columns keyed by partition.

#include <string>
#include <utility>
#include <vector>

namespace csm::testing {

struct ReferenceRow {
  std::string alpha;
  std::vector<std::pair<std::string, int>> coeffs;
};

inline const std::vector<ReferenceRow> kCellTable = {
    {"3,3,3", {{"3,3,3", 1}, {"3,3,2", 5}, {"3,2,2", 12}, {"3,3,1", 12}, {"3,3", 20}, {"2,2,2", 20}, {"3,2,1", 34}, {"3,2", 54}, {"2,2,1", 54}, {"3,1,1", 31}, {"2,2", 66}, {"3,1", 57}, {"2,1,1", 57}, {"3", 27}, {"2,1", 75}, {"1,1,1", 27}, {"2", 27}, {"1,1", 27}, {"1", 9}, {"0", 1}}},
    {"3,3,2", {{"3,3,2", 1}, {"3,2,2", 4}, {"3,3,1", 4}, {"3,3", 8}, {"2,2,2", 8}, {"3,2,1", 15}, {"3,2", 27}, {"2,2,1", 27}, {"3,1,1", 17}, {"2,2", 39}, {"3,1", 34}, {"2,1,1", 34}, {"3", 18}, {"2,1", 51}, {"1,1,1", 18}, {"2", 21}, {"1,1", 21}, {"1", 8}, {"0", 1}}},
    {"3,2,2", {{"3,2,2", 1}, {"2,2,2", 3}, {"3,2,1", 4}, {"3,2", 8}, {"2,2,1", 11}, {"3,1,1", 7}, {"2,2", 19}, {"3,1", 15}, {"2,1,1", 18}, {"3", 9}, {"2,1", 31}, {"1,1,1", 12}, {"2", 15}, {"1,1", 16}, {"1", 7}, {"0", 1}}},
    {"3,3,1", {{"3,3,1", 1}, {"3,3", 3}, {"3,2,1", 4}, {"3,2", 11}, {"2,2,1", 8}, {"3,1,1", 7}, {"2,2", 19}, {"3,1", 18}, {"2,1,1", 15}, {"3", 12}, {"2,1", 31}, {"1,1,1", 9}, {"2", 16}, {"1,1", 15}, {"1", 7}, {"0", 1}}},
    {"3,3", {{"3,3", 1}, {"3,2", 4}, {"2,2", 8}, {"3,1", 7}, {"3", 8}, {"2,1", 15}, {"2", 12}, {"1,1", 9}, {"1", 6}, {"0", 1}}},
    {"2,2,2", {{"2,2,2", 1}, {"2,2,1", 4}, {"2,2", 8}, {"2,1,1", 7}, {"2,1", 15}, {"1,1,1", 8}, {"2", 9}, {"1,1", 12}, {"1", 6}, {"0", 1}}},
    {"3,2,1", {{"3,2,1", 1}, {"3,2", 3}, {"2,2,1", 3}, {"3,1,1", 3}, {"2,2", 8}, {"3,1", 8}, {"2,1,1", 8}, {"3", 6}, {"2,1", 18}, {"1,1,1", 6}, {"2", 11}, {"1,1", 11}, {"1", 6}, {"0", 1}}},
    {"3,2", {{"3,2", 1}, {"2,2", 3}, {"3,1", 3}, {"3", 4}, {"2,1", 8}, {"2", 8}, {"1,1", 6}, {"1", 5}, {"0", 1}}},
    {"2,2,1", {{"2,2,1", 1}, {"2,2", 3}, {"2,1,1", 3}, {"2,1", 8}, {"1,1,1", 4}, {"2", 6}, {"1,1", 8}, {"1", 5}, {"0", 1}}},
    {"3,1,1", {{"3,1,1", 1}, {"3,1", 3}, {"2,1,1", 3}, {"3", 3}, {"2,1", 8}, {"1,1,1", 3}, {"2", 7}, {"1,1", 7}, {"1", 5}, {"0", 1}}},
    {"2,2", {{"2,2", 1}, {"2,1", 3}, {"2", 4}, {"1,1", 4}, {"1", 4}, {"0", 1}}},
    {"3,1", {{"3,1", 1}, {"3", 2}, {"2,1", 3}, {"2", 5}, {"1,1", 3}, {"1", 4}, {"0", 1}}},
    {"2,1,1", {{"2,1,1", 1}, {"2,1", 3}, {"1,1,1", 2}, {"2", 3}, {"1,1", 5}, {"1", 4}, {"0", 1}}},
    {"3", {{"3", 1}, {"2", 3}, {"1", 3}, {"0", 1}}},
    {"2,1", {{"2,1", 1}, {"2", 2}, {"1,1", 2}, {"1", 3}, {"0", 1}}},
    {"1,1,1", {{"1,1,1", 1}, {"1,1", 3}, {"1", 3}, {"0", 1}}},
    {"2", {{"2", 1}, {"1", 2}, {"0", 1}}},
    {"1,1", {{"1,1", 1}, {"1", 2}, {"0", 1}}},
    {"1", {{"1", 1}, {"0", 1}}},
    {"0", {{"0", 1}}},
};

inline const std::vector<ReferenceRow> kMatherTable = {
    {"3,3,3", {{"3,3,3", 1}, {"3,3,2", 6}, {"3,2,2", 17}, {"3,3,1", 17}, {"3,3", 32}, {"2,2,2", 32}, {"3,2,1", 58}, {"3,2", 108}, {"2,2,1", 108}, {"3,1,1", 66}, {"2,2", 174}, {"3,1", 146}, {"2,1,1", 146}, {"3", 90}, {"2,1", 270}, {"1,1,1", 90}, {"2", 150}, {"1,1", 150}, {"1", 90}, {"0", 20}}},
    {"3,3,2", {{"3,3,2", 1}, {"3,2,2", 5}, {"3,3,1", 5}, {"3,3", 12}, {"2,2,2", 12}, {"3,2,1", 24}, {"3,2", 54}, {"2,2,1", 54}, {"3,1,1", 36}, {"2,2", 108}, {"3,1", 93}, {"2,1,1", 93}, {"3", 69}, {"2,1", 210}, {"1,1,1", 69}, {"2", 144}, {"1,1", 144}, {"1", 108}, {"0", 30}}},
    {"3,2,2", {{"3,2,2", 1}, {"2,2,2", 4}, {"3,2,1", 5}, {"3,2", 12}, {"2,2,1", 19}, {"3,1,1", 11}, {"2,2", 42}, {"3,1", 30}, {"2,1,1", 40}, {"3", 25}, {"2,1", 98}, {"1,1,1", 37}, {"2", 74}, {"1,1", 82}, {"1", 66}, {"0", 20}}},
    {"3,3,1", {{"3,3,1", 1}, {"3,3", 4}, {"3,2,1", 5}, {"3,2", 19}, {"2,2,1", 12}, {"3,1,1", 11}, {"2,2", 42}, {"3,1", 40}, {"2,1,1", 30}, {"3", 37}, {"2,1", 98}, {"1,1,1", 25}, {"2", 82}, {"1,1", 74}, {"1", 66}, {"0", 20}}},
    {"3,3", {{"3,3", 1}, {"3,2", 5}, {"2,2", 12}, {"3,1", 11}, {"3", 15}, {"2,1", 30}, {"2", 35}, {"1,1", 25}, {"1", 30}, {"0", 10}}},
    {"2,2,2", {{"2,2,2", 1}, {"2,2,1", 5}, {"2,2", 12}, {"2,1,1", 11}, {"2,1", 30}, {"1,1,1", 15}, {"2", 25}, {"1,1", 35}, {"1", 30}, {"0", 10}}},
    {"3,2,1", {{"3,2,1", 1}, {"3,2", 4}, {"2,2,1", 4}, {"3,1,1", 4}, {"2,2", 15}, {"3,1", 15}, {"2,1,1", 15}, {"3", 17}, {"2,1", 52}, {"1,1,1", 17}, {"2", 54}, {"1,1", 54}, {"1", 60}, {"0", 24}}},
    {"3,2", {{"3,2", 1}, {"2,2", 4}, {"3,1", 4}, {"3", 7}, {"2,1", 15}, {"2", 23}, {"1,1", 17}, {"1", 27}, {"0", 12}}},
    {"2,2,1", {{"2,2,1", 1}, {"2,2", 4}, {"2,1,1", 4}, {"2,1", 15}, {"1,1,1", 7}, {"2", 17}, {"1,1", 23}, {"1", 27}, {"0", 12}}},
    {"3,1,1", {{"3,1,1", 1}, {"3,1", 4}, {"2,1,1", 4}, {"3", 6}, {"2,1", 15}, {"1,1,1", 6}, {"2", 21}, {"1,1", 21}, {"1", 27}, {"0", 12}}},
    {"2,2", {{"2,2", 1}, {"2,1", 4}, {"2", 7}, {"1,1", 7}, {"1", 12}, {"0", 6}}},
    {"3,1", {{"3,1", 1}, {"3", 3}, {"2,1", 4}, {"2", 11}, {"1,1", 6}, {"1", 15}, {"0", 8}}},
    {"2,1,1", {{"2,1,1", 1}, {"2,1", 4}, {"1,1,1", 3}, {"2", 6}, {"1,1", 11}, {"1", 15}, {"0", 8}}},
    {"3", {{"3", 1}, {"2", 4}, {"1", 6}, {"0", 4}}},
    {"2,1", {{"2,1", 1}, {"2", 3}, {"1,1", 3}, {"1", 8}, {"0", 6}}},
    {"1,1,1", {{"1,1,1", 1}, {"1,1", 4}, {"1", 6}, {"0", 4}}},
    {"2", {{"2", 1}, {"1", 3}, {"0", 3}}},
    {"1,1", {{"1,1", 1}, {"1", 3}, {"0", 3}}},
    {"1", {{"1", 1}, {"0", 2}}},
    {"0", {{"0", 1}}},
};
}  // namespace csm::testing
