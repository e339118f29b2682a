#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

// Spec strings for the built-in quandles with at most max_size elements.
inline std::vector<std::string> builtin_quandle_specs(std::size_t max_size) {
  std::vector<std::string> out;
  for (std::size_t n = 1; n <= max_size; ++n) out.push_back("dihedral:" + std::to_string(n));
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_size, 5); ++n) out.push_back("trivial:" + std::to_string(n));
  const std::vector<std::vector<std::int64_t>> noncyclic{
      {2, 2}, {2, 4}, {2, 2, 2}, {3, 3}, {2, 6}, {2, 8}, {2, 2, 4}, {2, 2, 2, 2},
      {4, 4}, {2, 10}, {3, 6}, {2, 12}, {2, 2, 6}, {5, 5}, {3, 9}, {3, 3, 3}};
  for (const auto& m : noncyclic) {
    std::int64_t order = 1;
    std::string spec = "takasaki:";
    for (std::size_t i = 0; i < m.size(); ++i) {
      order *= m[i];
      spec += (i ? "," : "") + std::to_string(m[i]);
    }
    if (static_cast<std::size_t>(order) <= max_size) out.push_back(spec);
  }
  if (max_size >= 27)
    for (const char* s : {"core:g4_27", "core:heisenberg3", "extension:3,halved", "extension:3,plain"}) out.push_back(s);
  return out;
}

// Moduli lists (invariant-factor form) of the odd abelian groups of order <= 27.
inline std::vector<std::vector<std::int64_t>> odd_abelian_up_to_27() {
  return {{3}, {5}, {7}, {9}, {3, 3}, {11}, {13}, {15}, {17}, {19}, {21}, {23}, {25}, {5, 5}, {27}, {3, 9}, {3, 3, 3}};
}
