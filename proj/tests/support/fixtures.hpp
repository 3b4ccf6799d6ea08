#pragma once

#include <string>
#include <vector>

#include "minmax/permutation.hpp"
#include "minmax/profile.hpp"

namespace minmax::testing {

/// The nine-element running example.
inline Permutation running_example() { return validate_permutation({0, 6, 4, 7, 2, 9, 1, 8, 5, 3, 10}); }

/// Permutation whose directed profile is the setting-sequence example.
inline Permutation setting_sequence_example() {
  return validate_permutation({0, 7, 4, 10, 2, 1, 12, 8, 3, 9, 5, 11, 6, 13});
}

inline KConstraint gap1(int t, char dir, int m, int big_m) {
  const Direction d = dir == '>' ? Direction::LeftToRight : dir == '<' ? Direction::RightToLeft : Direction::Unknown;
  return {t, 1, d, m, big_m};
}

/// 30-element directed profile (n = 29) used for cycle detection.
inline Profile circuit_example() {
  return Profile(29, 1, true,
                 {gap1(0, '>', 0, 27),   gap1(1, '>', 1, 29),   gap1(2, '<', 1, 29),   gap1(3, '>', 1, 29),
                  gap1(4, '<', 1, 29),   gap1(5, '>', 1, 29),   gap1(6, '<', 1, 29),   gap1(7, '<', 3, 21),
                  gap1(8, '>', 1, 29),   gap1(9, '<', 1, 29),   gap1(10, '>', 1, 29),  gap1(11, '<', 1, 29),
                  gap1(12, '>', 8, 25),  gap1(13, '>', 1, 29),  gap1(14, '<', 1, 29),  gap1(15, '<', 10, 27),
                  gap1(16, '>', 1, 29),  gap1(17, '<', 1, 29),  gap1(18, '<', 16, 22), gap1(19, '>', 1, 29),
                  gap1(20, '<', 1, 29),  gap1(21, '<', 5, 22),  gap1(22, '>', 1, 29),  gap1(23, '<', 1, 29),
                  gap1(24, '<', 15, 25), gap1(25, '>', 1, 29),  gap1(26, '<', 1, 29),  gap1(27, '>', 1, 29),
                  gap1(28, '<', 2, 29),  gap1(29, '>', 2, 30)});
}

/// n = 2 directed profile with no preimage: 2 must sit between 0 and 1 while
/// 1 is declared left of 2.
inline Profile unsatisfiable_n2() {
  return Profile(2, 1, true, {gap1(0, '>', 0, 2), gap1(1, '>', 1, 2), gap1(2, '>', 2, 3)});
}

inline std::string data_path(const std::string& name) { return std::string(MINMAX_TEST_DATA_DIR) + "/" + name; }

}  // namespace minmax::testing
