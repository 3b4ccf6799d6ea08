#pragma once

#include <optional>
#include <utility>

#include "minmax/permutation.hpp"
#include "minmax/profile.hpp"
#include "minmax/solvers.hpp"

namespace minmax {

inline constexpr int kDefaultExhaustiveCap = 8;

struct UniquenessReport {
  enum class Verdict { Unique, Collision, Empty };

  int n = 0;
  int k = 0;
  bool directed = false;
  Verdict verdict = Verdict::Empty;
  std::optional<Permutation> first;   // the unique solution, or the first of a collision
  std::optional<Permutation> second;  // second solution of a collision
  std::size_t solution_count = 0;
};

struct MinKResult {
  int n = 0;
  bool directed = false;
  int min_k = 0;
  /// Two permutations sharing a (min_k - 1)-profile; absent when min_k == 1.
  std::optional<std::pair<Permutation, Permutation>> collision;
};

UniquenessReport is_unique(const Profile& f, int cap_n = kDefaultBruteForceCap);

/// Smallest k for which every k-profile over all n! permutations has a single
/// preimage. Throws TooLarge when n > cap_n.
MinKResult min_unique_k(int n, bool directed, int cap_n = kDefaultExhaustiveCap);

/// Two distinct permutations with equal k-profiles, built from a fixed
/// four-element prefix and an increasing tail. Throws PreconditionViolation
/// outside 1 <= k < n-3 (undirected) or 1 <= k < ceil((n-3)/2) (directed).
std::pair<Permutation, Permutation> collision_pair(int n, int k, bool directed);

/// Whether, within every k-profile class of permutations on n, the elements 1
/// and n sit at fixed positions and the sets left of, between and right of
/// them agree. Throws TooLarge when n > cap_n.
bool fixed_positions_check(int n, int k, bool directed, int cap_n = kDefaultExhaustiveCap);

}  // namespace minmax
