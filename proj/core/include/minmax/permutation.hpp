#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace minmax {

/// A permutation of {0, ..., n+1} with 0 pinned first and n+1 pinned last.
///
/// Only constructible through validate_permutation (or the factories below),
/// so holding one means the bijection and endpoint invariants hold.
class Permutation {
 public:
  int n() const noexcept { return static_cast<int>(elems_.size()) - 2; }
  int size() const noexcept { return static_cast<int>(elems_.size()); }

  std::span<const int> elements() const noexcept { return elems_; }
  int at(int position) const { return elems_.at(position); }
  int position_of(int value) const { return positions_.at(value); }
  std::span<const int> positions() const noexcept { return positions_; }

  /// Space-separated elements, endpoints included, e.g. "0 2 1 3".
  std::string to_string() const;

  static Permutation identity(int n);

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.elems_ == b.elems_; }
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.elems_ <=> b.elems_; }

 private:
  explicit Permutation(std::vector<int> elems);
  friend Permutation validate_permutation(std::vector<int> seq);

  std::vector<int> elems_;
  std::vector<int> positions_;
};

/// Throws Error{NotBijection} or Error{BadEndpoints}. n is inferred as size - 2
/// and must be at least 1.
Permutation validate_permutation(std::vector<int> seq);

/// Q[j] = n+1 - P[n+1-j]: value complement followed by reversal. Maps a valid
/// permutation to a valid permutation.
Permutation complement_reverse(const Permutation& p);

/// Calls fn(const Permutation&) for every permutation on n, in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> seq(n + 2);
  std::iota(seq.begin(), seq.end(), 0);
  do {
    fn(validate_permutation(seq));
  } while (std::next_permutation(seq.begin() + 1, seq.end() - 1));
}

}  // namespace minmax
