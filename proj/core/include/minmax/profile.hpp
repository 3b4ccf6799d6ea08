#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "minmax/permutation.hpp"

namespace minmax {

enum class Direction : std::uint8_t {
  LeftToRight,  // t is left of t+gap
  RightToLeft,
  Unknown,
};

char direction_symbol(Direction d) noexcept;  // '>', '<', '?'

/// One entry t [min, max] t+gap of a k-profile. For gap 1 this is the
/// MinMax-constraint with min = m_t and max = M_t.
struct KConstraint {
  int t = 0;
  int gap = 1;
  Direction dir = Direction::Unknown;
  int min_value = 0;
  int max_value = 0;

  int right() const noexcept { return t + gap; }
  friend bool operator==(const KConstraint&, const KConstraint&) = default;
};

/// A full (directed or undirected) k-profile on {0, ..., n+1}: exactly one
/// entry per (t, gap) with 1 <= gap <= k and 0 <= t <= n+1-gap.
///
/// The constructor enforces the shape only. Bounds and the endpoint rule are
/// checked by validate_profile, so malformed-but-well-shaped profiles can be
/// represented and diagnosed.
///
/// An undirected profile carries Unknown on every entry. A directed profile
/// normally carries none; the one exception is compute_set_profile, which
/// marks entries whose relative order disagrees across the set as Unknown.
class Profile {
 public:
  Profile(int n, int k, bool directed, std::vector<KConstraint> entries);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  bool directed() const noexcept { return directed_; }

  const KConstraint& at(int t, int gap) const;

  /// Entries ordered by gap, then t.
  std::span<const KConstraint> entries() const noexcept { return entries_; }

  /// True when every entry has a known direction.
  bool fully_directed() const noexcept;

  /// Number of entries of a k-profile on n.
  static std::size_t entry_count(int n, int k) noexcept;
  static std::size_t index_of(int n, int t, int gap) noexcept;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  int n_;
  int k_;
  bool directed_;
  std::vector<KConstraint> entries_;
};

/// The two betweenness facts of a gap-1 entry: t <-> min <-> t+1 and
/// t <-> max <-> t+1. A fact is vacuous when its middle element is an endpoint.
struct BConstraintPair {
  int t = 0;
  int min_value = 0;
  int max_value = 0;
  bool min_vacuous = false;
  bool max_vacuous = false;

  friend bool operator==(const BConstraintPair&, const BConstraintPair&) = default;
};

/// Non-betweenness constraint: `top` is not between basis and basis+1.
struct NBRecord {
  int top = 0;
  int basis = 0;  // the pair (basis, basis + 1)

  friend bool operator==(const NBRecord&, const NBRecord&) = default;
  /// Canonical record order: basis ascending, then top ascending.
  friend auto operator<=>(const NBRecord& a, const NBRecord& b) {
    if (auto c = a.basis <=> b.basis; c != 0) return c;
    return a.top <=> b.top;
  }
};

struct ProfileViolation {
  int t = 0;
  int gap = 0;
  std::string reason;
};

Profile compute_profile(const Permutation& p, int k, bool directed);

/// Union profile of several permutations on the same n. Throws MismatchedN.
Profile compute_set_profile(std::span<const Permutation> perms, int k, bool directed);

/// Empty result means the profile is admissible: bounds
/// 0 <= min <= t < t+gap <= max <= n+1 hold everywhere, 0 appears as a min
/// only in entries starting at 0, n+1 appears as a max only in entries ending
/// at n+1, and (directed) entries touching 0 or n+1 point away from/toward them.
std::vector<ProfileViolation> validate_profile(const Profile& f);

/// Throws Error{InvalidProfile} listing the first violation.
void require_valid(const Profile& f);

/// Whether the gap-1 intervals [m_t..M_t], 1 <= t <= n-1, form an inclusion
/// chain. Throws KMismatch when k != 1.
bool is_linear(const Profile& f);

/// {t | 1 <= t <= n-1, c < m_t or M_t < c}, ascending.
/// Throws KMismatch (k != 1) or COutOfRange (c outside 1..n).
std::vector<int> nb_set(const Profile& f, int c);

/// Betweenness facts of every gap-1 entry, t ascending.
std::vector<BConstraintPair> b_constraints(const Profile& f);

/// Every NB-constraint implied by the gap-1 entries, in canonical order.
std::vector<NBRecord> nb_constraints(const Profile& f);

}  // namespace minmax
