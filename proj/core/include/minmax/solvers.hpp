#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "minmax/permutation.hpp"
#include "minmax/precedence_graph.hpp"
#include "minmax/profile.hpp"

namespace minmax {

inline constexpr int kDefaultBruteForceCap = 9;

/// Orientation chosen for one silent constraint. For an NB record, bit 0 is
/// TopFirst (top before both basis elements) and bit 1 BasisFirst. For a B
/// pair, bit 0 is Plus (t before t+1) and bit 1 Minus.
enum class Orientation : std::uint8_t { First = 0, Second = 1 };

/// A total assignment over a list of silent choices.
using Setting = std::vector<Orientation>;

/// One silent choice in the enumeration: either an NB record or a B pair.
struct SilentChoice {
  enum class Type : std::uint8_t { NB, B } type = Type::NB;
  NBRecord nb;
  BSetting b;

  std::vector<std::pair<int, int>> arcs(Orientation o) const;
};

struct SolveOutcome {
  std::optional<Permutation> witness;
  std::vector<NBRecord> silent_nb;  // silent after the initial propagation
  std::vector<int> silent_b;        // undirected only: t of each silent B pair
  /// Complete settings accounted for in binary-counter order, up to and
  /// including the one that produced the witness (pruned subtrees count in full).
  std::uint64_t settings_explored = 0;
  std::uint64_t closures = 0;
  /// Closed graph the verdict was read from; absent for the brute-force route.
  std::optional<PrecedenceGraph> graph;

  bool satisfiable() const noexcept { return witness.has_value(); }
};

enum class UndirectedMethod { Brute, Fpt };

/// Recompute the profile of `p` with f's k and directedness and compare.
/// Throws MismatchedN.
bool verify(const Permutation& p, const Profile& f);

/// Every permutation whose profile equals f, lexicographic. Throws TooLarge
/// when n > cap_n.
std::vector<Permutation> brute_force_solutions(const Profile& f, int cap_n = kDefaultBruteForceCap);

/// Adds the arcs of `setting` for `choices` and closes. NB records and B pairs
/// in `choices` also drive the closure rules.
PrecedenceGraph apply_setting(const PrecedenceGraph& g, std::span<const SilentChoice> choices,
                              const Setting& setting);

/// Polynomial solver for directed linear 1-profiles.
/// Throws NotDirected, KMismatch, NotLinear, InvalidProfile, InternalInconsistency.
SolveOutcome solve_linear(const Profile& f);

/// Directed 1-profiles: enumerate settings of the silent NB set in
/// binary-counter order and return the first one yielding a witness.
SolveOutcome solve_fpt_directed(const Profile& f);

/// Undirected 1-profiles, either by the oracle or by the joint B/NB setting
/// enumeration.
SolveOutcome solve_undirected(const Profile& f, UndirectedMethod method,
                              int cap_n = kDefaultBruteForceCap);

}  // namespace minmax
