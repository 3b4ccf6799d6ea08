#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minmax/permutation.hpp"
#include "minmax/profile.hpp"

namespace minmax {

enum class ArcKind : std::uint8_t {
  R,   // relative order (also the fixed extreme positions of 0 and n+1)
  B,   // betweenness constraint
  T,   // transitivity
  NB,  // non-betweenness constraint, or a chosen setting of one
};

char arc_kind_symbol(ArcKind kind) noexcept;

struct Arc {
  int from = 0;
  int to = 0;
  ArcKind kind = ArcKind::R;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Simple digraph on {0, ..., n+1}. Arcs are ordered pairs with x != y, at
/// most one per pair, each tagged with the kind it was first derived with.
///
/// Successor sets are stored as bit rows so the transitive pass of the closure
/// is a row-OR per (i, k) pair.
class PrecedenceGraph {
 public:
  explicit PrecedenceGraph(int n);

  int n() const noexcept { return n_; }
  int vertex_count() const noexcept { return vertices_; }

  bool has_arc(int from, int to) const noexcept {
    return (rows_[row_offset(from) + (to >> 6)] >> (to & 63)) & 1U;
  }
  ArcKind kind(int from, int to) const;

  /// Adds (from, to) unless it is a self-loop or already present.
  /// Returns whether the arc was added.
  bool add_arc(int from, int to, ArcKind kind);

  std::size_t arc_count() const noexcept;
  /// All arcs, sorted by (from, to).
  std::vector<Arc> arcs() const;

  friend bool operator==(const PrecedenceGraph& a, const PrecedenceGraph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  friend class ClosureEngine;

  std::size_t row_offset(int v) const noexcept { return static_cast<std::size_t>(v) * words_; }

  int n_;
  int vertices_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint8_t> kinds_;  // vertices_ x vertices_, valid where the bit is set
};

/// An undirected B-constraint pair in arc-set form. Orientation Plus puts t
/// before t+1, Minus puts t+1 before t; `arcs(plus)` lists the five arcs of
/// that orientation with self-loops dropped.
struct BSetting {
  BConstraintPair pair;

  std::vector<std::pair<int, int>> arcs(bool plus) const;
  bool triggered(const PrecedenceGraph& g, bool plus) const;
};

/// The B/T/NB propagation fixpoint of `g`.
///
/// Rules, applied until nothing changes:
///   transitivity  (x,c),(c,y), x != y          => (x,y)  [T]
///   NB rule       record (a; t,t+1): (t,a) => (t+1,a), (t+1,a) => (t,a),
///                 (a,t) => (a,t+1), (a,t+1) => (a,t)   [NB]
///   B rule        any arc of Arcs+ present => all of Arcs+, same for Arcs- [B]
/// Self-loops are never added. Cycles are left in place for the caller to find.
PrecedenceGraph build_closure(PrecedenceGraph g, std::span<const NBRecord> nb,
                              std::span<const BSetting> b = {});

/// Both arcs of one orientation of the record are present.
bool is_settled(const PrecedenceGraph& g, const NBRecord& r);

/// Neither orientation has any arc (between `top` and either basis element).
bool is_untouched(const PrecedenceGraph& g, const NBRecord& r);

bool has_cycle(const PrecedenceGraph& g);

/// Linear extension choosing the smallest available vertex at each step.
/// Throws CyclicGraph, or BadEndpoints when the order does not start at 0 and
/// end at n+1.
Permutation topo_sort(const PrecedenceGraph& g);

/// Arcs (0, x) and (x, n+1) for every other vertex x, tagged R.
void add_extreme_arcs(PrecedenceGraph& g);

/// Graphviz DOT text: one vertex per line, then one arc per line labelled
/// with its kind.
std::string to_dot(const PrecedenceGraph& g);

struct EasyArcsResult {
  PrecedenceGraph graph;
  std::vector<NBRecord> silent;  // canonical order
  bool acyclic = true;
};

/// R- and B-arcs from a directed 1-profile, the extreme arcs of 0 and n+1,
/// NB-closure over every NB-constraint, then removal of settled records.
/// Throws NotDirected / KMismatch / InvalidProfile on bad input.
EasyArcsResult build_easy_arcs(const Profile& f);

}  // namespace minmax
