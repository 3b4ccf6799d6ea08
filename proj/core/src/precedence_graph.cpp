#include "minmax/precedence_graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <sstream>

#include "minmax/error.hpp"

namespace minmax {

char arc_kind_symbol(ArcKind kind) noexcept {
  switch (kind) {
    case ArcKind::R: return 'R';
    case ArcKind::B: return 'B';
    case ArcKind::T: return 'T';
    case ArcKind::NB: return 'N';
  }
  return '?';
}

PrecedenceGraph::PrecedenceGraph(int n)
    : n_(n),
      vertices_(n + 2),
      words_((static_cast<std::size_t>(n) + 2 + 63) / 64),
      rows_(static_cast<std::size_t>(n + 2) * words_, 0),
      kinds_(static_cast<std::size_t>(n + 2) * (n + 2), 0) {
  if (n < 1) throw Error(ErrorCode::PreconditionViolation, "graph needs n >= 1");
}

ArcKind PrecedenceGraph::kind(int from, int to) const {
  if (!has_arc(from, to)) {
    throw Error(ErrorCode::PreconditionViolation,
                "no arc (" + std::to_string(from) + "," + std::to_string(to) + ")");
  }
  return static_cast<ArcKind>(kinds_[static_cast<std::size_t>(from) * vertices_ + to]);
}

bool PrecedenceGraph::add_arc(int from, int to, ArcKind kind) {
  if (from < 0 || to < 0 || from >= vertices_ || to >= vertices_) {
    throw Error(ErrorCode::PreconditionViolation,
                "arc (" + std::to_string(from) + "," + std::to_string(to) + ") outside the vertex set");
  }
  if (from == to || has_arc(from, to)) return false;
  rows_[row_offset(from) + (to >> 6)] |= std::uint64_t{1} << (to & 63);
  kinds_[static_cast<std::size_t>(from) * vertices_ + to] = static_cast<std::uint8_t>(kind);
  return true;
}

std::size_t PrecedenceGraph::arc_count() const noexcept {
  std::size_t total = 0;
  for (auto w : rows_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Arc> PrecedenceGraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (int x = 0; x < vertices_; ++x) {
    for (int y = 0; y < vertices_; ++y) {
      if (has_arc(x, y)) out.push_back({x, y, kind(x, y)});
    }
  }
  return out;
}

std::vector<std::pair<int, int>> BSetting::arcs(bool plus) const {
  const int t = pair.t;
  const int u = t + 1;
  const int lo = pair.min_value;
  const int hi = pair.max_value;
  const std::pair<int, int> forward[] = {{t, u}, {t, lo}, {t, hi}, {lo, u}, {hi, u}};
  std::vector<std::pair<int, int>> out;
  for (auto [x, y] : forward) {
    if (!plus) std::swap(x, y);
    if (x == y) continue;
    if (std::find(out.begin(), out.end(), std::pair{x, y}) == out.end()) out.emplace_back(x, y);
  }
  return out;
}

bool BSetting::triggered(const PrecedenceGraph& g, bool plus) const {
  const auto list = arcs(plus);
  return std::any_of(list.begin(), list.end(), [&](const auto& a) { return g.has_arc(a.first, a.second); });
}

bool is_settled(const PrecedenceGraph& g, const NBRecord& r) {
  const int t = r.basis;
  const int u = r.basis + 1;
  return (g.has_arc(r.top, t) && g.has_arc(r.top, u)) || (g.has_arc(t, r.top) && g.has_arc(u, r.top));
}

bool is_untouched(const PrecedenceGraph& g, const NBRecord& r) {
  for (int b : {r.basis, r.basis + 1}) {
    if (g.has_arc(r.top, b) || g.has_arc(b, r.top)) return false;
  }
  return true;
}

namespace {

// Kahn's algorithm with smallest-vertex-first selection. Returns the order of
// the vertices it managed to emit; fewer than all means a cycle.
std::vector<int> kahn_order(const PrecedenceGraph& g) {
  const int count = g.vertex_count();
  std::vector<int> indegree(count, 0);
  for (int x = 0; x < count; ++x) {
    for (int y = 0; y < count; ++y) {
      if (g.has_arc(x, y)) ++indegree[y];
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < count; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<int> order;
  order.reserve(count);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int y = 0; y < count; ++y) {
      if (g.has_arc(v, y) && --indegree[y] == 0) ready.push(y);
    }
  }
  return order;
}

}  // namespace

bool has_cycle(const PrecedenceGraph& g) {
  return static_cast<int>(kahn_order(g).size()) != g.vertex_count();
}

Permutation topo_sort(const PrecedenceGraph& g) {
  auto order = kahn_order(g);
  if (static_cast<int>(order.size()) != g.vertex_count()) {
    throw Error(ErrorCode::CyclicGraph, "graph has a directed cycle");
  }
  return validate_permutation(std::move(order));
}

void add_extreme_arcs(PrecedenceGraph& g) {
  const int last = g.n() + 1;
  for (int x = 1; x <= last; ++x) g.add_arc(0, x, ArcKind::R);
  for (int x = 0; x < last; ++x) g.add_arc(x, last, ArcKind::R);
}

std::string to_dot(const PrecedenceGraph& g) {
  std::ostringstream os;
  os << "digraph precedence {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const auto& a : g.arcs()) {
    os << "  " << a.from << " -> " << a.to << " [label=\"" << arc_kind_symbol(a.kind) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

EasyArcsResult build_easy_arcs(const Profile& f) {
  if (!f.directed() || !f.fully_directed()) {
    throw Error(ErrorCode::NotDirected, "build_easy_arcs needs a fully directed profile");
  }
  if (f.k() != 1) throw Error(ErrorCode::KMismatch, "build_easy_arcs needs a 1-profile");
  require_valid(f);

  PrecedenceGraph g(f.n());
  for (int t = 0; t <= f.n(); ++t) {
    const auto& e = f.at(t, 1);
    int tl = t;
    int tr = t + 1;
    if (e.dir == Direction::RightToLeft) std::swap(tl, tr);
    g.add_arc(tl, tr, ArcKind::R);
    g.add_arc(tl, e.min_value, ArcKind::B);
    g.add_arc(e.min_value, tr, ArcKind::B);
    g.add_arc(tl, e.max_value, ArcKind::B);
    g.add_arc(e.max_value, tr, ArcKind::B);
  }
  add_extreme_arcs(g);

  const auto all_nb = nb_constraints(f);
  EasyArcsResult result{build_closure(std::move(g), all_nb), {}, true};
  for (const auto& r : all_nb) {
    if (!is_settled(result.graph, r)) result.silent.push_back(r);
  }
  result.acyclic = !has_cycle(result.graph);
  return result;
}

}  // namespace minmax
