#include "minmax/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "minmax/error.hpp"

namespace minmax {

namespace {

// Entry-wise comparison with early exit, scanning each window directly.
bool matches(std::span<const int> elems, std::span<const int> pos, const Profile& f) {
  for (const auto& e : f.entries()) {
    const int a = pos[e.t];
    const int b = pos[e.right()];
    if (f.directed() && e.dir != Direction::Unknown) {
      if ((a < b) != (e.dir == Direction::LeftToRight)) return false;
    } else if (f.directed()) {
      return false;
    }
    const int lo_pos = std::min(a, b);
    const int hi_pos = std::max(a, b);
    int lo = elems[lo_pos];
    int hi = lo;
    for (int p = lo_pos + 1; p <= hi_pos; ++p) {
      lo = std::min(lo, elems[p]);
      hi = std::max(hi, elems[p]);
    }
    if (lo != e.min_value || hi != e.max_value) return false;
  }
  return true;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t subtree_size(int depth) {
  return depth >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << depth;
}

void require_directed_1profile(const Profile& f) {
  if (!f.directed() || !f.fully_directed()) throw Error(ErrorCode::NotDirected, "solver needs a directed profile");
  if (f.k() != 1) throw Error(ErrorCode::KMismatch, "solver needs a 1-profile");
  require_valid(f);
}

Permutation checked_witness(const PrecedenceGraph& g, const Profile& f) {
  Permutation w = topo_sort(g);
  if (!verify(w, f)) {
    throw Error(ErrorCode::InternalInconsistency,
                "fully settled acyclic graph produced " + w.to_string() + ", which does not reproduce the profile");
  }
  return w;
}

// Depth-first walk over the settings of `choices`, highest index decided
// first and First before Second. That visits complete settings in
// binary-counter order (choice j is bit j, First = 0), and a subtree whose
// partial closure already has a cycle can be skipped wholesale because
// adding arcs never removes one.
class SettingSearch {
 public:
  SettingSearch(const Profile& f, std::span<const SilentChoice> choices, SolveOutcome& stats)
      : f_(f), choices_(choices), stats_(stats) {
    for (const auto& c : choices_) {
      if (c.type == SilentChoice::Type::NB) {
        nb_rules_.push_back(c.nb);
      } else {
        b_rules_.push_back(c.b);
      }
    }
  }

  std::optional<Permutation> run(const PrecedenceGraph& root) {
    return descend(root, static_cast<int>(choices_.size()) - 1);
  }

 private:
  std::optional<Permutation> descend(const PrecedenceGraph& g, int index) {
    if (index < 0) {
      stats_.settings_explored = saturating_add(stats_.settings_explored, 1);
      stats_.graph = g;
      return checked_witness(g, f_);
    }
    for (Orientation o : {Orientation::First, Orientation::Second}) {
      PrecedenceGraph next = g;
      const auto kind = choices_[index].type == SilentChoice::Type::NB ? ArcKind::NB : ArcKind::B;
      for (auto [x, y] : choices_[index].arcs(o)) next.add_arc(x, y, kind);
      next = build_closure(std::move(next), nb_rules_, b_rules_);
      ++stats_.closures;
      if (has_cycle(next)) {
        stats_.settings_explored = saturating_add(stats_.settings_explored, subtree_size(index));
        continue;
      }
      if (auto found = descend(next, index - 1)) return found;
    }
    return std::nullopt;
  }

  const Profile& f_;
  std::span<const SilentChoice> choices_;
  SolveOutcome& stats_;
  std::vector<NBRecord> nb_rules_;
  std::vector<BSetting> b_rules_;
};

}  // namespace

std::vector<std::pair<int, int>> SilentChoice::arcs(Orientation o) const {
  if (type == Type::B) return b.arcs(o == Orientation::First);
  const int t = nb.basis;
  const int u = nb.basis + 1;
  if (o == Orientation::First) return {{nb.top, t}, {nb.top, u}};
  return {{t, nb.top}, {u, nb.top}};
}

bool verify(const Permutation& p, const Profile& f) {
  if (p.n() != f.n()) throw Error(ErrorCode::MismatchedN, "permutation and profile disagree on n");
  return matches(p.elements(), p.positions(), f);
}

std::vector<Permutation> brute_force_solutions(const Profile& f, int cap_n) {
  if (f.n() > cap_n) {
    throw Error(ErrorCode::TooLarge,
                "n=" + std::to_string(f.n()) + " exceeds the enumeration cap " + std::to_string(cap_n));
  }
  std::vector<int> elems(f.n() + 2);
  std::iota(elems.begin(), elems.end(), 0);
  std::vector<int> pos(elems.size());
  std::vector<Permutation> out;
  do {
    for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    if (matches(elems, pos, f)) out.push_back(validate_permutation(elems));
  } while (std::next_permutation(elems.begin() + 1, elems.end() - 1));
  return out;
}

PrecedenceGraph apply_setting(const PrecedenceGraph& g, std::span<const SilentChoice> choices,
                              const Setting& setting) {
  if (setting.size() != choices.size()) {
    throw Error(ErrorCode::PreconditionViolation, "setting does not cover every silent choice");
  }
  PrecedenceGraph out = g;
  std::vector<NBRecord> nb;
  std::vector<BSetting> b;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const auto kind = choices[i].type == SilentChoice::Type::NB ? ArcKind::NB : ArcKind::B;
    for (auto [x, y] : choices[i].arcs(setting[i])) out.add_arc(x, y, kind);
    if (choices[i].type == SilentChoice::Type::NB) {
      nb.push_back(choices[i].nb);
    } else {
      b.push_back(choices[i].b);
    }
  }
  return build_closure(std::move(out), nb, b);
}

SolveOutcome solve_linear(const Profile& f) {
  require_directed_1profile(f);
  if (!is_linear(f)) throw Error(ErrorCode::NotLinear, "profile intervals do not form an inclusion chain");

  auto easy = build_easy_arcs(f);
  SolveOutcome out;
  out.silent_nb = easy.silent;
  out.closures = 1;
  if (!easy.acyclic) {
    out.graph = std::move(easy.graph);
    return out;
  }

  const int n = f.n();
  std::vector<std::size_t> nb_size(n + 1, 0);
  for (int c = 1; c <= n; ++c) nb_size[c] = nb_set(f, c).size();

  PrecedenceGraph g = std::move(easy.graph);
  std::vector<NBRecord> silent = std::move(easy.silent);
  while (!silent.empty()) {
    int b1 = -1;
    for (const auto& r : silent) {
      if (r.top < 1 || r.top > n) {
        throw Error(ErrorCode::InternalInconsistency, "endpoint " + std::to_string(r.top) + " left silent");
      }
      if (b1 < 0 || nb_size[r.top] > nb_size[b1] || (nb_size[r.top] == nb_size[b1] && r.top < b1)) b1 = r.top;
    }
    int a1 = -1;
    for (const auto& r : silent) {
      if (r.top == b1 && (a1 < 0 || r.basis < a1)) a1 = r.basis;
    }

    g.add_arc(a1, b1, ArcKind::NB);
    g = build_closure(std::move(g), silent);
    ++out.closures;
    ++out.settings_explored;
    if (has_cycle(g)) {
      throw Error(ErrorCode::InternalInconsistency,
                  "setting (" + std::to_string(a1) + "," + std::to_string(b1) + ") closed into a circuit");
    }
    std::erase_if(silent, [&](const NBRecord& r) { return is_settled(g, r); });
  }
  out.witness = checked_witness(g, f);
  out.graph = std::move(g);
  return out;
}

SolveOutcome solve_fpt_directed(const Profile& f) {
  require_directed_1profile(f);
  auto easy = build_easy_arcs(f);
  SolveOutcome out;
  out.silent_nb = easy.silent;
  out.closures = 1;
  out.graph = easy.graph;
  if (!easy.acyclic) return out;

  std::vector<SilentChoice> choices;
  choices.reserve(easy.silent.size());
  for (const auto& r : easy.silent) choices.push_back({SilentChoice::Type::NB, r, {}});
  out.witness = SettingSearch(f, choices, out).run(easy.graph);
  return out;
}

SolveOutcome solve_undirected(const Profile& f, UndirectedMethod method, int cap_n) {
  if (f.directed()) throw Error(ErrorCode::NotUndirected, "solve_undirected needs an undirected profile");
  if (f.k() != 1) throw Error(ErrorCode::KMismatch, "solver needs a 1-profile");
  require_valid(f);

  SolveOutcome out;
  if (method == UndirectedMethod::Brute) {
    auto all = brute_force_solutions(f, cap_n);
    if (!all.empty()) out.witness = std::move(all.front());
    return out;
  }

  std::vector<BSetting> all_b;
  for (const auto& pair : b_constraints(f)) all_b.push_back({pair});
  const auto all_nb = nb_constraints(f);

  PrecedenceGraph g(f.n());
  add_extreme_arcs(g);
  g = build_closure(std::move(g), all_nb, all_b);
  out.closures = 1;
  out.graph = g;
  if (has_cycle(g)) return out;

  std::vector<SilentChoice> choices;
  for (const auto& b : all_b) {
    if (!b.triggered(g, true) && !b.triggered(g, false)) {
      out.silent_b.push_back(b.pair.t);
      choices.push_back({SilentChoice::Type::B, {}, b});
    }
  }
  for (const auto& r : all_nb) {
    if (!is_settled(g, r)) {
      out.silent_nb.push_back(r);
      choices.push_back({SilentChoice::Type::NB, r, {}});
    }
  }
  out.witness = SettingSearch(f, choices, out).run(g);
  return out;
}

}  // namespace minmax
