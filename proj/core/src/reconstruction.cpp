#include "minmax/reconstruction.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>

#include "minmax/error.hpp"

namespace minmax {

namespace {

// Canonical byte encoding of a profile: (min, max, dir) per entry in entry
// order. Two profiles of the same (n, k, directed) shape are equal iff their
// keys are. Values fit in a byte because exhaustive runs are capped well
// below n = 254.
std::string profile_key(const Profile& f) {
  std::string key;
  key.reserve(f.entries().size() * 3);
  for (const auto& e : f.entries()) {
    key.push_back(static_cast<char>(e.min_value));
    key.push_back(static_cast<char>(e.max_value));
    key.push_back(static_cast<char>(e.dir));
  }
  return key;
}

void require_cap(int n, int cap_n) {
  if (n < 1) throw Error(ErrorCode::PreconditionViolation, "n must be positive");
  if (n > cap_n) {
    throw Error(ErrorCode::TooLarge,
                "n=" + std::to_string(n) + " exceeds the exhaustive cap " + std::to_string(cap_n));
  }
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

// Where 1 and n sit, and which elements lie left of, between and right of them.
struct Layout {
  int pos_one = 0;
  int pos_n = 0;
  std::uint64_t left = 0;
  std::uint64_t middle = 0;
  std::uint64_t right = 0;

  friend bool operator==(const Layout&, const Layout&) = default;
};

Layout layout_of(const Permutation& p) {
  Layout out;
  out.pos_one = p.position_of(1);
  out.pos_n = p.position_of(p.n());
  const int l = std::min(out.pos_one, out.pos_n);
  const int r = std::max(out.pos_one, out.pos_n);
  for (int pos = 1; pos <= p.n(); ++pos) {
    const std::uint64_t bit = std::uint64_t{1} << p.at(pos);
    if (pos < l) {
      out.left |= bit;
    } else if (pos > l && pos < r) {
      out.middle |= bit;
    } else if (pos > r) {
      out.right |= bit;
    }
  }
  return out;
}

}  // namespace

UniquenessReport is_unique(const Profile& f, int cap_n) {
  auto solutions = brute_force_solutions(f, cap_n);
  UniquenessReport report;
  report.n = f.n();
  report.k = f.k();
  report.directed = f.directed();
  report.solution_count = solutions.size();
  if (solutions.empty()) {
    report.verdict = UniquenessReport::Verdict::Empty;
  } else if (solutions.size() == 1) {
    report.verdict = UniquenessReport::Verdict::Unique;
    report.first = solutions[0];
  } else {
    report.verdict = UniquenessReport::Verdict::Collision;
    report.first = solutions[0];
    report.second = solutions[1];
  }
  return report;
}

MinKResult min_unique_k(int n, bool directed, int cap_n) {
  require_cap(n, cap_n);
  const auto perms = all_permutations(n);
  std::optional<std::pair<Permutation, Permutation>> previous;
  for (int k = 1; k <= n + 1; ++k) {
    std::unordered_map<std::string, std::size_t> first_with;
    first_with.reserve(perms.size());
    std::optional<std::pair<Permutation, Permutation>> collision;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      auto [it, inserted] = first_with.emplace(profile_key(compute_profile(perms[i], k, directed)), i);
      if (!inserted && !collision) collision.emplace(perms[it->second], perms[i]);
    }
    if (!collision) return {n, directed, k, previous};
    if (compute_profile(collision->first, k, directed) != compute_profile(collision->second, k, directed)) {
      throw Error(ErrorCode::InternalInconsistency, "profile keys collided for different profiles");
    }
    previous = std::move(collision);
  }
  throw Error(ErrorCode::InternalInconsistency,
              "no k <= n+1 separates all permutations on n=" + std::to_string(n));
}

std::pair<Permutation, Permutation> collision_pair(int n, int k, bool directed) {
  const int bound = directed ? (n - 3 + 1) / 2 : n - 3;  // ceil((n-3)/2) or n-3
  if (k < 1 || k >= bound) {
    throw Error(ErrorCode::PreconditionViolation,
                "collision construction needs 1 <= k < " + std::to_string(bound) + " for n=" + std::to_string(n) +
                    (directed ? " (directed)" : ""));
  }
  const int second = directed ? 2 * k + 3 : k + 3;
  std::vector<int> seq{0, k + 2, second, 1, n};
  for (int v = 2; v < n; ++v) {
    if (v != k + 2 && v != second) seq.push_back(v);
  }
  seq.push_back(n + 1);
  Permutation p = validate_permutation(seq);
  std::swap(seq[1], seq[2]);
  Permutation q = validate_permutation(std::move(seq));
  if (compute_profile(p, k, directed) != compute_profile(q, k, directed)) {
    throw Error(ErrorCode::InternalInconsistency, "constructed pair " + p.to_string() + " / " + q.to_string() +
                                                      " has different profiles");
  }
  return {std::move(p), std::move(q)};
}

bool fixed_positions_check(int n, int k, bool directed, int cap_n) {
  require_cap(n, cap_n);
  if (k < 1 || k > n + 1) throw Error(ErrorCode::PreconditionViolation, "k outside 1..n+1");
  std::unordered_map<std::string, Layout> class_layout;
  bool holds = true;
  for_each_permutation(n, [&](const Permutation& p) {
    if (!holds) return;
    const Layout mine = layout_of(p);
    auto [it, inserted] = class_layout.emplace(profile_key(compute_profile(p, k, directed)), mine);
    if (!inserted && !(it->second == mine)) holds = false;
  });
  return holds;
}

}  // namespace minmax
