#include "minmax/profile.hpp"

#include <algorithm>
#include <string>

#include "minmax/error.hpp"

namespace minmax {

namespace {

// Min/max of every contiguous window [l, r] of a permutation, positions as
// indices. Built in O(size^2), queried in O(1).
class WindowExtrema {
 public:
  explicit WindowExtrema(std::span<const int> elems)
      : size_(static_cast<int>(elems.size())), min_(size_ * size_), max_(size_ * size_) {
    for (int l = 0; l < size_; ++l) {
      int lo = elems[l];
      int hi = elems[l];
      for (int r = l; r < size_; ++r) {
        lo = std::min(lo, elems[r]);
        hi = std::max(hi, elems[r]);
        min_[l * size_ + r] = lo;
        max_[l * size_ + r] = hi;
      }
    }
  }

  int min(int a, int b) const { return min_[std::min(a, b) * size_ + std::max(a, b)]; }
  int max(int a, int b) const { return max_[std::min(a, b) * size_ + std::max(a, b)]; }

 private:
  int size_;
  std::vector<int> min_;
  std::vector<int> max_;
};

void require_k1(const Profile& f) {
  if (f.k() != 1) throw Error(ErrorCode::KMismatch, "operation needs a 1-profile, got k=" + std::to_string(f.k()));
}

std::string entry_name(int t, int gap) { return "(t=" + std::to_string(t) + ", gap=" + std::to_string(gap) + ")"; }

}  // namespace

char direction_symbol(Direction d) noexcept {
  switch (d) {
    case Direction::LeftToRight: return '>';
    case Direction::RightToLeft: return '<';
    case Direction::Unknown: return '?';
  }
  return '?';
}

std::size_t Profile::entry_count(int n, int k) noexcept {
  // sum_{gap=1..k} (n + 2 - gap)
  return static_cast<std::size_t>(k) * (n + 2) - static_cast<std::size_t>(k) * (k + 1) / 2;
}

std::size_t Profile::index_of(int n, int t, int gap) noexcept {
  return entry_count(n, gap - 1) + static_cast<std::size_t>(t);
}

Profile::Profile(int n, int k, bool directed, std::vector<KConstraint> entries)
    : n_(n), k_(k), directed_(directed) {
  if (n < 1) throw Error(ErrorCode::MalformedProfile, "n must be positive");
  if (k < 1 || k > n + 1) {
    throw Error(ErrorCode::MalformedProfile, "k=" + std::to_string(k) + " outside 1.." + std::to_string(n + 1));
  }
  const std::size_t count = entry_count(n, k);
  if (entries.size() != count) {
    throw Error(ErrorCode::MalformedProfile,
                "expected " + std::to_string(count) + " entries, got " + std::to_string(entries.size()));
  }
  std::vector<KConstraint> ordered(count);
  std::vector<bool> filled(count, false);
  for (const auto& e : entries) {
    if (e.gap < 1 || e.gap > k || e.t < 0 || e.t > n + 1 - e.gap) {
      throw Error(ErrorCode::MalformedProfile, "entry " + entry_name(e.t, e.gap) + " out of range");
    }
    if (!directed && e.dir != Direction::Unknown) {
      throw Error(ErrorCode::MalformedProfile, "undirected profile has a directed entry " + entry_name(e.t, e.gap));
    }
    const std::size_t idx = index_of(n, e.t, e.gap);
    if (filled[idx]) throw Error(ErrorCode::MalformedProfile, "duplicate entry " + entry_name(e.t, e.gap));
    filled[idx] = true;
    ordered[idx] = e;
  }
  entries_ = std::move(ordered);
}

const KConstraint& Profile::at(int t, int gap) const {
  if (gap < 1 || gap > k_ || t < 0 || t > n_ + 1 - gap) {
    throw Error(ErrorCode::PreconditionViolation, "no entry " + entry_name(t, gap));
  }
  return entries_[index_of(n_, t, gap)];
}

bool Profile::fully_directed() const noexcept {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const KConstraint& e) { return e.dir == Direction::Unknown; });
}

Profile compute_profile(const Permutation& p, int k, bool directed) {
  const int n = p.n();
  if (k < 1 || k > n + 1) {
    throw Error(ErrorCode::PreconditionViolation, "k=" + std::to_string(k) + " outside 1.." + std::to_string(n + 1));
  }
  const WindowExtrema windows(p.elements());
  std::vector<KConstraint> entries;
  entries.reserve(Profile::entry_count(n, k));
  for (int gap = 1; gap <= k; ++gap) {
    for (int t = 0; t + gap <= n + 1; ++t) {
      const int a = p.position_of(t);
      const int b = p.position_of(t + gap);
      Direction dir = Direction::Unknown;
      if (directed) dir = a < b ? Direction::LeftToRight : Direction::RightToLeft;
      entries.push_back({t, gap, dir, windows.min(a, b), windows.max(a, b)});
    }
  }
  return Profile(n, k, directed, std::move(entries));
}

Profile compute_set_profile(std::span<const Permutation> perms, int k, bool directed) {
  if (perms.empty()) throw Error(ErrorCode::PreconditionViolation, "set profile of an empty collection");
  const int n = perms.front().n();
  for (const auto& p : perms) {
    if (p.n() != n) throw Error(ErrorCode::MismatchedN, "permutations on different n");
  }
  Profile merged = compute_profile(perms.front(), k, directed);
  std::vector<KConstraint> entries(merged.entries().begin(), merged.entries().end());
  for (const auto& p : perms.subspan(1)) {
    const Profile other = compute_profile(p, k, directed);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& o = other.entries()[i];
      entries[i].min_value = std::min(entries[i].min_value, o.min_value);
      entries[i].max_value = std::max(entries[i].max_value, o.max_value);
      if (entries[i].dir != o.dir) entries[i].dir = Direction::Unknown;
    }
  }
  return Profile(n, k, directed, std::move(entries));
}

std::vector<ProfileViolation> validate_profile(const Profile& f) {
  std::vector<ProfileViolation> out;
  const int last = f.n() + 1;
  for (const auto& e : f.entries()) {
    auto flag = [&](std::string reason) { out.push_back({e.t, e.gap, std::move(reason)}); };
    if (e.min_value < 0 || e.min_value > e.t) {
      flag("min " + std::to_string(e.min_value) + " outside 0.." + std::to_string(e.t));
    }
    if (e.max_value < e.right() || e.max_value > last) {
      flag("max " + std::to_string(e.max_value) + " outside " + std::to_string(e.right()) + ".." +
           std::to_string(last));
    }
    if (e.min_value == 0 && e.t != 0) flag("0 appears as a min away from the entries starting at 0");
    if (e.max_value == last && e.right() != last) {
      flag(std::to_string(last) + " appears as a max away from the entries ending at " + std::to_string(last));
    }
    if (e.dir == Direction::RightToLeft && (e.t == 0 || e.right() == last)) {
      flag("entry touching a fixed endpoint points the wrong way");
    }
  }
  return out;
}

void require_valid(const Profile& f) {
  const auto violations = validate_profile(f);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error(ErrorCode::InvalidProfile, "entry " + entry_name(v.t, v.gap) + ": " + v.reason +
                                               (violations.size() > 1
                                                    ? " (+" + std::to_string(violations.size() - 1) + " more)"
                                                    : std::string()));
  }
}

bool is_linear(const Profile& f) {
  require_k1(f);
  const int n = f.n();
  for (int a = 1; a <= n - 1; ++a) {
    const auto& x = f.at(a, 1);
    for (int b = a + 1; b <= n - 1; ++b) {
      const auto& y = f.at(b, 1);
      const bool x_in_y = y.min_value <= x.min_value && x.max_value <= y.max_value;
      const bool y_in_x = x.min_value <= y.min_value && y.max_value <= x.max_value;
      if (!x_in_y && !y_in_x) return false;
    }
  }
  return true;
}

std::vector<int> nb_set(const Profile& f, int c) {
  require_k1(f);
  if (c < 1 || c > f.n()) throw Error(ErrorCode::COutOfRange, "c=" + std::to_string(c) + " outside 1..n");
  std::vector<int> out;
  for (int t = 1; t <= f.n() - 1; ++t) {
    const auto& e = f.at(t, 1);
    if (c < e.min_value || e.max_value < c) out.push_back(t);
  }
  return out;
}

std::vector<BConstraintPair> b_constraints(const Profile& f) {
  std::vector<BConstraintPair> out;
  out.reserve(f.n() + 1);
  for (int t = 0; t <= f.n(); ++t) {
    const auto& e = f.at(t, 1);
    out.push_back({t, e.min_value, e.max_value, e.min_value == t || e.min_value == t + 1,
                   e.max_value == t || e.max_value == t + 1});
  }
  return out;
}

std::vector<NBRecord> nb_constraints(const Profile& f) {
  std::vector<NBRecord> out;
  for (int t = 0; t <= f.n(); ++t) {
    const auto& e = f.at(t, 1);
    for (int top = 0; top <= f.n() + 1; ++top) {
      if (top < e.min_value || top > e.max_value) out.push_back({top, t});
    }
  }
  return out;
}

}  // namespace minmax
