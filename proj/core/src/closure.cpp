#include <bit>

#include "minmax/precedence_graph.hpp"

namespace minmax {

// Works directly on the bit rows of a graph it owns for the duration of one
// closure run.
class ClosureEngine {
 public:
  explicit ClosureEngine(PrecedenceGraph& g) : g_(g) {}

  void run(std::span<const NBRecord> nb, std::span<const BSetting> b) {
    for (;;) {
      transitive_pass();
      bool added = false;
      for (const auto& r : nb) added |= apply_nb(r);
      for (const auto& pair : b) added |= apply_b(pair);
      if (!added) return;
    }
  }

 private:
  // Warshall over bit rows. Newly set bits are tagged T; the diagonal is
  // cleared as it goes, so cycles show up as 2-cycles instead of loops.
  void transitive_pass() {
    const int count = g_.vertices_;
    const std::size_t words = g_.words_;
    for (int k = 0; k < count; ++k) {
      const std::uint64_t* via = &g_.rows_[g_.row_offset(k)];
      for (int i = 0; i < count; ++i) {
        if (i == k || !g_.has_arc(i, k)) continue;
        std::uint64_t* row = &g_.rows_[g_.row_offset(i)];
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t fresh = via[w] & ~row[w];
          if (w == static_cast<std::size_t>(i >> 6)) fresh &= ~(std::uint64_t{1} << (i & 63));
          if (!fresh) continue;
          row[w] |= fresh;
          while (fresh) {
            const int bit = std::countr_zero(fresh);
            fresh &= fresh - 1;
            const int y = static_cast<int>(w * 64) + bit;
            g_.kinds_[static_cast<std::size_t>(i) * count + y] = static_cast<std::uint8_t>(ArcKind::T);
          }
        }
      }
    }
  }

  bool couple(int x1, int y1, int x2, int y2) {
    const bool a = g_.has_arc(x1, y1);
    const bool b = g_.has_arc(x2, y2);
    if (a == b) return false;
    return a ? g_.add_arc(x2, y2, ArcKind::NB) : g_.add_arc(x1, y1, ArcKind::NB);
  }

  bool apply_nb(const NBRecord& r) {
    const int t = r.basis;
    const int u = r.basis + 1;
    bool added = couple(t, r.top, u, r.top);
    added |= couple(r.top, t, r.top, u);
    return added;
  }

  bool apply_b(const BSetting& pair) {
    bool added = false;
    for (bool plus : {true, false}) {
      if (!pair.triggered(g_, plus)) continue;
      for (auto [x, y] : pair.arcs(plus)) added |= g_.add_arc(x, y, ArcKind::B);
    }
    return added;
  }

  PrecedenceGraph& g_;
};

PrecedenceGraph build_closure(PrecedenceGraph g, std::span<const NBRecord> nb, std::span<const BSetting> b) {
  ClosureEngine(g).run(nb, b);
  return g;
}

}  // namespace minmax
