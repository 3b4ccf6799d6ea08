#include "doctest.h"

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "minmax/error.hpp"
#include "minmax/solvers.hpp"
#include "oracles.hpp"

using namespace minmax;

namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalInconsistency;
}

bool contains(const std::vector<Permutation>& all, const Permutation& p) {
  return std::find(all.begin(), all.end(), p) != all.end();
}

}  // namespace

TEST_CASE("verify examples") {
  const auto f = compute_profile(testing::running_example(), 1, true);
  CHECK(verify(testing::running_example(), f));
  CHECK(verify(validate_permutation({0, 6, 4, 7, 2, 9, 1, 8, 3, 5, 10}), f));
  CHECK_FALSE(verify(Permutation::identity(9), f));
  CHECK(code_of([&] { verify(Permutation::identity(8), f); }) == ErrorCode::MismatchedN);
}

TEST_CASE("brute force examples") {
  const auto id = compute_profile(Permutation::identity(4), 1, true);
  CHECK(brute_force_solutions(id) == std::vector<Permutation>{Permutation::identity(4)});
  CHECK(brute_force_solutions(testing::unsatisfiable_n2()).empty());
  const auto big = compute_profile(Permutation::identity(10), 1, true);
  CHECK(code_of([&] { brute_force_solutions(big); }) == ErrorCode::TooLarge);
  CHECK(brute_force_solutions(big, 10).size() == 1);
}

TEST_CASE("running example directed: linear and fpt witnesses lie in the oracle set") {
  const auto f = compute_profile(testing::running_example(), 1, true);
  const auto all = brute_force_solutions(f);
  CHECK(all.size() == 12);

  const auto lin = solve_linear(f);
  REQUIRE(lin.satisfiable());
  CHECK(contains(all, *lin.witness));
  CHECK(lin.silent_nb == std::vector<NBRecord>{{2, 6}});

  const auto fpt = solve_fpt_directed(f);
  REQUIRE(fpt.satisfiable());
  CHECK(contains(all, *fpt.witness));
  CHECK(fpt.silent_nb == std::vector<NBRecord>{{2, 6}});
  CHECK(fpt.settings_explored >= 1);
  CHECK(fpt.settings_explored <= 2);
  CHECK(fpt.graph.has_value());
}

TEST_CASE("identity profiles solve to identity") {
  for (int n = 1; n <= 8; ++n) {
    const auto f = compute_profile(Permutation::identity(n), 1, true);
    const auto fpt = solve_fpt_directed(f);
    REQUIRE(fpt.satisfiable());
    CHECK(*fpt.witness == Permutation::identity(n));
    CHECK(fpt.silent_nb.empty());
    CHECK(fpt.settings_explored == 1);
  }
  const auto u = compute_profile(Permutation::identity(3), 1, false);
  CHECK(*solve_undirected(u, UndirectedMethod::Fpt).witness == Permutation::identity(3));
  CHECK(*solve_undirected(u, UndirectedMethod::Brute).witness == Permutation::identity(3));
}

TEST_CASE("unsatisfiable profile gives No on every route") {
  const auto f = testing::unsatisfiable_n2();
  CHECK_FALSE(solve_fpt_directed(f).satisfiable());
  CHECK_FALSE(solve_linear(f).satisfiable());
}

TEST_CASE("solver input gates") {
  CHECK(code_of([] { solve_linear(compute_profile(Permutation::identity(3), 1, true)); }) == ErrorCode::NotLinear);
  CHECK(code_of([] { solve_linear(compute_profile(Permutation::identity(3), 1, false)); }) ==
        ErrorCode::NotDirected);
  CHECK(code_of([] { solve_fpt_directed(compute_profile(Permutation::identity(3), 2, true)); }) ==
        ErrorCode::KMismatch);
  CHECK(code_of([] { solve_undirected(compute_profile(Permutation::identity(3), 1, true), UndirectedMethod::Fpt); }) ==
        ErrorCode::NotUndirected);
  using testing::gap1;
  const Profile bad(3, 1, false, {gap1(0, '?', 0, 1), gap1(1, '?', 0, 3), gap1(2, '?', 1, 4), gap1(3, '?', 1, 4)});
  CHECK(code_of([&] { solve_undirected(bad, UndirectedMethod::Fpt); }) == ErrorCode::InvalidProfile);
  CHECK(code_of([&] { solve_undirected(bad, UndirectedMethod::Brute); }) == ErrorCode::InvalidProfile);
}

TEST_CASE("fpt directed agrees with the oracle on every permutation profile, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const auto f = compute_profile(p, 1, true);
      const auto out = solve_fpt_directed(f);
      REQUIRE(out.satisfiable());
      CHECK(verify(*out.witness, f));
    });
  }
}

TEST_CASE("fpt directed agrees with the oracle on random valid profiles") {
  std::mt19937 rng(31);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 1 + rep % 6;
    const auto f = testing::random_valid_profile(n, true, rng);
    const auto all = brute_force_solutions(f);
    const auto out = solve_fpt_directed(f);
    CHECK(out.satisfiable() == !all.empty());
    if (out.satisfiable()) CHECK(contains(all, *out.witness));
  }
}

TEST_CASE("linear solver on every linear profile, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const auto f = compute_profile(p, 1, true);
      if (!is_linear(f)) return;
      const auto out = solve_linear(f);
      REQUIRE(out.satisfiable());
      CHECK(verify(*out.witness, f));
    });
  }
}

TEST_CASE("linear solver verdict matches the oracle on mutated linear profiles") {
  std::mt19937 rng(32);
  std::vector<Profile> linear;
  for (int n = 2; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      auto f = compute_profile(p, 1, true);
      if (is_linear(f)) linear.push_back(std::move(f));
    });
  }
  int tried = 0;
  while (tried < 200) {
    std::uniform_int_distribution<std::size_t> pick(0, linear.size() - 1);
    const auto g = testing::mutate_profile(linear[pick(rng)], rng);
    if (!is_linear(g)) continue;
    ++tried;
    CHECK(solve_linear(g).satisfiable() == !brute_force_solutions(g).empty());
  }
}

TEST_CASE("undirected fpt agrees with the oracle") {
  std::mt19937 rng(33);
  for (int n = 1; n <= 5; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const auto f = compute_profile(p, 1, false);
      const auto out = solve_undirected(f, UndirectedMethod::Fpt);
      REQUIRE(out.satisfiable());
      CHECK(verify(*out.witness, f));
    });
  }
  for (int rep = 0; rep < 200; ++rep) {
    const auto f = testing::random_valid_profile(1 + rep % 6, false, rng);
    const auto all = brute_force_solutions(f);
    const auto out = solve_undirected(f, UndirectedMethod::Fpt);
    CHECK(out.satisfiable() == !all.empty());
    if (out.satisfiable()) CHECK(contains(all, *out.witness));
  }
}

TEST_CASE("undirected running example: witness, silent sets") {
  const auto f = compute_profile(testing::running_example(), 1, false);
  const auto out = solve_undirected(f, UndirectedMethod::Fpt);
  REQUIRE(out.satisfiable());
  CHECK(contains(brute_force_solutions(f), *out.witness));
  CHECK_FALSE(out.silent_b.empty());
}

TEST_CASE("FPT monotonicity: every oracle solution survives the setting it induces") {
  for (const auto& p : {testing::running_example(), testing::setting_sequence_example()}) {
    const auto f = compute_profile(p, 1, true);
    const auto root = build_easy_arcs(f);
    std::vector<SilentChoice> choices;
    for (const auto& r : root.silent) choices.push_back(SilentChoice{SilentChoice::Type::NB, r, {}});
    const auto sols = f.n() <= 9 ? brute_force_solutions(f) : std::vector<Permutation>{p};
    for (const auto& s : sols) {
      Setting setting;
      for (const auto& r : root.silent) {
        const bool top_first = s.position_of(r.top) < s.position_of(r.basis);
        setting.push_back(top_first ? Orientation::First : Orientation::Second);
      }
      const auto g = apply_setting(root.graph, choices, setting);
      CHECK_FALSE(has_cycle(g));
      for (const auto& a : g.arcs()) CHECK(s.position_of(a.from) < s.position_of(a.to));
    }
  }
}
