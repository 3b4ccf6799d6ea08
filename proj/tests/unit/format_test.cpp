#include "doctest.h"

#include <fstream>
#include <random>

#include "fixtures.hpp"
#include "minmax/cli/format.hpp"
#include "minmax/error.hpp"
#include "oracles.hpp"

using namespace minmax;
using namespace minmax::cli;

namespace {

std::string doc(int n, bool directed, const std::string& lines) {
  return "minmax-profile 1\nn " + std::to_string(n) + "\nk 1\ndirected " + (directed ? "1" : "0") + "\n" + lines;
}

std::string nine_lines(char dir, const std::string& six) {
  std::string out;
  for (int t = 0; t <= 9; ++t) {
    if (t == 6) {
      out += six + "\n";
      continue;
    }
    const int lo = t == 0 ? 0 : 1;
    const int hi = t == 9 ? 10 : 9;
    const char d = dir == '?' ? '?' : '>';
    out += std::to_string(t) + " 1 " + d + " " + std::to_string(lo) + " " + std::to_string(hi) + "\n";
  }
  return out;
}

ErrorCode code_of(const std::string& text) {
  try {
    parse_profile(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("constraint lines") {
  const auto f = parse_profile(doc(9, true, nine_lines('>', "6 1 > 4 7")));
  CHECK(f.at(6, 1) == KConstraint{6, 1, Direction::LeftToRight, 4, 7});
  const auto u = parse_profile(doc(9, false, nine_lines('?', "6 1 ? 4 7")));
  CHECK(u.at(6, 1) == KConstraint{6, 1, Direction::Unknown, 4, 7});
  CHECK(code_of(doc(9, true, nine_lines('>', "6 1 > 7 4"))) == ErrorCode::SyntaxError);
}

TEST_CASE("grammar errors carry a line number") {
  try {
    parse_profile(doc(9, true, nine_lines('>', "6 1 > 7 4")));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 11") != std::string::npos);
  }
}

TEST_CASE("rejected documents") {
  CHECK(code_of("minmax-profile 2\nn 1\nk 1\ndirected 1\n0 1 > 0 1\n1 1 > 1 2\n") == ErrorCode::SyntaxError);
  CHECK(code_of(doc(1, true, "0 1 > 0 1\n0 1 > 0 1\n1 1 > 1 2\n")) == ErrorCode::SyntaxError);
  CHECK(code_of(doc(1, true, "0 1 > 0 1\n")) == ErrorCode::SyntaxError);
  CHECK(code_of(doc(1, false, "0 1 > 0 1\n1 1 ? 1 2\n")) == ErrorCode::SyntaxError);
  CHECK(code_of(doc(1, true, "0 1 > 0 1\n1 1 > 1 2 9\n")) == ErrorCode::SyntaxError);
  CHECK(code_of(doc(1, true, "0 1 > 0 1\n1 1 x 1 2\n")) == ErrorCode::SyntaxError);
  CHECK(code_of(doc(1, true, "0 1 > 0 1\n1 2 > 1 2\n")) == ErrorCode::SyntaxError);
  CHECK(code_of(doc(1, true, "0 1 > 0 1\n1 1 < 1 2\n")) == ErrorCode::InvalidProfile);
  CHECK_NOTHROW(parse_profile_unchecked(doc(1, true, "0 1 > 0 1\n1 1 < 1 2\n")));
}

TEST_CASE("comments and spacing are tolerated") {
  const auto f = parse_profile("# header\nminmax-profile   1\nn 1 # one\nk 1\ndirected 1\n\n  0 1 > 0 1\n1\t1 > 1 2\n");
  CHECK(f == compute_profile(Permutation::identity(1), 1, true));
}

TEST_CASE("data files parse") {
  std::ifstream in(testing::data_path("example.prof"));
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto f = parse_profile(text);
  CHECK(f == compute_profile(testing::running_example(), 1, true));
  CHECK(emit_profile(f) == text);
}

TEST_CASE("permutation lines") {
  CHECK(parse_permutation("0 2 1 3\n") == validate_permutation({0, 2, 1, 3}));
  CHECK(emit_permutation(Permutation::identity(2)) == "0 1 2 3\n");
  CHECK_THROWS_AS(parse_permutation("0 2 1 3\n0 1 2 3\n"), Error);
  CHECK_THROWS_AS(parse_permutation("0 2 x 3\n"), Error);
  CHECK_THROWS_AS(parse_permutation("0 2 2 3\n"), Error);
}

TEST_CASE("round trip") {
  std::mt19937 rng(41);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + rep % 8;
    const auto p = validate_permutation(testing::random_interior(n, rng));
    const auto f = compute_profile(p, 1 + rep % (n + 1), rep % 2 == 0);
    const auto text = emit_profile(f);
    CHECK(parse_profile(text) == f);
    CHECK(emit_profile(parse_profile(text)) == text);
  }
}
