#include "minmax/cli/format.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "minmax/error.hpp"

namespace minmax::cli {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> fields;
};

[[noreturn]] void syntax_error(int line, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.fields.push_back(raw.substr(start, i - start));
    }
    if (!line.fields.empty()) out.push_back(std::move(line));
  }
  return out;
}

int to_int(std::string_view field, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    syntax_error(line, "expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

int header_value(const std::vector<Line>& lines, std::size_t index, std::string_view key) {
  if (index >= lines.size()) syntax_error(lines.empty() ? 1 : lines.back().number, "missing '" + std::string(key) + "' line");
  const auto& line = lines[index];
  if (line.fields.size() != 2 || line.fields[0] != key) {
    syntax_error(line.number, "expected '" + std::string(key) + " <int>'");
  }
  return to_int(line.fields[1], line.number);
}

Direction to_direction(std::string_view field, int line) {
  if (field == ">") return Direction::LeftToRight;
  if (field == "<") return Direction::RightToLeft;
  if (field == "?") return Direction::Unknown;
  syntax_error(line, "direction must be '>', '<' or '?', got '" + std::string(field) + "'");
}

}  // namespace

Profile parse_profile_unchecked(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) syntax_error(1, "empty document");
  const auto& head = lines[0];
  if (head.fields.size() != 2 || head.fields[0] != "minmax-profile") {
    syntax_error(head.number, "expected header 'minmax-profile 1'");
  }
  if (head.fields[1] != "1") syntax_error(head.number, "unsupported format version '" + std::string(head.fields[1]) + "'");

  const int n = header_value(lines, 1, "n");
  const int k = header_value(lines, 2, "k");
  const int directed = header_value(lines, 3, "directed");
  if (n < 1) syntax_error(lines[1].number, "n must be positive");
  if (k < 1 || k > n + 1) syntax_error(lines[2].number, "k must lie in 1..n+1");
  if (directed != 0 && directed != 1) syntax_error(lines[3].number, "directed must be 0 or 1");

  std::map<std::pair<int, int>, int> seen;  // (t, gap) -> line
  std::vector<KConstraint> entries;
  for (std::size_t i = 4; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.fields.size() != 5) syntax_error(line.number, "constraint lines have 5 fields: t gap dir min max");
    KConstraint e;
    e.t = to_int(line.fields[0], line.number);
    e.gap = to_int(line.fields[1], line.number);
    e.dir = to_direction(line.fields[2], line.number);
    e.min_value = to_int(line.fields[3], line.number);
    e.max_value = to_int(line.fields[4], line.number);
    if (e.gap < 1 || e.gap > k || e.t < 0 || e.t + e.gap > n + 1) {
      syntax_error(line.number, "no pair (t=" + std::to_string(e.t) + ", gap=" + std::to_string(e.gap) +
                                    ") in a " + std::to_string(k) + "-profile on n=" + std::to_string(n));
    }
    if (e.min_value > e.max_value) syntax_error(line.number, "min exceeds max");
    if (!directed && e.dir != Direction::Unknown) syntax_error(line.number, "undirected profile with a direction");
    if (auto [it, inserted] = seen.emplace(std::pair{e.t, e.gap}, line.number); !inserted) {
      syntax_error(line.number, "duplicate of line " + std::to_string(it->second));
    }
    entries.push_back(e);
  }
  const std::size_t expected = Profile::entry_count(n, k);
  if (entries.size() != expected) {
    syntax_error(lines.back().number, "document has " + std::to_string(entries.size()) + " constraint lines, expected " +
                                          std::to_string(expected));
  }
  return Profile(n, k, directed == 1, std::move(entries));
}

Profile parse_profile(std::string_view text) {
  Profile f = parse_profile_unchecked(text);
  require_valid(f);
  return f;
}

std::string emit_profile(const Profile& f) {
  std::ostringstream os;
  os << "minmax-profile 1\n"
     << "n " << f.n() << '\n'
     << "k " << f.k() << '\n'
     << "directed " << (f.directed() ? 1 : 0) << '\n';
  for (const auto& e : f.entries()) {
    os << e.t << ' ' << e.gap << ' ' << direction_symbol(e.dir) << ' ' << e.min_value << ' ' << e.max_value << '\n';
  }
  return os.str();
}

Permutation parse_permutation(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() != 1) syntax_error(lines.empty() ? 1 : lines[1].number, "expected exactly one permutation line");
  std::vector<int> seq;
  for (auto field : lines[0].fields) seq.push_back(to_int(field, lines[0].number));
  return validate_permutation(std::move(seq));
}

std::string emit_permutation(const Permutation& p) { return p.to_string() + "\n"; }

}  // namespace minmax::cli
