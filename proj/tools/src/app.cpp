#include "minmax/cli/app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "minmax/cli/format.hpp"
#include "minmax/error.hpp"
#include "minmax/reconstruction.hpp"
#include "minmax/solvers.hpp"

namespace minmax::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json to_json(const Permutation& p) { return json(std::vector<int>(p.elements().begin(), p.elements().end())); }

json to_json(const Profile& f) {
  json entries = json::array();
  for (const auto& e : f.entries()) {
    entries.push_back({{"t", e.t},
                       {"gap", e.gap},
                       {"dir", std::string(1, direction_symbol(e.dir))},
                       {"min", e.min_value},
                       {"max", e.max_value}});
  }
  return {{"n", f.n()}, {"k", f.k()}, {"directed", f.directed()}, {"constraints", entries}};
}

json to_json(const std::vector<NBRecord>& records) {
  json out = json::array();
  for (const auto& r : records) out.push_back({{"top", r.top}, {"basis", {r.basis, r.basis + 1}}});
  return out;
}

struct Options {
  bool json = false;

  std::string perm_file;
  std::string profile_file;
  int k = 1;
  bool directed = false;
  std::string method = "fpt";
  int cap = -1;
  std::string dump_graph;
  int n = 0;
};

class Commands {
 public:
  Commands(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int profile() {
    const Permutation p = parse_permutation(read_file(opt_.perm_file));
    const Profile f = compute_profile(p, opt_.k, opt_.directed);
    if (opt_.json) {
      emit({{"command", "profile"}, {"permutation", to_json(p)}, {"profile", to_json(f)}});
    } else {
      out_ << emit_profile(f);
    }
    return Ok;
  }

  int solve() {
    const Profile f = parse_profile(read_file(opt_.profile_file));
    const int cap = opt_.cap < 0 ? kDefaultBruteForceCap : opt_.cap;
    SolveOutcome outcome;
    if (opt_.method == "linear") {
      outcome = solve_linear(f);
    } else if (opt_.method == "fpt") {
      outcome = f.directed() ? solve_fpt_directed(f) : solve_undirected(f, UndirectedMethod::Fpt);
    } else if (f.directed()) {
      auto all = brute_force_solutions(f, cap);
      if (!all.empty()) outcome.witness = std::move(all.front());
    } else {
      outcome = solve_undirected(f, UndirectedMethod::Brute, cap);
    }

    if (!opt_.dump_graph.empty() && outcome.graph) {
      std::ofstream dot(opt_.dump_graph);
      if (!dot) throw std::runtime_error("cannot write '" + opt_.dump_graph + "'");
      dot << to_dot(*outcome.graph);
    }

    if (opt_.json) {
      json report{{"command", "solve"},
                  {"method", opt_.method},
                  {"satisfiable", outcome.satisfiable()},
                  {"witness", outcome.witness ? to_json(*outcome.witness) : json(nullptr)},
                  {"silent_nb", to_json(outcome.silent_nb)},
                  {"silent_b", outcome.silent_b},
                  {"settings_explored", outcome.settings_explored},
                  {"closures", outcome.closures}};
      emit(report);
    } else {
      out_ << (outcome.witness ? outcome.witness->to_string() : "NO") << '\n';
    }
    return outcome.satisfiable() ? Ok : Negative;
  }

  int verify_cmd() {
    const Permutation p = parse_permutation(read_file(opt_.perm_file));
    const Profile f = parse_profile(read_file(opt_.profile_file));
    const bool ok = verify(p, f);
    if (opt_.json) {
      emit({{"command", "verify"}, {"match", ok}});
    } else {
      out_ << (ok ? "OK" : "MISMATCH") << '\n';
    }
    return ok ? Ok : Negative;
  }

  int enumerate() {
    const Profile f = parse_profile(read_file(opt_.profile_file));
    const auto all = brute_force_solutions(f, opt_.cap < 0 ? kDefaultBruteForceCap : opt_.cap);
    if (opt_.json) {
      json list = json::array();
      for (const auto& p : all) list.push_back(to_json(p));
      emit({{"command", "enumerate"}, {"count", all.size()}, {"solutions", list}});
    } else {
      for (const auto& p : all) out_ << p.to_string() << '\n';
      if (all.empty()) out_ << "NO\n";
    }
    return all.empty() ? Negative : Ok;
  }

  int check_unique() {
    const Profile f = parse_profile(read_file(opt_.profile_file));
    const auto report = is_unique(f, opt_.cap < 0 ? kDefaultBruteForceCap : opt_.cap);
    const char* verdict = report.verdict == UniquenessReport::Verdict::Unique      ? "unique"
                          : report.verdict == UniquenessReport::Verdict::Collision ? "collision"
                                                                                   : "empty";
    if (opt_.json) {
      json witnesses = json::array();
      if (report.first) witnesses.push_back(to_json(*report.first));
      if (report.second) witnesses.push_back(to_json(*report.second));
      emit({{"command", "check-unique"},
            {"verdict", verdict},
            {"solution_count", report.solution_count},
            {"witnesses", witnesses}});
    } else {
      out_ << verdict << '\n';
      if (report.first) out_ << report.first->to_string() << '\n';
      if (report.second) out_ << report.second->to_string() << '\n';
    }
    return report.verdict == UniquenessReport::Verdict::Unique ? Ok : Negative;
  }

  int min_k() {
    const auto result = min_unique_k(opt_.n, opt_.directed, opt_.cap < 0 ? kDefaultExhaustiveCap : opt_.cap);
    if (opt_.json) {
      json report{{"command", "min-k"}, {"n", result.n}, {"directed", result.directed}, {"min_k", result.min_k}};
      report["collision"] = result.collision
                                ? json::array({to_json(result.collision->first), to_json(result.collision->second)})
                                : json(nullptr);
      emit(report);
    } else {
      out_ << result.min_k << '\n';
    }
    return Ok;
  }

  int counterexample() {
    const auto [p, q] = collision_pair(opt_.n, opt_.k, opt_.directed);
    if (opt_.json) {
      emit({{"command", "counterexample"},
            {"n", opt_.n},
            {"k", opt_.k},
            {"directed", opt_.directed},
            {"pair", json::array({to_json(p), to_json(q)})},
            {"profile", to_json(compute_profile(p, opt_.k, opt_.directed))}});
    } else {
      out_ << p.to_string() << '\n' << q.to_string() << '\n';
    }
    return Ok;
  }

 private:
  void emit(const json& report) { out_ << report.dump() << '\n'; }

  const Options& opt_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Reconstruct permutations from MinMax-betweenness profiles", "minmax"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Print every report as one JSON object");

  auto* profile = app.add_subcommand("profile", "Compute the k-profile of a permutation");
  profile->add_option("perm-file", opt.perm_file, "Permutation file")->required();
  profile->add_option("--k", opt.k, "Largest gap recorded")->check(CLI::PositiveNumber);
  profile->add_flag("--directed", opt.directed, "Record relative order of each pair");

  auto* solve = app.add_subcommand("solve", "Find a permutation with the given 1-profile, or print NO");
  solve->add_option("profile-file", opt.profile_file, "Profile file")->required();
  solve->add_option("--method", opt.method, "linear | fpt | brute")
      ->check(CLI::IsMember({"linear", "fpt", "brute"}));
  solve->add_option("--cap", opt.cap, "Largest n for the brute method")->check(CLI::NonNegativeNumber);
  solve->add_option("--dump-graph", opt.dump_graph, "Write the final precedence graph as Graphviz DOT");

  auto* verify_cmd = app.add_subcommand("verify", "Check a permutation against a profile");
  verify_cmd->add_option("perm-file", opt.perm_file, "Permutation file")->required();
  verify_cmd->add_option("profile-file", opt.profile_file, "Profile file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List every permutation with the given profile");
  enumerate->add_option("profile-file", opt.profile_file, "Profile file")->required();
  enumerate->add_option("--cap", opt.cap, "Largest n to enumerate")->check(CLI::NonNegativeNumber);

  auto* unique = app.add_subcommand("check-unique", "Decide whether a profile has exactly one preimage");
  unique->add_option("profile-file", opt.profile_file, "Profile file")->required();
  unique->add_option("--cap", opt.cap, "Largest n to enumerate")->check(CLI::NonNegativeNumber);

  auto* min_k = app.add_subcommand("min-k", "Smallest k whose k-profiles identify every permutation on n");
  min_k->add_option("n", opt.n, "Permutation size")->required()->check(CLI::PositiveNumber);
  min_k->add_flag("--directed", opt.directed, "Use directed profiles");
  min_k->add_option("--cap", opt.cap, "Largest n to enumerate")->check(CLI::NonNegativeNumber);

  auto* counter = app.add_subcommand("counterexample", "Two permutations sharing a k-profile");
  counter->add_option("n", opt.n, "Permutation size")->required()->check(CLI::PositiveNumber);
  counter->add_option("k", opt.k, "Gap bound")->required()->check(CLI::PositiveNumber);
  counter->add_flag("--directed", opt.directed, "Use directed profiles");

  std::vector<const char*> argv{"minmax"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "minmax: " << e.what() << '\n';
    return InputError;
  }

  Commands commands(opt, out);
  try {
    if (profile->parsed()) return commands.profile();
    if (solve->parsed()) return commands.solve();
    if (verify_cmd->parsed()) return commands.verify_cmd();
    if (enumerate->parsed()) return commands.enumerate();
    if (unique->parsed()) return commands.check_unique();
    if (min_k->parsed()) return commands.min_k();
    if (counter->parsed()) return commands.counterexample();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InternalInconsistency) {
      err << "minmax: internal error: " << e.what() << '\n';
    } else {
      err << "minmax: " << e.what() << '\n';
    }
    return InputError;
  } catch (const std::exception& e) {
    err << "minmax: " << e.what() << '\n';
    return InputError;
  }
  return InputError;
}

}  // namespace minmax::cli
