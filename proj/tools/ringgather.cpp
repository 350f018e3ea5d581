// ringgather: build, solve, synthesize, verify and simulate ring gathering.
//
// Exit codes: 0 success, 1 disproof or mismatch, 2 usage/validation error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ringgather/algorithm.hpp"
#include "ringgather/arena.hpp"
#include "ringgather/errors.hpp"
#include "ringgather/game.hpp"
#include "ringgather/io.hpp"
#include "ringgather/verifier.hpp"

using namespace ringgather;

namespace {

constexpr const char* kOutDirEnv = "RINGGATHER_OUT_DIR";
// The oracle's work grows with 4^k per raw state, so the command line keeps
// a much tighter default than the library.
constexpr std::size_t kCliOracleCap = 500;

struct RunConfig {
  std::string command;
  int n = 0;
  int k = 0;
  std::string semantics = "fsync";
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
  std::uint32_t round_bound = 0;
  std::size_t vertex_cap = ArenaOptions{}.vertex_cap;
  bool builtin = false;
  std::string table;
  bool include_periodic = false;
  std::string init;
  std::string policy = "random";
  bool verbose = false;
  std::size_t max_raw_states = kCliOracleCap;
  bool serial = false;
};

RingParams params_of(const RunConfig& cfg) {
  RingParams p{cfg.n, cfg.k};
  p.validate();
  return p;
}

std::string extension(const std::string& format) {
  if (format == "dot") return ".dot";
  if (format == "text") return ".txt";
  return ".json";
}

// Writes to --out, else to $RINGGATHER_OUT_DIR/<command>_n<n>_k<k>.<ext>, else stdout.
void emit(const RunConfig& cfg, const std::string& payload) {
  std::string path = cfg.out;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) {
      std::filesystem::create_directories(dir);
      path = (std::filesystem::path(dir) /
              (cfg.command + "_n" + std::to_string(cfg.n) + "_k" + std::to_string(cfg.k) + extension(cfg.format)))
                 .string();
    }
  }
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(path);
  if (!f) {
    throw ParamError("cannot write " + path);
  }
  f << payload;
  std::cerr << "wrote " << path << "\n";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Configuration parse_config(const std::string& s) {
  Gaps g;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      g.push_back(std::stoi(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos) {
        throw std::invalid_argument(tok);
      }
    } catch (const std::logic_error&) {
      throw ParamError("bad configuration entry '" + tok + "'");
    }
  }
  if (g.empty()) {
    throw ParamError("empty configuration");
  }
  return Configuration(std::move(g));
}

AlgorithmTable load_table(const RunConfig& cfg, const RingParams& p) {
  if (cfg.builtin && !cfg.table.empty()) {
    throw ParamError("--table and --builtin-gather3 are exclusive");
  }
  if (cfg.builtin) {
    return AlgorithmTable::builtin_gather3(p);
  }
  if (cfg.table.empty()) {
    if (p.k == 3) {
      return AlgorithmTable::builtin_gather3(p);
    }
    throw ParamError("no table: pass --table FILE or --builtin-gather3");
  }
  std::ifstream f(cfg.table);
  if (!f) {
    throw ParamError("cannot read " + cfg.table);
  }
  Json j;
  try {
    j = Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ParamError(std::string("malformed table: ") + e.what());
  }
  AlgorithmTable t = table_from_json(j);
  if (t.params().k != p.k) {
    throw ParamError("table is for k = " + std::to_string(t.params().k) + ", not " + std::to_string(p.k));
  }
  return t;
}

Arena arena_of(const RunConfig& cfg) {
  ArenaOptions opts;
  opts.semantics = parse_semantics(cfg.semantics);
  opts.vertex_cap = cfg.vertex_cap;
  opts.parallel = !cfg.serial;
  return build_arena(params_of(cfg), opts);
}

void print_stats(const Arena& a) {
  std::cerr << "n=" << a.params.n << " k=" << a.params.k << " " << to_string(a.semantics)
            << ": protagonist " << a.protagonist_count() << ", antagonist " << a.antagonists.size() << ", edges "
            << a.game.edge_count() << "\n";
}

int cmd_arena(const RunConfig& cfg) {
  const Arena a = arena_of(cfg);
  print_stats(a);
  if (cfg.format == "dot") {
    emit(cfg, arena_to_dot(a));
  } else if (cfg.format == "text") {
    std::ostringstream os;
    for (VertexId v = 0; v < a.protagonist_count(); ++v) {
      os << v << " " << a.classes[v].representative.str() << " "
         << to_string(classify(a.classes[v].representative).symmetry) << " -> " << a.game.successors(v).size()
         << "\n";
    }
    emit(cfg, os.str());
  } else {
    emit(cfg, dump(arena_to_json(a)));
  }
  return 0;
}

int cmd_synth(const RunConfig& cfg) {
  const Arena a = arena_of(cfg);
  if (cfg.verbose) {
    print_stats(a);
  }
  const Solution sol = attractor(a.game);
  const ValueMap values = game_values(a.game);
  const auto optimal = optimal_strategies(a.game, values);
  const auto choice = select_strategy(optimal);
  const AlgorithmTable table = strategy_to_table(choice, a);

  for (VertexId v = 0; v < a.protagonist_count(); ++v) {
    if (!sol.winning[v]) {
      std::cerr << "warning: losing class " << a.classes[v].representative.str() << " ("
                << to_string(classify(a.classes[v].representative).symmetry) << ")\n";
    }
  }
  if (cfg.format == "dot") {
    emit(cfg, arena_to_dot(a, &choice));
  } else if (cfg.format == "text") {
    std::ostringstream os;
    os << table.render() << "\nvalues:\n";
    for (VertexId v = 0; v < a.protagonist_count(); ++v) {
      os << "  " << a.classes[v].representative.str() << " "
         << (values.value[v] ? std::to_string(*values.value[v]) : std::string("inf")) << "\n";
    }
    emit(cfg, os.str());
  } else {
    Json losing = Json::array();
    for (VertexId v = 0; v < a.protagonist_count(); ++v) {
      if (!sol.winning[v]) {
        losing.push_back(to_json(a.classes[v].representative));
      }
    }
    emit(cfg, dump(Json{{"table", table_to_json(table)},
                        {"solution", solution_to_json(a, sol, values, optimal, choice)},
                        {"losing", std::move(losing)},
                        {"pseudocode", table.render()}}));
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const RingParams p = params_of(cfg);
  const AlgorithmTable table = load_table(cfg, p);
  VerifyOptions opts;
  opts.semantics = parse_semantics(cfg.semantics);
  if (cfg.round_bound > 0) {
    opts.round_bound = cfg.round_bound;
  }
  opts.include_periodic = cfg.include_periodic;
  opts.parallel = !cfg.serial;
  if (!cfg.init.empty()) {
    opts.starts.push_back(parse_config(cfg.init));
  }
  const Verdict v = exhaustive_verify(p, table, opts);

  if (cfg.format == "text") {
    std::ostringstream os;
    os << (v.verified ? "verified" : v.bound_exhausted ? "round bound exhausted" : "NOT verified") << ": "
       << v.classes_explored << " classes, max rounds " << v.max_rounds << ", max moves " << v.max_moves << "\n";
    if (cfg.verbose) {
      for (const ClassVerdict& c : v.classes) {
        os << "  " << c.representative.str() << " " << to_string(c.status) << " rounds " << c.worst_rounds
           << " moves " << c.worst_moves << "\n";
      }
    }
    if (v.counterexample) {
      os << "counterexample:\n" << trace_to_jsonl(*v.counterexample);
    }
    emit(cfg, os.str());
  } else {
    emit(cfg, dump(verdict_to_json(v, p, opts.semantics)));
  }
  if (!v.verified) {
    if (v.bound_exhausted && !v.counterexample) {
      std::cerr << "round bound exhausted\n";
    } else if (v.counterexample) {
      std::cerr << (v.bound_exhausted ? "round bound exhausted from " : "livelock from ")
                << v.counterexample->steps.front().config.str() << "\n";
    } else if (!v.gathered_stable) {
      std::cerr << "the table moves robots out of the gathered configuration\n";
    }
    return 1;
  }
  return 0;
}

int cmd_simulate(RunConfig cfg) {
  if (cfg.init.empty()) {
    throw ParamError("--init is required");
  }
  const Configuration c0 = parse_config(cfg.init);
  if ((cfg.n != 0 && cfg.n != c0.n()) || (cfg.k != 0 && cfg.k != c0.k())) {
    throw ParamError("--init " + c0.str() + " is a configuration with n = " + std::to_string(c0.n()) +
                     ", k = " + std::to_string(c0.k()));
  }
  cfg.n = c0.n();
  cfg.k = c0.k();
  const AlgorithmTable table = load_table(cfg, params_of(cfg));
  TraceOptions opts;
  opts.policy = parse_policy(cfg.policy);
  opts.seed = cfg.seed;
  opts.semantics = parse_semantics(cfg.semantics);
  if (cfg.round_bound > 0) {
    opts.max_rounds = cfg.round_bound;
  }
  const Trace t = sample_trace(c0, table, opts);
  emit(cfg, trace_to_jsonl(t));
  return 0;
}

int cmd_oracle_check(const RunConfig& cfg) {
  const RingParams p = params_of(cfg);
  const RawValues raw = oracle_values(p, cfg.max_raw_states, !cfg.serial);
  ArenaOptions aopts;
  aopts.vertex_cap = cfg.vertex_cap;
  aopts.parallel = !cfg.serial;
  const Arena a = build_arena(p, aopts);
  const ValueMap values = game_values(a.game);

  auto show = [](const Value& v) { return v ? std::to_string(*v) : std::string("inf"); };
  bool ok = true;
  Json rows = Json::array();
  std::ostringstream text;
  for (VertexId v = 0; v < a.protagonist_count(); ++v) {
    const ConfigClass& cls = a.classes[v];
    bool match = true;
    for (const Configuration& m : cls.members) {
      match = match && raw.at(m) == values.value[v];
    }
    ok = ok && match;
    const Value o = raw.at(cls.representative);
    rows.push_back(Json{{"rep", to_json(cls.representative)},
                        {"solver", values.value[v] ? Json(*values.value[v]) : Json(nullptr)},
                        {"oracle", o ? Json(*o) : Json(nullptr)},
                        {"match", match}});
    if (cfg.verbose || !match) {
      text << cls.representative.str() << " solver " << show(values.value[v]) << " oracle " << show(o)
           << (match ? "" : "  MISMATCH") << "\n";
    }
  }
  text << (ok ? "oracle agrees on " : "oracle DISAGREES on ") << a.protagonist_count() << " classes ("
       << raw.configs.size() << " raw configurations)\n";
  if (cfg.format == "json") {
    emit(cfg, dump(Json{{"n", p.n}, {"k", p.k}, {"agree", ok}, {"classes", std::move(rows)}}));
    std::cerr << text.str();
  } else {
    emit(cfg, text.str());
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gathering on anonymous rings as a reachability game"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool needs_params) {
    auto* n = sub->add_option("--n", cfg.n, "ring size");
    auto* k = sub->add_option("--k", cfg.k, "robot count");
    if (needs_params) {
      n->required();
      k->required();
    }
    sub->add_option("--semantics", cfg.semantics, "fsync or ssync")
        ->check(CLI::IsMember({"fsync", "ssync"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, std::string("output file (default: $") + kOutDirEnv + " or stdout)");
    sub->add_flag("--verbose", cfg.verbose);
    sub->add_flag("--serial", cfg.serial, "disable OpenMP kernels");
  };
  auto format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(allowed))->capture_default_str();
  };
  auto table = [&](CLI::App* sub) {
    sub->add_flag("--builtin-gather3", cfg.builtin, "use the built-in 3-robot algorithm");
    sub->add_option("--table", cfg.table, "algorithm table JSON");
  };

  auto* arena = app.add_subcommand("arena", "build and export the game arena");
  common(arena, true);
  format(arena, {"json", "dot", "text"});
  arena->add_option("--vertex-cap", cfg.vertex_cap)->capture_default_str();

  auto* synth = app.add_subcommand("synth", "solve the arena and emit a move-optimal algorithm table");
  common(synth, true);
  format(synth, {"json", "dot", "text"});
  synth->add_option("--vertex-cap", cfg.vertex_cap)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "exhaustively verify an algorithm table");
  common(verify, true);
  format(verify, {"json", "text"});
  table(verify);
  verify->add_option("--round-bound", cfg.round_bound, "default: number of classes + 1");
  verify->add_flag("--include-periodic", cfg.include_periodic, "require periodic starts to gather");
  verify->add_option("--init", cfg.init, "only this start, e.g. \"1,1,1\"")->allow_extra_args(false);

  auto* simulate = app.add_subcommand("simulate", "emit one execution trace as JSON lines");
  common(simulate, false);
  table(simulate);
  simulate->add_option("--init", cfg.init, "initial configuration, e.g. \"0,1,1\"")->required();
  simulate->add_option("--policy", cfg.policy)->check(CLI::IsMember({"random", "worst"}))->capture_default_str();
  simulate->add_option("--seed", cfg.seed)->capture_default_str();
  simulate->add_option("--round-bound", cfg.round_bound, "default: number of classes + 1");

  auto* oracle = app.add_subcommand("oracle-check", "compare solver values with the raw-configuration oracle");
  common(oracle, true);
  format(oracle, {"json", "text"});
  oracle->add_option("--max-raw-states", cfg.max_raw_states)->capture_default_str();
  oracle->add_option("--vertex-cap", cfg.vertex_cap)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*arena) {
      cfg.command = "arena";
      return cmd_arena(cfg);
    }
    if (*synth) {
      cfg.command = "synth";
      return cmd_synth(cfg);
    }
    if (*verify) {
      cfg.command = "verify";
      return cmd_verify(cfg);
    }
    if (*simulate) {
      cfg.command = "simulate";
      return cmd_simulate(cfg);
    }
    cfg.command = "oracle-check";
    return cmd_oracle_check(cfg);
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
