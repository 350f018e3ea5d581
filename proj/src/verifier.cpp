#include "ringgather/verifier.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <unordered_map>

#include "ringgather/errors.hpp"
#include "ringgather/kernels.hpp"

namespace ringgather {

const char* to_string(ClassStatus s) {
  switch (s) {
    case ClassStatus::Gathers: return "gathers";
    case ClassStatus::Livelock: return "livelock";
    case ClassStatus::BoundExceeded: return "bound-exceeded";
    case ClassStatus::NotExplored: return "not-explored";
  }
  return "?";
}

TracePolicy parse_policy(const std::string& s) {
  if (s == "random") return TracePolicy::Random;
  if (s == "worst" || s == "worst-case") return TracePolicy::WorstCase;
  throw ParamError("unknown policy '" + s + "'");
}

std::vector<AdversaryChoice> adversary_choices(const DecisionTuple& decisions, Semantics sem) {
  const int k = static_cast<int>(decisions.size());
  const std::uint32_t full = (1u << k) - 1;
  std::vector<AdversaryChoice> out;
  for (std::uint32_t act = (sem == Semantics::FSYNC ? full : 1); act <= full; ++act) {
    std::vector<int> any;
    for (int i = 0; i < k; ++i) {
      if ((act >> i) & 1 && decisions[i] == Decision::Any) {
        any.push_back(i);
      }
    }
    for (std::uint32_t mask = 0; mask < (1u << any.size()); ++mask) {
      AdversaryChoice c;
      c.activation.resize(k);
      for (int i = 0; i < k; ++i) {
        c.activation[i] = (act >> i) & 1;
      }
      for (std::size_t b = 0; b < any.size(); ++b) {
        c.chirality[any[b]] = (mask >> b) & 1 ? Move::CW : Move::CCW;
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

MoveTuple resolve(const DecisionTuple& decisions, const AdversaryChoice& adv) {
  const std::size_t k = decisions.size();
  if (adv.activation.size() != k) {
    throw ContractError("activation set has the wrong size");
  }
  if (std::none_of(adv.activation.begin(), adv.activation.end(), [](bool b) { return b; })) {
    throw ContractError("activation set is empty");
  }
  MoveTuple m(k, Move::Idle);
  std::size_t needed = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (!adv.activation[i]) {
      continue;
    }
    switch (decisions[i]) {
      case Decision::Idle: break;
      case Decision::CW: m[i] = Move::CW; break;
      case Decision::CCW: m[i] = Move::CCW; break;
      case Decision::Any: {
        auto it = adv.chirality.find(static_cast<int>(i));
        if (it == adv.chirality.end() || it->second == Move::Idle) {
          throw ContractError("missing direction for disoriented robot " + std::to_string(i));
        }
        m[i] = it->second;
        ++needed;
        break;
      }
    }
  }
  if (needed != adv.chirality.size()) {
    throw ContractError("direction given for a robot that is not a disoriented mover");
  }
  return m;
}

Configuration apply_round(const Configuration& c, const AlgorithmTable& table, const AdversaryChoice& adv) {
  return successor(c, resolve(table_decisions(table, c), adv));
}

int Trace::total_moves() const {
  int total = 0;
  for (const TraceStep& s : steps) {
    total += count_movers(s.moves);
  }
  return total;
}

std::optional<std::size_t> replay_mismatch(const Trace& t, const AlgorithmTable& table, Semantics sem) {
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep& s = t.steps[i];
    const Configuration& next = i + 1 < t.steps.size() ? t.steps[i + 1].config : t.final_config;
    try {
      if (table_decisions(table, s.config) != s.decisions) {
        return i;
      }
      if (sem == Semantics::FSYNC &&
          std::find(s.choice.activation.begin(), s.choice.activation.end(), false) != s.choice.activation.end()) {
        return i;
      }
      if (resolve(s.decisions, s.choice) != s.moves || successor(s.config, s.moves) != next) {
        return i;
      }
    } catch (const ContractError&) {
      return i;
    }
  }
  return std::nullopt;
}

namespace {

// The one-player game a table induces on classes: only the adversary chooses.
struct TableGame {
  std::vector<ConfigClass> classes;
  std::unordered_map<Configuration, std::size_t, ConfigurationHash> index;
  std::vector<ClassExpansionUnderTable> expansion;
  std::vector<std::vector<std::size_t>> next;  // successor class per branch
  std::size_t target = 0;

  std::size_t id(const Configuration& c) const { return index.at(representative(c)); }
};

TableGame build_table_game(const RingParams& p, const AlgorithmTable& table, Semantics sem, bool parallel) {
  TableGame g;
  g.classes = enumerate_classes(p);
  for (std::size_t i = 0; i < g.classes.size(); ++i) {
    g.index.emplace(g.classes[i].representative, i);
  }
  g.expansion = parallel ? kernels::expand_under_table_omp(g.classes, table, sem)
                         : kernels::expand_under_table_serial(g.classes, table, sem);
  g.next.resize(g.classes.size());
  for (std::size_t i = 0; i < g.classes.size(); ++i) {
    for (const Branch& b : g.expansion[i].branches) {
      g.next[i].push_back(g.index.at(b.next));
    }
  }
  g.target = g.id(gathered(p));
  return g;
}

struct Analysis {
  std::vector<ClassStatus> status;
  std::vector<std::uint32_t> rounds;
  std::vector<std::uint64_t> moves;
  // Branch toward the failure (livelock) or the longest play (gathers).
  std::vector<std::size_t> witness;
};

// Depth-first AND-OR search with per-class memo. A branch back into the
// current search stack is a cycle the adversary can repeat forever.
Analysis analyze(const TableGame& g, const std::vector<std::size_t>& starts) {
  const std::size_t n = g.classes.size();
  Analysis a;
  a.status.assign(n, ClassStatus::NotExplored);
  a.rounds.assign(n, 0);
  a.moves.assign(n, 0);
  a.witness.assign(n, 0);
  enum Color : std::uint8_t { White, Grey, Black };
  std::vector<Color> color(n, White);

  struct Frame {
    std::size_t v;
    std::size_t branch;
  };
  for (std::size_t s : starts) {
    if (color[s] != White) {
      continue;
    }
    std::vector<Frame> stack{{s, 0}};
    color[s] = Grey;
    a.status[s] = ClassStatus::Gathers;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const std::size_t v = f.v;
      if (v == g.target) {
        color[v] = Black;
        stack.pop_back();
        continue;
      }
      bool descended = false;
      while (f.branch < g.next[v].size() && a.status[v] != ClassStatus::Livelock) {
        const std::size_t b = f.branch;
        const std::size_t w = g.next[v][b];
        if (color[w] == Grey) {
          a.status[v] = ClassStatus::Livelock;
          a.witness[v] = b;
          break;
        }
        if (color[w] == White) {
          color[w] = Grey;
          a.status[w] = ClassStatus::Gathers;
          stack.push_back({w, 0});
          descended = true;
          break;
        }
        if (a.status[w] == ClassStatus::Livelock) {
          a.status[v] = ClassStatus::Livelock;
          a.witness[v] = b;
          break;
        }
        const std::uint32_t r = a.rounds[w] + 1;
        const std::uint64_t m = a.moves[w] + static_cast<std::uint64_t>(g.expansion[v].branches[b].movers);
        if (r > a.rounds[v]) {
          a.rounds[v] = r;
          a.witness[v] = b;
        }
        a.moves[v] = std::max(a.moves[v], m);
        ++f.branch;
      }
      if (descended) {
        continue;
      }
      if (g.next[v].empty() && v != g.target) {
        a.status[v] = ClassStatus::Livelock;
      }
      color[v] = Black;
      stack.pop_back();
    }
  }
  return a;
}

Trace concretize(const TableGame& g, const AlgorithmTable& table, Semantics sem, const std::vector<std::size_t>& path) {
  Trace t;
  Configuration c = g.classes[path.front()].representative;
  for (std::size_t j = 0; j + 1 < path.size(); ++j) {
    TraceStep step;
    step.config = c;
    step.decisions = table_decisions(table, c);
    bool found = false;
    for (AdversaryChoice& adv : adversary_choices(step.decisions, sem)) {
      const MoveTuple m = resolve(step.decisions, adv);
      const Configuration next = successor(c, m);
      if (g.id(next) == path[j + 1]) {
        step.choice = std::move(adv);
        step.moves = m;
        c = next;
        found = true;
        break;
      }
    }
    if (!found) {
      throw ContractError("class transition not realizable from " + c.str());
    }
    t.steps.push_back(std::move(step));
  }
  t.final_config = c;
  return t;
}

// Follows witness branches from `start` until a class repeats or the target.
std::vector<std::size_t> witness_path(const TableGame& g, const Analysis& a, std::size_t start, std::size_t limit) {
  std::vector<std::size_t> path{start};
  std::vector<bool> on_path(g.classes.size(), false);
  on_path[start] = true;
  std::size_t v = start;
  while (v != g.target && !g.next[v].empty() && path.size() <= limit) {
    v = g.next[v][a.witness[v]];
    path.push_back(v);
    if (on_path[v]) {
      break;
    }
    on_path[v] = true;
  }
  return path;
}

}  // namespace

Verdict exhaustive_verify(const RingParams& p, const AlgorithmTable& table, const VerifyOptions& opts) {
  p.validate();
  if (table.params().k != p.k) {
    throw ParamError("table is for k = " + std::to_string(table.params().k));
  }
  const TableGame g = build_table_game(p, table, opts.semantics, opts.parallel);
  const std::size_t n = g.classes.size();
  const std::uint32_t bound = opts.round_bound.value_or(static_cast<std::uint32_t>(n + 1));

  std::vector<std::size_t> starts;
  if (opts.starts.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      starts.push_back(i);
    }
  } else {
    for (const Configuration& c : opts.starts) {
      c.validate(p);
      starts.push_back(g.id(c));
    }
  }
  Analysis a = analyze(g, starts);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.status[i] == ClassStatus::Gathers && a.rounds[i] > bound) {
      a.status[i] = ClassStatus::BoundExceeded;
    }
  }

  Verdict v;
  const auto& gathered_decisions = g.expansion[g.target].decisions;
  v.gathered_stable = std::all_of(gathered_decisions.begin(), gathered_decisions.end(),
                                  [](Decision d) { return d == Decision::Idle; });
  v.classes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ClassVerdict& cv = v.classes[i];
    cv.representative = g.classes[i].representative;
    cv.kind = classify(cv.representative);
    cv.status = a.status[i];
    cv.worst_rounds = a.rounds[i];
    cv.worst_moves = a.moves[i];
    if (cv.status != ClassStatus::NotExplored) {
      ++v.classes_explored;
    }
  }

  v.verified = v.gathered_stable;
  std::optional<std::size_t> livelock_start, bound_start;
  for (std::size_t s : starts) {
    const bool periodic = v.classes[s].kind.symmetry == Symmetry::Periodic;
    if (periodic && !opts.include_periodic && opts.starts.empty()) {
      continue;
    }
    switch (a.status[s]) {
      case ClassStatus::Gathers:
        v.max_rounds = std::max(v.max_rounds, a.rounds[s]);
        v.max_moves = std::max(v.max_moves, a.moves[s]);
        break;
      case ClassStatus::Livelock:
        v.verified = false;
        if (!livelock_start) livelock_start = s;
        break;
      case ClassStatus::BoundExceeded:
        v.verified = false;
        v.bound_exhausted = true;
        if (!bound_start) bound_start = s;
        break;
      case ClassStatus::NotExplored:
        break;
    }
  }
  if (livelock_start) {
    v.counterexample = concretize(g, table, opts.semantics, witness_path(g, a, *livelock_start, n + 1));
  } else if (bound_start) {
    v.counterexample = concretize(g, table, opts.semantics, witness_path(g, a, *bound_start, bound + 1));
  }
  return v;
}

Value RawValues::at(const Configuration& c) const {
  auto it = std::lower_bound(configs.begin(), configs.end(), c);
  if (it == configs.end() || *it != c) {
    throw ContractError(c.str() + " is not a configuration of this oracle");
  }
  return value[static_cast<std::size_t>(it - configs.begin())];
}

RawValues oracle_values(const RingParams& p, std::size_t max_states, bool parallel) {
  p.validate();
  const std::uint64_t count = binomial(p.n + p.k - 1, p.n);
  if (count > max_states) {
    throw CapacityError("instance has " + std::to_string(count) + " raw configurations, above the oracle cap of " +
                        std::to_string(max_states));
  }
  RawValues rv;
  rv.params = p;
  rv.configs = enumerate_configurations(p);
  const auto raw = parallel ? kernels::expand_raw_omp(rv.configs) : kernels::expand_raw_serial(rv.configs);
  std::vector<bool> target(rv.configs.size());
  std::vector<Value> cur(rv.configs.size());
  for (std::size_t i = 0; i < rv.configs.size(); ++i) {
    target[i] = rv.configs[i].is_gathered();
    if (target[i]) {
      cur[i] = 0;
    }
  }
  std::vector<Value> nxt(cur.size());
  // Sweep t holds the optimal cost within t rounds; it settles after at most
  // one sweep per configuration.
  for (std::size_t sweep = 0; sweep <= rv.configs.size(); ++sweep) {
    const bool changed = parallel ? kernels::bellman_sweep_omp(raw, target, cur, nxt)
                                  : kernels::bellman_sweep_serial(raw, target, cur, nxt);
    cur.swap(nxt);
    if (!changed) {
      break;
    }
  }
  rv.value = std::move(cur);
  return rv;
}

Trace sample_trace(const Configuration& c0, const AlgorithmTable& table, const TraceOptions& opts) {
  const RingParams p = c0.params();
  p.validate();
  if (table.params().k != p.k) {
    throw ParamError("table is for k = " + std::to_string(table.params().k));
  }
  const TableGame g = build_table_game(p, table, opts.semantics, false);
  const Analysis a = analyze(g, [&] {
    std::vector<std::size_t> all(g.classes.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }());
  const std::uint32_t max_rounds = opts.max_rounds.value_or(static_cast<std::uint32_t>(g.classes.size() + 1));

  std::mt19937_64 rng(opts.seed);
  Trace t;
  Configuration c = c0;
  for (std::uint32_t r = 0; r < max_rounds && !c.is_gathered(); ++r) {
    TraceStep step;
    step.config = c;
    step.decisions = table_decisions(table, c);
    std::vector<AdversaryChoice> choices = adversary_choices(step.decisions, opts.semantics);
    std::size_t pick = 0;
    if (opts.policy == TracePolicy::Random) {
      pick = std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng);
    } else {
      std::uint64_t best = 0;
      for (std::size_t j = 0; j < choices.size(); ++j) {
        const MoveTuple m = resolve(step.decisions, choices[j]);
        const std::size_t w = g.id(successor(c, m));
        const std::uint64_t score = a.status[w] == ClassStatus::Livelock
                                        ? std::numeric_limits<std::uint64_t>::max()
                                        : a.moves[w] + static_cast<std::uint64_t>(count_movers(m));
        if (j == 0 || score > best) {
          best = score;
          pick = j;
        }
      }
    }
    step.choice = choices[pick];
    step.moves = resolve(step.decisions, step.choice);
    c = successor(c, step.moves);
    t.steps.push_back(std::move(step));
  }
  t.final_config = c;
  return t;
}

}  // namespace ringgather
