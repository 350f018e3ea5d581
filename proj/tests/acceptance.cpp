// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ringgather/algorithm.hpp"
#include "ringgather/arena.hpp"
#include "ringgather/verifier.hpp"

using namespace ringgather;

namespace {

constexpr Decision I = Decision::Idle, CW = Decision::CW, CCW = Decision::CCW, ANY = Decision::Any;

struct Check {
  std::ostringstream why;
  bool ok = true;

  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      why << msg;
    }
    ok = ok && cond;
  }
};

std::vector<MoveTuple> all_moves(int k) {
  std::vector<MoveTuple> out;
  MoveTuple m(k, Move::Idle);
  while (true) {
    out.push_back(m);
    int j = 0;
    while (j < k && m[j] == Move::CCW) m[j++] = Move::Idle;
    if (j == k) break;
    m[j] = m[j] == Move::Idle ? Move::CW : Move::CCW;
  }
  return out;
}

void class_counts(Check& c) {
  for (int n = 3; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto got = enumerate_configurations({n, k}).size();
      c.require(got == oracle::pascal(n + k - 1, n),
                "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(got));
    }
  }
}

void lemma1(Check& c) {
  for (int n = 2; n <= 10; ++n) {
    for (int k = 1; k <= 4 && k < n; ++k) {
      for (const Configuration& cfg : enumerate_configurations({n, k})) {
        std::set<Gaps> seen;
        for (int i = 0; i < k; ++i) {
          for (const Gaps& t : observation(cfg, i).tuples) seen.insert(t);
        }
        std::set<Gaps> members;
        for (const Configuration& m : equivalence_class(cfg).members) members.insert(m.gaps());
        c.require(seen == members && members == oracle::dihedral_images(cfg.gaps()), cfg.str());
      }
    }
  }
}

void successor_validity(Check& c) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= 4 && k < n; ++k) {
      const auto moves = all_moves(k);
      for (const Configuration& cfg : enumerate_configurations({n, k})) {
        for (const MoveTuple& m : moves) {
          const Configuration s = successor(cfg, m);
          bool valid = s.k() == k && s.n() == n;
          for (int d : s.gaps()) valid = valid && d >= -1 && d <= n - 1;
          c.require(valid && oracle::matches_physical(cfg.gaps(), m, s.gaps()), cfg.str() + " -> " + s.str());
        }
      }
    }
  }
}

void toy_game(Check& c) {
  const oracle::Toy t = oracle::toy_game();
  const Solution s = attractor(t.game);
  std::set<VertexId> win_p;
  for (VertexId v : {t.P1, t.P2, t.P3, t.P4}) {
    if (s.winning[v]) win_p.insert(v);
  }
  c.require(win_p == std::set<VertexId>{t.P1, t.P3}, "winning protagonist positions");
  c.require(s.strategy[t.P1] == t.O2, "strategy at P1");
}

void winning_region(Check& c) {
  for (int n = 4; n <= 15; ++n) {
    const Arena a = build_arena({n, 3});
    const Solution s = attractor(a.game);
    c.require(periodic_impossibility_violations(a, s).empty(), "n=" + std::to_string(n));
    bool has_periodic = false;
    for (const ConfigClass& cls : a.classes) has_periodic = has_periodic || is_periodic(cls.representative);
    c.require(has_periodic == (n % 3 == 0), "periodic classes at n=" + std::to_string(n));
  }
}

// Expected optimal decision tuples on a k=3 representative, by class type.
std::set<DecisionTuple> expected_optima(const Configuration& r) {
  const int a = r[0], b = r[1], z = r[2];
  if (r.is_gathered()) return {{I, I, I}};
  if (a == -1) {
    if (b == z) return {{I, I, ANY}};
    return {{I, I, CCW}};
  }
  if (a == b) return {{CW, I, CCW}};  // (x,x,z), x<z
  if (b == z) return {{I, I, ANY}};   // (x,z,z), x<z: the disoriented robot moves
  return {{CW, I, I}, {I, I, CCW}, {CW, I, CCW}};
}

void optimal_patterns(Check& c) {
  for (int n = 5; n <= 15; ++n) {
    const Arena a = build_arena({n, 3});
    const auto optimal = optimal_strategies(a.game, game_values(a.game));
    for (VertexId v = 0; v < a.protagonist_count(); ++v) {
      const Configuration& r = a.classes[v].representative;
      if (is_periodic(r)) continue;
      std::set<DecisionTuple> got;
      for (VertexId o : optimal[v]) got.insert(a.antagonist(o).decisions);
      c.require(got == expected_optima(r), "n=" + std::to_string(n) + " class " + r.str());
    }
  }
}

void oracle_equivalence(Check& c) {
  for (int n = 4; n <= 8; ++n) {
    const Arena a = build_arena({n, 3});
    const ValueMap v = game_values(a.game);
    const RawValues raw = oracle_values({n, 3});
    for (VertexId p = 0; p < a.protagonist_count(); ++p) {
      for (const Configuration& m : a.classes[p].members) {
        c.require(raw.at(m) == v.value[p], "n=" + std::to_string(n) + " " + m.str());
      }
    }
  }
}

// Every adversary branch of the table from any member of a winning class lands
// in the classes the chosen antagonist vertex leads to, and nowhere else.
void round_trip(Check& c) {
  for (int n = 4; n <= 8; ++n) {
    const Arena a = build_arena({n, 3});
    const Solution s = attractor(a.game);
    const auto choice = select_strategy(optimal_strategies(a.game, game_values(a.game)));
    const AlgorithmTable t = strategy_to_table(choice, a);
    for (VertexId v = 0; v < a.protagonist_count(); ++v) {
      if (!s.winning[v]) continue;
      c.require(choice[v].has_value(), "no choice at " + a.classes[v].representative.str());
      if (!choice[v]) continue;
      std::set<VertexId> game_next;
      for (const Edge& e : a.game.successors(*choice[v])) game_next.insert(e.to);
      for (const Configuration& m : a.classes[v].members) {
        std::set<VertexId> table_next;
        for (const AdversaryChoice& adv : adversary_choices(table_decisions(t, m), Semantics::FSYNC)) {
          table_next.insert(a.class_id(apply_round(m, t, adv)));
        }
        c.require(table_next == game_next, "n=" + std::to_string(n) + " from " + m.str());
      }
    }
    // And the table gathers wherever the strategy wins.
    VerifyOptions o;
    for (VertexId v = 0; v < a.protagonist_count(); ++v) {
      if (s.winning[v]) o.starts.push_back(a.classes[v].representative);
    }
    c.require(exhaustive_verify({n, 3}, t, o).verified, "synthesized table n=" + std::to_string(n));
  }
}

void theorem3(Check& c) {
  std::vector<int> ns;
  for (int n = 4; n <= 15; ++n) ns.push_back(n);
  ns.push_back(100);
  for (int n : ns) {
    const RingParams p{n, 3};
    const Verdict v = exhaustive_verify(p, AlgorithmTable::builtin_gather3(p));
    c.require(v.verified && !v.counterexample, "n=" + std::to_string(n));
  }
}

void impossibility(Check& c) {
  for (int n : {6, 9, 12, 15}) {
    const RingParams p{n, 3};
    const AlgorithmTable t = AlgorithmTable::builtin_gather3(p);
    const int d = n / 3 - 1;
    VerifyOptions o;
    o.starts = {{d, d, d}};
    const Verdict v = exhaustive_verify(p, t, o);
    const bool cex = v.counterexample && !v.counterexample->steps.empty() &&
                     v.counterexample->steps.front().config == Configuration{d, d, d} &&
                     !replay_mismatch(*v.counterexample, t, Semantics::FSYNC) &&
                     !v.counterexample->final_config.is_gathered();
    c.require(!v.verified && !v.bound_exhausted && cex, "n=" + std::to_string(n));
  }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"configuration counts equal binomial(n+k-1, n)", class_counts},
      {"observations of all robots cover the class", lemma1},
      {"successor validity and position-level agreement", successor_validity},
      {"toy game winning positions and strategy", toy_game},
      {"k=3 winning region is exactly the non-periodic classes", winning_region},
      {"k=3 optimal successor sets match the class patterns", optimal_patterns},
      {"quotient values equal raw-configuration values", oracle_equivalence},
      {"synthesized table replays the game strategy", round_trip},
      {"builtin gather3 verified for n=4..15 and n=100", theorem3},
      {"periodic starts yield replayable counterexamples", impossibility},
  };
  int failed = 0;
  int idx = 0;
  for (const auto& [name, run] : criteria) {
    ++idx;
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    run(c);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::printf("[%s] %2d %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", idx, name, dt.count(),
                c.ok ? "" : ": first failure ", c.why.str().c_str());
    failed += !c.ok;
  }
  std::printf("%d/%d criteria passed\n", idx - failed, idx);
  return failed ? 1 : 0;
}
