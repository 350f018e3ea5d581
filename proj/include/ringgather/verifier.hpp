#pragma once

// Adversarial execution of view-based algorithms and exhaustive verification
// against every scheduler/chirality choice.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringgather/algorithm.hpp"
#include "ringgather/arena.hpp"
#include "ringgather/game.hpp"
#include "ringgather/ring.hpp"

namespace ringgather {

struct AdversaryChoice {
  // Activated robots; all of them under FSYNC.
  std::vector<bool> activation;
  // Direction of every activated robot whose decision is Any.
  std::map<int, Move> chirality;

  friend bool operator==(const AdversaryChoice&, const AdversaryChoice&) = default;
};

// Every admissible choice against `decisions`, in a fixed order: activation
// subsets by ascending bitmask, then chirality bitmasks (bit set = CW).
std::vector<AdversaryChoice> adversary_choices(const DecisionTuple& decisions, Semantics sem);

// Throws ContractError when the choice does not fit the decisions.
MoveTuple resolve(const DecisionTuple& decisions, const AdversaryChoice& adv);

// One Look-Compute-Move round of `table` from c.
Configuration apply_round(const Configuration& c, const AlgorithmTable& table, const AdversaryChoice& adv);

struct TraceStep {
  Configuration config;
  DecisionTuple decisions;
  AdversaryChoice choice;
  MoveTuple moves;  // resolved, before reorganization
};

struct Trace {
  std::vector<TraceStep> steps;
  Configuration final_config;

  int total_moves() const;
};

// Re-runs every step through the dynamics; returns the first failing step.
std::optional<std::size_t> replay_mismatch(const Trace& t, const AlgorithmTable& table, Semantics sem);

enum class ClassStatus : std::uint8_t {
  Gathers,        // every play from the class reaches the gathered class
  Livelock,       // the adversary can force a cycle avoiding it
  BoundExceeded,  // gathers, but some play needs more rounds than allowed
  NotExplored,    // not reachable from the requested starts
};

const char* to_string(ClassStatus s);

struct ClassVerdict {
  Configuration representative;
  ConfigKind kind;
  ClassStatus status = ClassStatus::NotExplored;
  std::uint32_t worst_rounds = 0;
  std::uint64_t worst_moves = 0;
};

struct Verdict {
  bool verified = false;
  bool bound_exhausted = false;
  bool gathered_stable = true;  // the table keeps a gathered tower idle
  std::optional<Trace> counterexample;
  std::size_t classes_explored = 0;
  std::uint32_t max_rounds = 0;
  std::uint64_t max_moves = 0;
  std::vector<ClassVerdict> classes;  // ordered by representative
};

struct VerifyOptions {
  Semantics semantics = Semantics::FSYNC;
  // Defaults to the number of classes plus one.
  std::optional<std::uint32_t> round_bound;
  // Require periodic starts to gather too (they cannot).
  bool include_periodic = false;
  // Start classes (any member); all classes when empty. Explicit starts are
  // always checked, periodic or not.
  std::vector<Configuration> starts;
  bool parallel = true;
};

Verdict exhaustive_verify(const RingParams& p, const AlgorithmTable& table, const VerifyOptions& opts = {});

// One class-level step of the table-induced adversary game.
struct Branch {
  AdversaryChoice choice;
  Configuration next;  // representative of the successor class
  int movers = 0;
};

struct ClassExpansionUnderTable {
  DecisionTuple decisions;
  std::vector<Branch> branches;
};

// Move-count values computed directly on raw configurations.
struct RawValues {
  RingParams params;
  std::vector<Configuration> configs;  // lexicographic
  std::vector<Value> value;

  Value at(const Configuration& c) const;
};

constexpr std::size_t kDefaultOracleCap = 1'000'000;

// Throws CapacityError above `max_states` raw configurations.
RawValues oracle_values(const RingParams& p, std::size_t max_states = kDefaultOracleCap, bool parallel = true);

enum class TracePolicy : std::uint8_t { Random, WorstCase };

TracePolicy parse_policy(const std::string& s);

struct TraceOptions {
  TracePolicy policy = TracePolicy::Random;
  std::uint64_t seed = 0;
  Semantics semantics = Semantics::FSYNC;
  std::optional<std::uint32_t> max_rounds;  // defaults to classes + 1
};

Trace sample_trace(const Configuration& c0, const AlgorithmTable& table, const TraceOptions& opts = {});

}  // namespace ringgather
