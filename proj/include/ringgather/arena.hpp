#pragma once

// The gathering arena: protagonist vertices are configuration classes,
// antagonist vertices are (representative, decision tuple) pairs.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ringgather/dynamics.hpp"
#include "ringgather/game.hpp"
#include "ringgather/ring.hpp"

namespace ringgather {

// Ordered so that tuples compare Idle < CW < CCW < Any.
enum class Decision : std::uint8_t { Idle, CW, CCW, Any };

using DecisionTuple = std::vector<Decision>;

const char* to_string(Decision d);
Decision parse_decision(const std::string& s);

inline Decision flip(Decision d) {
  switch (d) {
    case Decision::CW: return Decision::CCW;
    case Decision::CCW: return Decision::CW;
    default: return d;
  }
}

inline Decision to_decision(Move m) {
  switch (m) {
    case Move::CW: return Decision::CW;
    case Move::CCW: return Decision::CCW;
    default: return Decision::Idle;
  }
}

enum class Semantics : std::uint8_t { FSYNC, SSYNC };

const char* to_string(Semantics s);
Semantics parse_semantics(const std::string& s);

// Maps a decision expressed in robot i's view frame to ring directions.
// Any requires robot i to be disoriented.
Decision oriented_move(Decision d, const Configuration& c, int i);

struct AntagonistVertex {
  Configuration config;  // class representative
  DecisionTuple decisions;

  friend auto operator<=>(const AntagonistVertex&, const AntagonistVertex&) = default;
  friend bool operator==(const AntagonistVertex&, const AntagonistVertex&) = default;
};

// Decision tuples reachable from rep(cls) through some decision function,
// one option set per distinct view, ascending and deduplicated.
std::vector<DecisionTuple> protagonist_successors(const ConfigClass& cls);

// Every resolution of Any into CW or CCW.
std::vector<MoveTuple> compatible_move_tuples(const DecisionTuple& decisions);

// Under SSYNC additionally every non-empty activation subset; non-activated
// robots stay idle. Result is sorted by representative.
std::vector<Configuration> antagonist_successors(const AntagonistVertex& v, Semantics sem = Semantics::FSYNC);

int decision_weight(const DecisionTuple& d);

struct ArenaOptions {
  Semantics semantics = Semantics::FSYNC;
  std::size_t vertex_cap = 5'000'000;
  bool parallel = true;
};

class Arena {
 public:
  RingParams params;
  Semantics semantics = Semantics::FSYNC;
  // Protagonist vertex i is classes[i], ordered by representative.
  std::vector<ConfigClass> classes;
  // Antagonist vertex classes.size() + j is antagonists[j].
  std::vector<AntagonistVertex> antagonists;
  Game game;

  std::size_t protagonist_count() const { return classes.size(); }
  bool is_protagonist(VertexId v) const { return v < classes.size(); }
  const AntagonistVertex& antagonist(VertexId v) const { return antagonists.at(v - classes.size()); }

  // Protagonist vertex of the class containing c.
  VertexId class_id(const Configuration& c) const;
  std::optional<VertexId> find_class(const Configuration& rep) const;
  VertexId target() const;

  friend bool operator==(const Arena& a, const Arena& b) {
    return a.params == b.params && a.semantics == b.semantics && a.antagonists == b.antagonists &&
           a.game == b.game && a.reps_equal(b);
  }

 private:
  bool reps_equal(const Arena& o) const;
  std::unordered_map<Configuration, VertexId, ConfigurationHash> index_;
  friend Arena build_arena(const RingParams&, const ArenaOptions&);
};

// Every equivalence class of p, ordered by representative.
std::vector<ConfigClass> enumerate_classes(const RingParams& p);

Arena build_arena(const RingParams& p, const ArenaOptions& opts = {});

// Protagonist vertices contradicting "losing iff periodic": periodic classes
// that win and non-periodic classes that lose. Empty when the claim holds.
std::vector<VertexId> periodic_impossibility_violations(const Arena& a, const Solution& sol);

}  // namespace ringgather
