#pragma once

// View-based distributed algorithms: tables mapping views to decisions.
//
// A rule's decision is expressed in the frame of the view's canonical tuple:
// CW means "move toward the first gap of the canonical tuple", i.e. shrink its
// first component and grow its last one. robot_move converts that into a ring
// direction for a concrete robot.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringgather/arena.hpp"
#include "ringgather/ring.hpp"

namespace ringgather {

enum class Gather3Family {
  TowerFlank,      // {(y,-1,z),(z,-1,y)}, y<z: shrink y
  EqualPair,       // {(x,x,z),(z,x,x)}, x<z: shrink x
  Disoriented,     // {(z,x,z)}, x<z: any direction
  Ascending,       // {(x,y,z),(z,y,x)}, x<y<z: shrink x
  MiddleSmallest,  // {(y,x,z),(z,x,y)}, x<y<z: shrink y
};

const char* to_string(Gather3Family f);

// The family a k=3 view belongs to, if any. Views outside every family idle.
std::optional<Gather3Family> match_gather3(const View& v);

class AlgorithmTable {
 public:
  AlgorithmTable() = default;
  explicit AlgorithmTable(RingParams params);

  static AlgorithmTable builtin_gather3(const RingParams& params);

  const RingParams& params() const { return params_; }
  bool is_builtin() const { return builtin_; }

  // Adds a rule. Throws ParamError when the decision breaks the view
  // constraints (singleton views take Idle/Any only, Any needs a singleton
  // view) and ContractError when an existing rule for the view disagrees.
  void set_rule(const View& v, Decision d);

  // Idle when no rule applies.
  Decision lookup(const View& v) const;

  // Explicit rules; for the builtin table these are empty and lookup is
  // symbolic.
  const std::map<Gaps, Decision>& rules() const { return rules_; }

  // Pseudocode listing of the rules.
  std::string render() const;

 private:
  RingParams params_{};
  bool builtin_ = false;
  std::map<Gaps, Decision> rules_;
};

// Checks a single rule against the view constraints; returns an error message.
std::optional<std::string> rule_violation(const View& v, Decision d);

// Decision of robot i in c, as a ring direction.
Decision robot_move(const AlgorithmTable& table, const Configuration& c, int i);
DecisionTuple table_decisions(const AlgorithmTable& table, const Configuration& c);

// Reads the chosen decision tuple of every class with a choice back through
// each robot's view.
AlgorithmTable strategy_to_table(const std::vector<std::optional<VertexId>>& choice, const Arena& arena);

}  // namespace ringgather
