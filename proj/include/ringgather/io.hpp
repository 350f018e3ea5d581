#pragma once

// JSON and DOT serialization of the artifacts.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringgather/algorithm.hpp"
#include "ringgather/arena.hpp"
#include "ringgather/game.hpp"
#include "ringgather/verifier.hpp"

namespace ringgather {

using Json = nlohmann::ordered_json;

Json to_json(const Configuration& c);
Json to_json(const ConfigClass& cls);
Json to_json(const MoveTuple& m);
Json to_json(const DecisionTuple& d);

Configuration configuration_from_json(const Json& j);
MoveTuple moves_from_json(const Json& j);

// Stable integer ids: protagonist vertices first, then antagonist ones.
Json arena_to_json(const Arena& a);

// Protagonist vertices as boxes, antagonist ones as circles, edge labels are
// weights. Strategy edges, when given, are drawn bold red.
std::string arena_to_dot(const Arena& a, const std::vector<std::optional<VertexId>>* strategy = nullptr);

// Per class: winning flag, value, chosen decision tuple and the optimal set.
Json solution_to_json(const Arena& a, const Solution& sol, const ValueMap& values,
                      const std::vector<std::vector<VertexId>>& optimal,
                      const std::vector<std::optional<VertexId>>& choice);

Json table_to_json(const AlgorithmTable& t);
// Throws ParamError on malformed input or rules breaking the view constraints.
AlgorithmTable table_from_json(const Json& j);

// One JSON object per line: the steps, then {"final": ...}.
std::string trace_to_jsonl(const Trace& t);

Json verdict_to_json(const Verdict& v, const RingParams& p, Semantics sem);

}  // namespace ringgather
