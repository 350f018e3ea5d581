#pragma once

// Two-player reachability games on finite graphs: attractor, memoryless
// strategies, and min/max move-count values.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ringgather {

using VertexId = std::uint32_t;

enum class Player : std::uint8_t { Protagonist, Antagonist };

struct Edge {
  VertexId to = 0;
  std::uint32_t weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A game graph. Edges need not alternate between players.
class Game {
 public:
  VertexId add_vertex(Player owner, std::string label = {});
  void add_edge(VertexId from, VertexId to, std::uint32_t weight = 0);
  void set_target(VertexId v, bool on = true);

  std::size_t size() const { return owner_.size(); }
  std::size_t edge_count() const;
  Player owner(VertexId v) const { return owner_[v]; }
  bool is_target(VertexId v) const { return target_[v]; }
  const std::vector<Edge>& successors(VertexId v) const { return succ_[v]; }
  const std::string& label(VertexId v) const { return label_[v]; }

  // Predecessor lists, edge weights included.
  std::vector<std::vector<Edge>> predecessors() const;

  // Subgame on the vertices flagged in `keep`; ids are preserved, edges to
  // dropped vertices are removed.
  Game restricted(const std::vector<bool>& keep) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::vector<Player> owner_;
  std::vector<std::vector<Edge>> succ_;
  std::vector<bool> target_;
  std::vector<std::string> label_;
};

struct Solution {
  std::vector<bool> winning;
  // For winning protagonist vertices, a successor that keeps the play on the
  // way to the target. Empty elsewhere.
  std::vector<std::optional<VertexId>> strategy;
  // Round in which the vertex entered the attractor (0 for targets).
  std::vector<std::optional<std::uint32_t>> rank;
};

// Backward fixpoint: a protagonist vertex wins if one successor wins, an
// antagonist vertex if all do (and it has at least one). Linear time.
Solution attractor(const Game& g);

// Moves to the target, or nullopt when the protagonist cannot force it.
using Value = std::optional<std::uint64_t>;

struct ValueMap {
  std::vector<Value> value;
  // Position in which each finite vertex was fixed; used to keep optimal
  // choices well-founded in the presence of zero-weight edges.
  std::vector<std::optional<std::uint32_t>> order;
};

// Least fixpoint of
//   protagonist: v = min over edges (w + v'),  antagonist: v = max over edges (w + v'),
// with targets at 0.
ValueMap game_values(const Game& g);

// For every winning protagonist vertex, the successors achieving its value
// (ascending ids). Any selection from these sets is an optimal strategy.
std::vector<std::vector<VertexId>> optimal_strategies(const Game& g, const ValueMap& values);

// Smallest-id element of each optimal set.
std::vector<std::optional<VertexId>> select_strategy(const std::vector<std::vector<VertexId>>& optimal);

}  // namespace ringgather
