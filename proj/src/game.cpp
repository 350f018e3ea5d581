#include "ringgather/game.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>

#include "ringgather/errors.hpp"

namespace ringgather {

VertexId Game::add_vertex(Player owner, std::string label) {
  owner_.push_back(owner);
  succ_.emplace_back();
  target_.push_back(false);
  label_.push_back(std::move(label));
  return static_cast<VertexId>(owner_.size() - 1);
}

void Game::add_edge(VertexId from, VertexId to, std::uint32_t weight) {
  if (from >= size() || to >= size()) {
    throw ContractError("edge endpoint out of range");
  }
  succ_[from].push_back({to, weight});
}

void Game::set_target(VertexId v, bool on) { target_.at(v) = on; }

std::size_t Game::edge_count() const {
  std::size_t e = 0;
  for (const auto& s : succ_) {
    e += s.size();
  }
  return e;
}

std::vector<std::vector<Edge>> Game::predecessors() const {
  std::vector<std::vector<Edge>> pred(size());
  for (VertexId v = 0; v < size(); ++v) {
    for (const Edge& e : succ_[v]) {
      pred[e.to].push_back({v, e.weight});
    }
  }
  return pred;
}

Game Game::restricted(const std::vector<bool>& keep) const {
  Game sub = *this;
  for (VertexId v = 0; v < size(); ++v) {
    auto& s = sub.succ_[v];
    if (!keep[v]) {
      s.clear();
      sub.target_[v] = false;
      continue;
    }
    std::erase_if(s, [&](const Edge& e) { return !keep[e.to]; });
  }
  return sub;
}

Solution attractor(const Game& g) {
  const std::size_t n = g.size();
  Solution sol;
  sol.winning.assign(n, false);
  sol.strategy.assign(n, std::nullopt);
  sol.rank.assign(n, std::nullopt);

  const auto pred = g.predecessors();
  std::vector<std::size_t> pending(n);
  for (VertexId v = 0; v < n; ++v) {
    pending[v] = g.successors(v).size();
  }
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (g.is_target(v)) {
      sol.winning[v] = true;
      sol.rank[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (const Edge& e : pred[u]) {
      const VertexId p = e.to;
      if (sol.winning[p]) {
        continue;
      }
      bool wins = false;
      if (g.owner(p) == Player::Protagonist) {
        sol.strategy[p] = u;
        wins = true;
      } else {
        wins = --pending[p] == 0;
      }
      if (wins) {
        sol.winning[p] = true;
        sol.rank[p] = *sol.rank[u] + 1;
        queue.push_back(p);
      }
    }
  }
  // Targets still need a move; keep them inside the region when possible.
  for (VertexId v = 0; v < n; ++v) {
    if (!g.is_target(v) || g.owner(v) != Player::Protagonist) {
      continue;
    }
    for (const Edge& e : g.successors(v)) {
      if (sol.winning[e.to]) {
        sol.strategy[v] = e.to;
        break;
      }
    }
  }
  return sol;
}

namespace {

constexpr std::uint64_t kSaturated = UINT64_MAX / 4;

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  if (s >= kSaturated) {
    throw CapacityError("game value overflow");
  }
  return s;
}

}  // namespace

ValueMap game_values(const Game& g) {
  const std::size_t n = g.size();
  ValueMap vm;
  vm.value.assign(n, std::nullopt);
  vm.order.assign(n, std::nullopt);

  const auto pred = g.predecessors();
  std::vector<std::size_t> pending(n);
  std::vector<std::uint64_t> tentative(n, 0);
  std::vector<bool> seen(n, false);
  for (VertexId v = 0; v < n; ++v) {
    pending[v] = g.successors(v).size();
  }

  using Item = std::pair<std::uint64_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (VertexId v = 0; v < n; ++v) {
    if (g.is_target(v)) {
      tentative[v] = 0;
      seen[v] = true;
      heap.push({0, v});
    }
  }
  std::uint32_t next = 0;
  while (!heap.empty()) {
    const auto [val, u] = heap.top();
    heap.pop();
    if (vm.value[u] || val != tentative[u]) {
      continue;
    }
    vm.value[u] = val;
    vm.order[u] = next++;
    for (const Edge& e : pred[u]) {
      const VertexId p = e.to;
      if (vm.value[p] || g.is_target(p)) {
        continue;
      }
      const std::uint64_t cand = add_sat(val, e.weight);
      if (g.owner(p) == Player::Protagonist) {
        if (!seen[p] || cand < tentative[p]) {
          seen[p] = true;
          tentative[p] = cand;
          heap.push({cand, p});
        }
      } else {
        tentative[p] = seen[p] ? std::max(tentative[p], cand) : cand;
        seen[p] = true;
        if (--pending[p] == 0) {
          heap.push({tentative[p], p});
        }
      }
    }
  }
  return vm;
}

std::vector<std::vector<VertexId>> optimal_strategies(const Game& g, const ValueMap& values) {
  std::vector<std::vector<VertexId>> out(g.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    if (g.owner(v) != Player::Protagonist || !values.value[v]) {
      continue;
    }
    const std::uint64_t target = *values.value[v];
    for (const Edge& e : g.successors(v)) {
      const Value& sv = values.value[e.to];
      if (!sv) {
        continue;
      }
      bool ok = false;
      if (g.is_target(v)) {
        ok = e.weight == 0 && *sv == 0;
      } else {
        ok = e.weight + *sv == target && *values.order[e.to] < *values.order[v];
      }
      if (ok) {
        out[v].push_back(e.to);
      }
    }
    std::sort(out[v].begin(), out[v].end());
    out[v].erase(std::unique(out[v].begin(), out[v].end()), out[v].end());
  }
  return out;
}

std::vector<std::optional<VertexId>> select_strategy(const std::vector<std::vector<VertexId>>& optimal) {
  std::vector<std::optional<VertexId>> choice(optimal.size());
  for (std::size_t v = 0; v < optimal.size(); ++v) {
    if (!optimal[v].empty()) {
      choice[v] = optimal[v].front();
    }
  }
  return choice;
}

}  // namespace ringgather
