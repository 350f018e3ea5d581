#include <doctest.h>

#include "oracles.hpp"
#include "ringgather/game.hpp"

using namespace ringgather;

TEST_CASE("toy game attractor") {
  const oracle::Toy t = oracle::toy_game();
  const Solution s = attractor(t.game);
  CHECK(s.winning[t.P1]);
  CHECK(s.winning[t.P3]);
  CHECK_FALSE(s.winning[t.P2]);
  CHECK_FALSE(s.winning[t.P4]);
  CHECK_FALSE(s.winning[t.O1]);
  CHECK(s.winning[t.O2]);
  CHECK(s.winning[t.O3]);
  CHECK(s.strategy[t.P1] == t.O2);
  CHECK_FALSE(s.strategy[t.P2]);
  CHECK(s.rank[t.P3] == 0u);
  CHECK(s.rank[t.O2] == 1u);
  CHECK(s.rank[t.P1] == 2u);
}

TEST_CASE("toy game values and optimal moves") {
  const oracle::Toy t = oracle::toy_game();
  const ValueMap v = game_values(t.game);
  CHECK(v.value[t.P3] == 0u);
  CHECK(v.value[t.P1] == 0u);
  CHECK_FALSE(v.value[t.P2]);
  CHECK_FALSE(v.value[t.O1]);
  const auto opt = optimal_strategies(t.game, v);
  CHECK(opt[t.P1] == std::vector<VertexId>{t.O2});
  CHECK(opt[t.P2].empty());
  CHECK(select_strategy(opt)[t.P1] == t.O2);
}

TEST_CASE("attractor idempotence") {
  const oracle::Toy t = oracle::toy_game();
  const Solution s = attractor(t.game);
  const Game sub = t.game.restricted(s.winning);
  const Solution s2 = attractor(sub);
  for (VertexId v = 0; v < t.game.size(); ++v) {
    CHECK(s2.winning[v] == s.winning[v]);
  }
}

TEST_CASE("dead-end antagonist vertices lose") {
  Game g;
  const VertexId p = g.add_vertex(Player::Protagonist);
  const VertexId o = g.add_vertex(Player::Antagonist);
  const VertexId tgt = g.add_vertex(Player::Protagonist);
  g.add_edge(p, o);
  g.set_target(tgt);
  const Solution s = attractor(g);
  CHECK_FALSE(s.winning[o]);
  CHECK_FALSE(s.winning[p]);
  CHECK(s.winning[tgt]);
}

TEST_CASE("weighted min-max values") {
  // p0 -> a (w=1) -> {t, p1};  p0 -> b (w=3) -> t;  p1 -> c (w=2) -> t
  Game g;
  const VertexId p0 = g.add_vertex(Player::Protagonist);
  const VertexId p1 = g.add_vertex(Player::Protagonist);
  const VertexId t = g.add_vertex(Player::Protagonist);
  const VertexId a = g.add_vertex(Player::Antagonist);
  const VertexId b = g.add_vertex(Player::Antagonist);
  const VertexId c = g.add_vertex(Player::Antagonist);
  g.add_edge(p0, a, 1);
  g.add_edge(p0, b, 3);
  g.add_edge(a, t);
  g.add_edge(a, p1);
  g.add_edge(b, t);
  g.add_edge(p1, c, 2);
  g.add_edge(c, t);
  g.add_edge(t, c, 0);
  g.set_target(t);
  const ValueMap v = game_values(g);
  CHECK(v.value[t] == 0u);
  CHECK(v.value[p1] == 2u);
  CHECK(v.value[a] == 2u);
  CHECK(v.value[b] == 0u);
  CHECK(v.value[p0] == 3u);  // 1 + max(0, 2) = 3 + 0: both optimal
  const auto opt = optimal_strategies(g, v);
  CHECK(opt[p0] == std::vector<VertexId>{a, b});
  CHECK(opt[t] == std::vector<VertexId>{c});
}

TEST_CASE("zero-weight cycles never become optimal") {
  // p <-> o with weight 0, and p -> q (w=1) -> t. The loop has w + value equal
  // to value(p) only if value(p) were 0; it is 1.
  Game g;
  const VertexId p = g.add_vertex(Player::Protagonist);
  const VertexId t = g.add_vertex(Player::Protagonist);
  const VertexId loop = g.add_vertex(Player::Antagonist);
  const VertexId go = g.add_vertex(Player::Antagonist);
  g.add_edge(p, loop, 0);
  g.add_edge(loop, p);
  g.add_edge(p, go, 1);
  g.add_edge(go, t);
  g.add_edge(t, loop, 0);
  g.set_target(t);
  const ValueMap v = game_values(g);
  CHECK(v.value[p] == 1u);
  CHECK(v.value[loop] == 1u);
  const auto opt = optimal_strategies(g, v);
  CHECK(opt[p] == std::vector<VertexId>{go});
  // From the target the loop is weight 0 but leads to value 1, so nothing is optimal.
  CHECK(opt[t].empty());
}
