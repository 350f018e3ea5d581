#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ringgather/errors.hpp"
#include "ringgather/ring.hpp"

using namespace ringgather;

TEST_CASE("params validation") {
  CHECK_NOTHROW(RingParams{2, 1}.validate());
  CHECK_NOTHROW(RingParams{4, 3}.validate());
  CHECK_THROWS_AS((RingParams{3, 3}.validate()), ParamError);
  CHECK_THROWS_AS((RingParams{3, 5}.validate()), ParamError);
  CHECK_THROWS_AS((RingParams{5, 0}.validate()), ParamError);
  CHECK_THROWS_AS((RingParams{-4, -5}.validate()), ParamError);
  CHECK_THROWS_AS(enumerate_configurations({3, 5}), ParamError);
}

TEST_CASE("configuration invariants") {
  CHECK_THROWS_AS(Configuration({-2, 3, 3}), ParamError);
  const Configuration c{-1, 2, 3, 2};
  CHECK(c.k() == 4);
  CHECK(c.n() == 10);
  CHECK(c[-1] == 2);
  CHECK(c[4] == -1);
  CHECK(c.has_tower());
  CHECK_FALSE(c.is_gathered());
  CHECK(Configuration({-1, -1, 5}).is_gathered());
  CHECK(c.str() == "(-1,2,3,2)");
  CHECK_THROWS_AS(c.validate({11, 4}), ParamError);
  CHECK_NOTHROW(c.validate({10, 4}));
}

TEST_CASE("enumeration") {
  CHECK(enumerate_configurations({2, 1}) == std::vector<Configuration>{Configuration{1}});
  CHECK(enumerate_configurations({4, 3}).size() == 15);
  CHECK(enumerate_configurations({10, 3}).size() == 66);

  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n && k <= 4; ++k) {
      const auto got = enumerate_configurations({n, k});
      CHECK(std::is_sorted(got.begin(), got.end()));
      std::set<Gaps> mine;
      for (const auto& c : got) mine.insert(c.gaps());
      CHECK(mine == oracle::brute_configurations(n, k));
      CHECK(binomial(n + k - 1, n) == oracle::pascal(n + k - 1, n));
    }
  }
}

TEST_CASE("rotate and mirror") {
  CHECK(rotate({-1, 2, 3, 2}) == Configuration{2, 3, 2, -1});
  CHECK(rotate({1, 2, 1, 2}) == Configuration{2, 1, 2, 1});
  Configuration c{1, 2, 1, 2};
  for (int i = 0; i < 4; ++i) c = rotate(c);
  CHECK(c == Configuration{1, 2, 1, 2});

  CHECK(mirror({3, 0, 1, 2}) == Configuration{2, 1, 0, 3});
  CHECK(mirror({5}) == Configuration{5});
  for (const auto& x : enumerate_configurations({7, 4})) {
    CHECK(mirror(mirror(x)) == x);
  }
}

TEST_CASE("equivalence classes") {
  const ConfigClass cls = equivalence_class({2, 1, 2, 1});
  CHECK(cls.representative == Configuration{1, 2, 1, 2});
  CHECK(cls.members == std::vector<Configuration>{{1, 2, 1, 2}, {2, 1, 2, 1}});
  for (int n = 4; n <= 9; ++n) {
    CHECK(representative({n - 1, -1, -1}) == Configuration{-1, -1, n - 1});
  }

  for (const auto& c : enumerate_configurations({9, 4})) {
    const ConfigClass e = equivalence_class(c);
    std::set<Gaps> members;
    for (const auto& m : e.members) members.insert(m.gaps());
    CHECK(members == oracle::dihedral_images(c.gaps()));
    CHECK(e.representative == e.members.front());
    CHECK(e.contains(c));
    CHECK(e.members.size() <= 8);
  }

  // k = 3: equivalent iff same gap multiset.
  const auto all = enumerate_configurations({8, 3});
  for (const auto& a : all) {
    for (const auto& b : all) {
      Gaps sa = a.gaps(), sb = b.gaps();
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      CHECK((representative(a) == representative(b)) == (sa == sb));
    }
  }
}

TEST_CASE("observations") {
  CHECK(observation({-1, 2, 3, 2}, 0).tuples == std::vector<Gaps>{{-1, 2, 3, 2}, {2, 3, 2, -1}});
  CHECK(observation({1, 2, 1, 2}, 0).tuples == std::vector<Gaps>{{1, 2, 1, 2}, {2, 1, 2, 1}});
  CHECK(observation({0, 1, 0}, 1).tuples == std::vector<Gaps>{{0, 0, 1}, {1, 0, 0}});
  CHECK(observation({2, 2, 2}, 1).tuples.size() == 1);
  CHECK_THROWS_AS(observation({0, 1, 0}, 3), ContractError);
  CHECK_THROWS_AS(observation({0, 1, 0}, -1), ContractError);
}

TEST_CASE("views") {
  const View v = view({-1, 2, 3, 2}, 0);
  CHECK(v.canonical == Gaps{2, 3, 2});
  CHECK(v.disoriented());
  CHECK(v.tuples() == std::vector<Gaps>{{2, 3, 2}});
  // The other tower robot shares the view.
  CHECK(view({-1, 2, 3, 2}, 1) == v);

  CHECK(view({3, 0, 1, 2}, 0).tuples() == std::vector<Gaps>{{2, 1, 0, 3}, {3, 0, 1, 2}});
  CHECK(view({1, 2, 1, 2}, 0).tuples() == std::vector<Gaps>{{1, 2, 1, 2}, {2, 1, 2, 1}});
  CHECK(view({-1, -1, 6}, 2).canonical == Gaps{6});
  CHECK(view({-1, -1, 6}, 0).canonical == Gaps{6});

  // Robots outside towers: view = observation.
  for (const auto& c : enumerate_configurations({8, 4})) {
    for (int i = 0; i < 4; ++i) {
      if (c[i] != -1 && c[i - 1] != -1) {
        CHECK(view(c, i).tuples() == observation(c, i).tuples);
      }
      const Gaps w = view(c, i).canonical;
      CHECK(w.front() != -1);
      CHECK(w.back() != -1);
    }
  }
}

TEST_CASE("lemma 1 on small rings") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n && k <= 4; ++k) {
      for (const auto& c : enumerate_configurations({n, k})) {
        std::set<Gaps> seen;
        for (int i = 0; i < k; ++i) {
          for (const Gaps& t : observation(c, i).tuples) seen.insert(t);
        }
        CHECK(seen == oracle::dihedral_images(c.gaps()));
      }
    }
  }
}

TEST_CASE("classify") {
  CHECK(classify({1, 2, 1, 2}).symmetry == Symmetry::Periodic);
  CHECK(classify({3, 0, 1, 2}).symmetry == Symmetry::Rigid);
  CHECK(classify({-1, -1, 4}).symmetry == Symmetry::Gathered);
  CHECK(classify({-1, -1, 4}).has_tower);
  for (int n = 4; n <= 14; n += 2) {
    const int m = (n - 2) / 2;
    const ConfigKind kind = classify({-1, m, m});
    CHECK(kind.symmetry == Symmetry::SymmetricNodeNode);
    CHECK(kind.has_tower);
  }
  // Robots on nodes 0, 1, 3 of 5: axis through node 3 and edge 0-1.
  CHECK(classify({0, 1, 1}).symmetry == Symmetry::SymmetricNodeEdge);
  // Nodes 0, 1 of 4: axis through edges 0-1 and 2-3.
  CHECK(classify({0, 2}).symmetry == Symmetry::SymmetricEdgeEdge);
  // Nodes 0, 1, 3, 4 of 8: axis through the empty nodes 2 and 6.
  CHECK(classify({0, 1, 0, 3}).symmetry == Symmetry::SymmetricNodeNode);
  CHECK(classify({0, 1, 0, 1}).symmetry == Symmetry::Periodic);
  CHECK(classify({1, 1, 1}).symmetry == Symmetry::Periodic);
  CHECK_FALSE(classify({1, 1, 1}).has_tower);

  for (int n = 4; n <= 9; ++n) {
    for (int k = 2; k < n && k <= 4; ++k) {
      for (const auto& c : enumerate_configurations({n, k})) {
        const ConfigKind kind = classify(c);
        for (const auto& m : equivalence_class(c).members) {
          CHECK(classify(m) == kind);
        }
        if (kind.symmetry == Symmetry::Gathered) CHECK(kind.has_tower);
      }
    }
  }
}
