#include <doctest.h>

#include "ringgather/kernels.hpp"

using namespace ringgather;

TEST_CASE("class expansion: serial and OpenMP agree") {
  for (int k : {2, 3, 4}) {
    const auto classes = enumerate_classes({9, k});
    for (Semantics sem : {Semantics::FSYNC, Semantics::SSYNC}) {
      const auto a = kernels::expand_classes_serial(classes, sem);
      const auto b = kernels::expand_classes_omp(classes, sem);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].options.size() == b[i].options.size());
        for (std::size_t j = 0; j < a[i].options.size(); ++j) {
          CHECK(a[i].options[j].decisions == b[i].options[j].decisions);
          CHECK(a[i].options[j].successors == b[i].options[j].successors);
        }
      }
    }
  }
}

TEST_CASE("table expansion: serial and OpenMP agree") {
  const RingParams p{31, 3};
  const auto classes = enumerate_classes(p);
  const AlgorithmTable t = AlgorithmTable::builtin_gather3(p);
  const auto a = kernels::expand_under_table_serial(classes, t, Semantics::SSYNC);
  const auto b = kernels::expand_under_table_omp(classes, t, Semantics::SSYNC);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].decisions == b[i].decisions);
    REQUIRE(a[i].branches.size() == b[i].branches.size());
    for (std::size_t j = 0; j < a[i].branches.size(); ++j) {
      CHECK(a[i].branches[j].next == b[i].branches[j].next);
      CHECK(a[i].branches[j].choice == b[i].branches[j].choice);
    }
  }
}

TEST_CASE("raw expansion and sweeps: serial and OpenMP agree") {
  const auto configs = enumerate_configurations({10, 3});
  const auto a = kernels::expand_raw_serial(configs);
  const auto b = kernels::expand_raw_omp(configs);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].weight == b[i].weight);
    CHECK(a[i].successors == b[i].successors);
  }
  std::vector<bool> target(configs.size());
  std::vector<Value> in(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) {
    target[i] = configs[i].is_gathered();
  }
  std::vector<Value> s(configs.size()), o(configs.size());
  for (int sweep = 0; sweep < 12; ++sweep) {
    const bool cs = kernels::bellman_sweep_serial(a, target, in, s);
    const bool co = kernels::bellman_sweep_omp(a, target, in, o);
    CHECK(cs == co);
    CHECK(s == o);
    in = s;
  }
}
