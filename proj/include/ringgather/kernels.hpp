#pragma once

// Data-parallel kernels. Each has a serial reference and an OpenMP variant
// that writes one output slot per input, so both return identical results.

#include <vector>

#include "ringgather/algorithm.hpp"
#include "ringgather/arena.hpp"
#include "ringgather/verifier.hpp"

namespace ringgather {

struct DecisionOption {
  DecisionTuple decisions;
  std::vector<Configuration> successors;  // class representatives, sorted
};

struct ClassExpansion {
  std::vector<DecisionOption> options;  // ascending decision tuples
};

// One-step raw dynamics of a configuration: for every decision tuple, the
// indices of its successor configurations.
struct RawExpansion {
  std::vector<int> weight;
  std::vector<std::vector<std::size_t>> successors;
};

namespace kernels {

ClassExpansion expand_class(const ConfigClass& cls, Semantics sem);
std::vector<ClassExpansion> expand_classes_serial(const std::vector<ConfigClass>& classes, Semantics sem);
std::vector<ClassExpansion> expand_classes_omp(const std::vector<ConfigClass>& classes, Semantics sem);

ClassExpansionUnderTable expand_under_table(const Configuration& rep, const AlgorithmTable& table, Semantics sem);
std::vector<ClassExpansionUnderTable> expand_under_table_serial(const std::vector<ConfigClass>& classes,
                                                                const AlgorithmTable& table, Semantics sem);
std::vector<ClassExpansionUnderTable> expand_under_table_omp(const std::vector<ConfigClass>& classes,
                                                             const AlgorithmTable& table, Semantics sem);

std::vector<RawExpansion> expand_raw_serial(const std::vector<Configuration>& configs);
std::vector<RawExpansion> expand_raw_omp(const std::vector<Configuration>& configs);

// One Bellman sweep of the raw min/max values: reads `in`, writes `out`.
// Returns true when some value changed.
bool bellman_sweep_serial(const std::vector<RawExpansion>& raw, const std::vector<bool>& target,
                          const std::vector<Value>& in, std::vector<Value>& out);
bool bellman_sweep_omp(const std::vector<RawExpansion>& raw, const std::vector<bool>& target,
                       const std::vector<Value>& in, std::vector<Value>& out);

}  // namespace kernels
}  // namespace ringgather
