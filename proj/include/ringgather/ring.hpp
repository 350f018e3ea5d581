#pragma once

// Configurations of k robots on an n-node ring.
//
// A configuration is the tuple of gaps (d_1, ..., d_k): d_i is the number of
// free nodes between robot i and the next robot clockwise, -1 when the two
// share a node. Robot indices are 0-based in this API and wrap modulo k.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace ringgather {

using Gaps = std::vector<int>;

struct RingParams {
  int n = 0;
  int k = 0;

  // Throws ParamError unless 1 <= k < n.
  void validate() const;
  friend bool operator==(const RingParams&, const RingParams&) = default;
};

class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(Gaps gaps);
  Configuration(std::initializer_list<int> gaps) : Configuration(Gaps(gaps)) {}

  int k() const { return static_cast<int>(gaps_.size()); }
  // Ring size implied by the gaps: sum d_i = n - k.
  int n() const;
  RingParams params() const { return {n(), k()}; }

  int operator[](int i) const { return gaps_[wrap(i)]; }
  const Gaps& gaps() const { return gaps_; }

  // Index modulo k, for any signed i.
  int wrap(int i) const {
    const int m = i % k();
    return m < 0 ? m + k() : m;
  }

  bool has_tower() const;
  bool is_gathered() const;

  // Throws ParamError if the gaps are not a configuration of `p`.
  void validate(const RingParams& p) const;

  std::string str() const;

  friend auto operator<=>(const Configuration&, const Configuration&) = default;
  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  Gaps gaps_;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const noexcept;
};

// Equivalence class under rotation and mirror. Members are sorted, so
// members.front() is the representative.
struct ConfigClass {
  Configuration representative;
  std::vector<Configuration> members;

  bool contains(const Configuration& c) const;
};

// The robot's clockwise reading of the ring and its reversal. One element when
// the two coincide.
struct Observation {
  std::vector<Gaps> tuples;  // sorted
};

// An observation with the robot's own tower gaps stripped. `canonical` is the
// lexicographically smaller of the two readings.
struct View {
  Gaps canonical;

  bool disoriented() const;
  Gaps reversed() const;
  // The view as a set of one or two tuples, smallest first.
  std::vector<Gaps> tuples() const;

  friend auto operator<=>(const View&, const View&) = default;
  friend bool operator==(const View&, const View&) = default;
};

enum class Symmetry : std::uint8_t {
  Gathered,
  Periodic,
  SymmetricEdgeEdge,
  SymmetricNodeEdge,
  SymmetricNodeNode,
  Rigid,
};

struct ConfigKind {
  Symmetry symmetry = Symmetry::Rigid;
  bool has_tower = false;

  bool symmetric() const {
    return symmetry == Symmetry::SymmetricEdgeEdge || symmetry == Symmetry::SymmetricNodeEdge ||
           symmetry == Symmetry::SymmetricNodeNode;
  }
  friend bool operator==(const ConfigKind&, const ConfigKind&) = default;
};

const char* to_string(Symmetry s);

// Lexicographic order with -1 < 0 < 1 < ...; std::vector already compares so.
inline bool lex_less(const Gaps& a, const Gaps& b) { return a < b; }

Gaps reversed(Gaps g);
Gaps rotated(const Gaps& g, int by);

std::uint64_t binomial(int n, int r);

// Every configuration of `p`, in lexicographic order.
std::vector<Configuration> enumerate_configurations(const RingParams& p);

// (d_2, ..., d_k, d_1)
Configuration rotate(const Configuration& c);
// (d_k, ..., d_1)
Configuration mirror(const Configuration& c);

ConfigClass equivalence_class(const Configuration& c);
Configuration representative(const Configuration& c);

// Clockwise reading (d_i, d_{i+1}, ..., d_{i-1}) of robot i.
Gaps clockwise_reading(const Configuration& c, int i);
// Clockwise reading with leading/trailing -1 entries (the robot's own tower) removed.
Gaps stripped_clockwise_reading(const Configuration& c, int i);

Observation observation(const Configuration& c, int i);
View view(const Configuration& c, int i);

// True when robot i's stripped clockwise reading is the canonical view tuple,
// i.e. "clockwise" in the view's frame is clockwise on the ring.
bool reads_clockwise(const Configuration& c, int i);

bool is_periodic(const Configuration& c);
ConfigKind classify(const Configuration& c);

// Node index of every robot with robot 0 on node 0.
std::vector<int> robot_positions(const Configuration& c);

// Gathered configuration (-1, ..., -1, n-1).
Configuration gathered(const RingParams& p);

}  // namespace ringgather
