#include "ringgather/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ringgather/errors.hpp"

namespace ringgather {

void RingParams::validate() const {
  if (k < 1 || n < 1) {
    throw ParamError("n and k must be positive");
  }
  if (k >= n) {
    throw ParamError("k must be < n");
  }
}

Configuration::Configuration(Gaps gaps) : gaps_(std::move(gaps)) {
  if (gaps_.empty()) {
    throw ParamError("a configuration needs at least one robot");
  }
  for (int d : gaps_) {
    if (d < -1) {
      throw ParamError("gap below -1 in " + str());
    }
  }
  if (n() <= k()) {
    throw ParamError("gaps of " + str() + " leave no free node");
  }
}

int Configuration::n() const { return std::accumulate(gaps_.begin(), gaps_.end(), 0) + k(); }

bool Configuration::has_tower() const {
  return std::find(gaps_.begin(), gaps_.end(), -1) != gaps_.end();
}

bool Configuration::is_gathered() const {
  return std::count_if(gaps_.begin(), gaps_.end(), [](int d) { return d != -1; }) == 1;
}

void Configuration::validate(const RingParams& p) const {
  p.validate();
  if (k() != p.k) {
    throw ParamError("configuration " + str() + " has " + std::to_string(k()) + " robots, expected " +
                     std::to_string(p.k));
  }
  if (n() != p.n) {
    throw ParamError("configuration " + str() + " gaps sum to " + std::to_string(n() - k()) +
                     ", expected n - k = " + std::to_string(p.n - p.k));
  }
}

std::string Configuration::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gaps_.size(); ++i) {
    os << (i ? "," : "") << gaps_[i];
  }
  os << ')';
  return os.str();
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int d : c.gaps()) {
    h ^= static_cast<std::size_t>(d + 1);
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool ConfigClass::contains(const Configuration& c) const {
  return std::binary_search(members.begin(), members.end(), c);
}

bool View::disoriented() const { return std::equal(canonical.begin(), canonical.end(), canonical.rbegin()); }

Gaps View::reversed() const { return ringgather::reversed(canonical); }

std::vector<Gaps> View::tuples() const {
  if (disoriented()) {
    return {canonical};
  }
  return {canonical, reversed()};
}

const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Gathered: return "gathered";
    case Symmetry::Periodic: return "periodic";
    case Symmetry::SymmetricEdgeEdge: return "symmetric-edge-edge";
    case Symmetry::SymmetricNodeEdge: return "symmetric-node-edge";
    case Symmetry::SymmetricNodeNode: return "symmetric-node-node";
    case Symmetry::Rigid: return "rigid";
  }
  return "?";
}

Gaps reversed(Gaps g) {
  std::reverse(g.begin(), g.end());
  return g;
}

Gaps rotated(const Gaps& g, int by) {
  const int k = static_cast<int>(g.size());
  Gaps out(g.size());
  for (int j = 0; j < k; ++j) {
    out[j] = g[((j + by) % k + k) % k];
  }
  return out;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) {
    return 0;
  }
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  }
  return acc;
}

namespace {

void enumerate_rec(int pos, int remaining, Gaps& cur, std::vector<Configuration>& out) {
  const int k = static_cast<int>(cur.size());
  if (pos == k - 1) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  // The remaining k-1-pos gaps are each >= -1.
  const int tail = k - 1 - pos;
  for (int d = -1; d <= remaining + tail; ++d) {
    cur[pos] = d;
    enumerate_rec(pos + 1, remaining - d, cur, out);
  }
}

}  // namespace

std::vector<Configuration> enumerate_configurations(const RingParams& p) {
  p.validate();
  std::vector<Configuration> out;
  out.reserve(binomial(p.n + p.k - 1, p.n));
  Gaps cur(p.k, 0);
  enumerate_rec(0, p.n - p.k, cur, out);
  return out;
}

Configuration rotate(const Configuration& c) { return Configuration(rotated(c.gaps(), 1)); }

Configuration mirror(const Configuration& c) { return Configuration(reversed(c.gaps())); }

namespace {

std::vector<Gaps> dihedral_images(const Gaps& g) {
  const int k = static_cast<int>(g.size());
  std::vector<Gaps> images;
  images.reserve(2 * k);
  const Gaps r = reversed(g);
  for (int j = 0; j < k; ++j) {
    images.push_back(rotated(g, j));
    images.push_back(rotated(r, j));
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

}  // namespace

ConfigClass equivalence_class(const Configuration& c) {
  ConfigClass cls;
  for (auto& g : dihedral_images(c.gaps())) {
    cls.members.emplace_back(std::move(g));
  }
  cls.representative = cls.members.front();
  return cls;
}

Configuration representative(const Configuration& c) {
  const Gaps& g = c.gaps();
  const int k = c.k();
  const Gaps r = reversed(g);
  Gaps best = g;
  Gaps tmp(g.size());
  for (int j = 0; j < k; ++j) {
    for (const Gaps* src : {&g, &r}) {
      for (int t = 0; t < k; ++t) {
        tmp[t] = (*src)[(t + j) % k];
      }
      if (tmp < best) {
        best = tmp;
      }
    }
  }
  return Configuration(std::move(best));
}

Gaps clockwise_reading(const Configuration& c, int i) { return rotated(c.gaps(), c.wrap(i)); }

Gaps stripped_clockwise_reading(const Configuration& c, int i) {
  Gaps r = clockwise_reading(c, i);
  auto first = std::find_if(r.begin(), r.end(), [](int d) { return d != -1; });
  auto last = std::find_if(r.rbegin(), r.rend(), [](int d) { return d != -1; }).base();
  return Gaps(first, last);
}

Observation observation(const Configuration& c, int i) {
  if (i < 0 || i >= c.k()) {
    throw ContractError("robot index " + std::to_string(i) + " out of range for " + c.str());
  }
  Gaps cw = clockwise_reading(c, i);
  Gaps ccw = reversed(cw);
  Observation o;
  if (cw == ccw) {
    o.tuples = {std::move(cw)};
  } else if (cw < ccw) {
    o.tuples = {std::move(cw), std::move(ccw)};
  } else {
    o.tuples = {std::move(ccw), std::move(cw)};
  }
  return o;
}

View view(const Configuration& c, int i) {
  if (i < 0 || i >= c.k()) {
    throw ContractError("robot index " + std::to_string(i) + " out of range for " + c.str());
  }
  Gaps s = stripped_clockwise_reading(c, i);
  Gaps r = reversed(s);
  return View{std::min(std::move(s), std::move(r))};
}

bool reads_clockwise(const Configuration& c, int i) {
  Gaps s = stripped_clockwise_reading(c, i);
  return s <= reversed(s);
}

bool is_periodic(const Configuration& c) {
  const Gaps& g = c.gaps();
  for (int j = 1; j < c.k(); ++j) {
    if (c.k() % j == 0 && rotated(g, j) == g) {
      return true;
    }
  }
  return false;
}

std::vector<int> robot_positions(const Configuration& c) {
  std::vector<int> pos(c.k());
  int p = 0;
  for (int i = 0; i < c.k(); ++i) {
    pos[i] = p;
    p += c[i] + 1;
  }
  return pos;
}

ConfigKind classify(const Configuration& c) {
  ConfigKind kind;
  kind.has_tower = c.has_tower();
  if (c.is_gathered()) {
    kind.symmetry = Symmetry::Gathered;
    return kind;
  }
  if (is_periodic(c)) {
    kind.symmetry = Symmetry::Periodic;
    return kind;
  }
  // Look for a reflection x -> s - x of the ring preserving node multiplicities.
  const int n = c.n();
  std::vector<int> mult(n, 0);
  for (int p : robot_positions(c)) {
    ++mult[p % n];
  }
  for (int s = 0; s < n; ++s) {
    bool invariant = true;
    for (int x = 0; x < n && invariant; ++x) {
      invariant = mult[x] == mult[((s - x) % n + n) % n];
    }
    if (!invariant) {
      continue;
    }
    // The axis crosses s/2 and s/2 + n/2: a node when the doubled point is even.
    const bool first_node = s % 2 == 0;
    const bool second_node = (s + n) % 2 == 0;
    if (first_node && second_node) {
      kind.symmetry = Symmetry::SymmetricNodeNode;
    } else if (first_node || second_node) {
      kind.symmetry = Symmetry::SymmetricNodeEdge;
    } else {
      kind.symmetry = Symmetry::SymmetricEdgeEdge;
    }
    return kind;
  }
  kind.symmetry = Symmetry::Rigid;
  return kind;
}

Configuration gathered(const RingParams& p) {
  p.validate();
  Gaps g(p.k, -1);
  g.back() = p.n - 1;
  return Configuration(std::move(g));
}

}  // namespace ringgather
