#include "ringgather/algorithm.hpp"

#include <sstream>

#include "ringgather/errors.hpp"

namespace ringgather {

const char* to_string(Gather3Family f) {
  switch (f) {
    case Gather3Family::TowerFlank: return "tower-flank";
    case Gather3Family::EqualPair: return "equal-pair";
    case Gather3Family::Disoriented: return "disoriented";
    case Gather3Family::Ascending: return "ascending";
    case Gather3Family::MiddleSmallest: return "middle-smallest";
  }
  return "?";
}

std::optional<Gather3Family> match_gather3(const View& v) {
  const Gaps& t = v.canonical;
  if (t.size() != 3) {
    return std::nullopt;
  }
  const int a = t[0], b = t[1], c = t[2];
  if (v.disoriented()) {
    // (z,x,z) with x<z; covers the equidistant tower through x = -1.
    if (b < a) {
      return Gather3Family::Disoriented;
    }
    return std::nullopt;
  }
  if (b == -1 && a < c) {
    return Gather3Family::TowerFlank;
  }
  if (a == b && a < c) {
    return Gather3Family::EqualPair;
  }
  if (a < b && b < c) {
    return Gather3Family::Ascending;
  }
  if (b < a && a < c) {
    return Gather3Family::MiddleSmallest;
  }
  return std::nullopt;
}

AlgorithmTable::AlgorithmTable(RingParams params) : params_(params) { params_.validate(); }

AlgorithmTable AlgorithmTable::builtin_gather3(const RingParams& params) {
  if (params.k != 3) {
    throw ParamError("the builtin gathering algorithm needs k = 3");
  }
  AlgorithmTable t(params);
  t.builtin_ = true;
  return t;
}

std::optional<std::string> rule_violation(const View& v, Decision d) {
  if (v.disoriented() && (d == Decision::CW || d == Decision::CCW)) {
    return "disoriented view takes a directed decision";
  }
  if (!v.disoriented() && d == Decision::Any) {
    return "oriented view takes ANY";
  }
  return std::nullopt;
}

void AlgorithmTable::set_rule(const View& v, Decision d) {
  if (builtin_) {
    throw ContractError("builtin tables are immutable");
  }
  if (auto why = rule_violation(v, d)) {
    throw ParamError(*why);
  }
  auto [it, inserted] = rules_.emplace(v.canonical, d);
  if (!inserted && it->second != d) {
    throw ContractError("conflicting rules for one view");
  }
}

Decision AlgorithmTable::lookup(const View& v) const {
  if (builtin_) {
    const auto fam = match_gather3(v);
    if (!fam) {
      return Decision::Idle;
    }
    return *fam == Gather3Family::Disoriented ? Decision::Any : Decision::CW;
  }
  auto it = rules_.find(v.canonical);
  return it == rules_.end() ? Decision::Idle : it->second;
}

namespace {

std::string tuple_str(const Gaps& g) { return Configuration(g).str(); }

std::string view_str(const View& v) {
  std::string s = "{";
  const auto ts = v.tuples();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    s += (i ? "," : "");
    std::string t = "(";
    for (std::size_t j = 0; j < ts[i].size(); ++j) {
      t += (j ? "," : "") + std::to_string(ts[i][j]);
    }
    s += t + ")";
  }
  return s + "}";
}

}  // namespace

std::string AlgorithmTable::render() const {
  std::ostringstream os;
  os << "# n=" << params_.n << " k=" << params_.k << '\n';
  if (builtin_) {
    os << "if view = {(y,-1,z),(z,-1,y)} with y<z: move to decrement y and increment z\n"
          "if view = {(x,x,z),(z,x,x)} with x<z: move to decrement x and increment z\n"
          "if view = {(z,x,z)} with x<z: move in any direction\n"
          "if view = {(x,y,z),(z,y,x)} with x<y<z: move to decrement x and increment z\n"
          "if view = {(y,x,z),(z,x,y)} with x<y<z: move to decrement y and increment z\n"
          "otherwise: stay idle\n";
    return os.str();
  }
  for (const auto& [canon, d] : rules_) {
    const View v{canon};
    os << "view " << view_str(v) << ": ";
    switch (d) {
      case Decision::Idle: os << "stay idle"; break;
      case Decision::Any: os << "move in any direction"; break;
      case Decision::CW:
      case Decision::CCW: {
        const Gaps& front = d == Decision::CW ? canon : v.reversed();
        os << "move to decrement " << front.front() << " and increment " << front.back() << " in reading "
           << tuple_str(front);
        break;
      }
    }
    os << '\n';
  }
  os << "otherwise: stay idle\n";
  return os.str();
}

Decision robot_move(const AlgorithmTable& table, const Configuration& c, int i) {
  return oriented_move(table.lookup(view(c, i)), c, i);
}

DecisionTuple table_decisions(const AlgorithmTable& table, const Configuration& c) {
  DecisionTuple d(c.k());
  for (int i = 0; i < c.k(); ++i) {
    d[i] = robot_move(table, c, i);
  }
  return d;
}

AlgorithmTable strategy_to_table(const std::vector<std::optional<VertexId>>& choice, const Arena& arena) {
  AlgorithmTable table(arena.params);
  for (VertexId v = 0; v < arena.protagonist_count(); ++v) {
    if (v >= choice.size() || !choice[v]) {
      continue;
    }
    const AntagonistVertex& av = arena.antagonist(*choice[v]);
    for (int i = 0; i < av.config.k(); ++i) {
      const Decision d = av.decisions[i];
      table.set_rule(view(av.config, i), reads_clockwise(av.config, i) ? d : flip(d));
    }
  }
  return table;
}

}  // namespace ringgather
