#include "ringgather/arena.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ringgather/errors.hpp"
#include "ringgather/kernels.hpp"

namespace ringgather {

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Idle: return "IDLE";
    case Decision::CW: return "CW";
    case Decision::CCW: return "CCW";
    case Decision::Any: return "ANY";
  }
  return "?";
}

Decision parse_decision(const std::string& s) {
  if (s == "IDLE") return Decision::Idle;
  if (s == "CW") return Decision::CW;
  if (s == "CCW") return Decision::CCW;
  if (s == "ANY" || s == "?") return Decision::Any;
  throw ParamError("unknown decision '" + s + "'");
}

const char* to_string(Semantics s) { return s == Semantics::FSYNC ? "fsync" : "ssync"; }

Semantics parse_semantics(const std::string& s) {
  if (s == "fsync" || s == "FSYNC") return Semantics::FSYNC;
  if (s == "ssync" || s == "SSYNC") return Semantics::SSYNC;
  throw ParamError("unknown semantics '" + s + "'");
}

Decision oriented_move(Decision d, const Configuration& c, int i) {
  if (d == Decision::Any && !view(c, i).disoriented()) {
    throw ContractError("ANY assigned to oriented robot " + std::to_string(i) + " of " + c.str());
  }
  return reads_clockwise(c, i) ? d : flip(d);
}

std::vector<DecisionTuple> protagonist_successors(const ConfigClass& cls) {
  const Configuration& rep = cls.representative;
  const int k = rep.k();
  // Distinct views and which of them each robot has.
  std::vector<View> views;
  std::vector<int> view_of(k);
  std::vector<bool> cw(k);
  for (int i = 0; i < k; ++i) {
    View v = view(rep, i);
    auto it = std::find(views.begin(), views.end(), v);
    view_of[i] = static_cast<int>(it - views.begin());
    if (it == views.end()) {
      views.push_back(std::move(v));
    }
    cw[i] = reads_clockwise(rep, i);
  }
  std::vector<std::vector<Decision>> options;
  for (const View& v : views) {
    if (v.disoriented()) {
      options.push_back({Decision::Idle, Decision::Any});
    } else {
      options.push_back({Decision::Idle, Decision::CW, Decision::CCW});
    }
  }
  std::set<DecisionTuple> out;
  std::vector<std::size_t> pick(views.size(), 0);
  while (true) {
    DecisionTuple t(k);
    for (int i = 0; i < k; ++i) {
      const Decision d = options[view_of[i]][pick[view_of[i]]];
      t[i] = cw[i] ? d : flip(d);
    }
    out.insert(std::move(t));
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == options[j].size()) {
      pick[j++] = 0;
    }
    if (j == pick.size()) {
      break;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<MoveTuple> compatible_move_tuples(const DecisionTuple& decisions) {
  std::vector<int> any;
  MoveTuple base(decisions.size(), Move::Idle);
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    switch (decisions[i]) {
      case Decision::Any: any.push_back(static_cast<int>(i)); break;
      case Decision::CW: base[i] = Move::CW; break;
      case Decision::CCW: base[i] = Move::CCW; break;
      case Decision::Idle: break;
    }
  }
  std::vector<MoveTuple> out;
  out.reserve(std::size_t{1} << any.size());
  for (std::uint32_t mask = 0; mask < (1u << any.size()); ++mask) {
    MoveTuple t = base;
    for (std::size_t b = 0; b < any.size(); ++b) {
      t[any[b]] = (mask >> b) & 1 ? Move::CW : Move::CCW;
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Configuration> antagonist_successors(const AntagonistVertex& v, Semantics sem) {
  const int k = v.config.k();
  std::set<Configuration> out;
  const std::uint32_t full = (1u << k) - 1;
  for (std::uint32_t act = (sem == Semantics::FSYNC ? full : 1); act <= full; ++act) {
    DecisionTuple d = v.decisions;
    for (int i = 0; i < k; ++i) {
      if (!((act >> i) & 1)) {
        d[i] = Decision::Idle;
      }
    }
    for (const MoveTuple& m : compatible_move_tuples(d)) {
      out.insert(representative(successor(v.config, m)));
    }
  }
  return {out.begin(), out.end()};
}

int decision_weight(const DecisionTuple& d) {
  return static_cast<int>(std::count_if(d.begin(), d.end(), [](Decision x) { return x != Decision::Idle; }));
}

VertexId Arena::class_id(const Configuration& c) const {
  auto it = index_.find(representative(c));
  if (it == index_.end()) {
    throw ContractError("configuration " + c.str() + " is not in the arena");
  }
  return it->second;
}

std::optional<VertexId> Arena::find_class(const Configuration& rep) const {
  auto it = index_.find(rep);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

VertexId Arena::target() const { return class_id(gathered(params)); }

bool Arena::reps_equal(const Arena& o) const {
  if (classes.size() != o.classes.size()) {
    return false;
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].members != o.classes[i].members) {
      return false;
    }
  }
  return true;
}

std::vector<ConfigClass> enumerate_classes(const RingParams& p) {
  std::vector<ConfigClass> out;
  for (const Configuration& c : enumerate_configurations(p)) {
    // Enumeration is lexicographic, so the first member met is the representative.
    if (representative(c) == c) {
      out.push_back(equivalence_class(c));
    }
  }
  return out;
}

Arena build_arena(const RingParams& p, const ArenaOptions& opts) {
  p.validate();
  Arena a;
  a.params = p;
  a.semantics = opts.semantics;
  a.classes = enumerate_classes(p);
  if (a.classes.size() > opts.vertex_cap) {
    throw CapacityError("arena exceeds vertex cap of " + std::to_string(opts.vertex_cap));
  }
  for (VertexId i = 0; i < a.classes.size(); ++i) {
    a.index_.emplace(a.classes[i].representative, i);
  }

  const std::vector<ClassExpansion> expansions = opts.parallel
                                                     ? kernels::expand_classes_omp(a.classes, opts.semantics)
                                                     : kernels::expand_classes_serial(a.classes, opts.semantics);

  std::size_t total = a.classes.size();
  for (const auto& e : expansions) {
    total += e.options.size();
  }
  if (total > opts.vertex_cap) {
    throw CapacityError("arena has " + std::to_string(total) + " vertices, above the cap of " +
                        std::to_string(opts.vertex_cap));
  }

  for (const ConfigClass& cls : a.classes) {
    a.game.add_vertex(Player::Protagonist, cls.representative.str());
  }
  for (VertexId i = 0; i < a.classes.size(); ++i) {
    for (const DecisionOption& opt : expansions[i].options) {
      AntagonistVertex av{a.classes[i].representative, opt.decisions};
      std::string label = "(";
      for (std::size_t j = 0; j < opt.decisions.size(); ++j) {
        label += (j ? "," : "");
        label += to_string(opt.decisions[j]);
      }
      label += ")";
      const VertexId id = a.game.add_vertex(Player::Antagonist, std::move(label));
      a.antagonists.push_back(std::move(av));
      a.game.add_edge(i, id, static_cast<std::uint32_t>(decision_weight(opt.decisions)));
      for (const Configuration& rep : opt.successors) {
        a.game.add_edge(id, a.index_.at(rep), 0);
      }
    }
  }
  a.game.set_target(a.target());
  return a;
}

std::vector<VertexId> periodic_impossibility_violations(const Arena& a, const Solution& sol) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < a.protagonist_count(); ++v) {
    if (is_periodic(a.classes[v].representative) == static_cast<bool>(sol.winning[v])) {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace ringgather
