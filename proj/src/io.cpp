#include "ringgather/io.hpp"

#include <sstream>

#include "ringgather/errors.hpp"

namespace ringgather {

Json to_json(const Configuration& c) { return Json(c.gaps()); }

Json to_json(const ConfigClass& cls) {
  Json members = Json::array();
  for (const Configuration& m : cls.members) {
    members.push_back(to_json(m));
  }
  return Json{{"rep", to_json(cls.representative)}, {"members", std::move(members)}};
}

Json to_json(const MoveTuple& m) {
  Json j = Json::array();
  for (Move x : m) {
    j.push_back(to_string(x));
  }
  return j;
}

Json to_json(const DecisionTuple& d) {
  Json j = Json::array();
  for (Decision x : d) {
    j.push_back(to_string(x));
  }
  return j;
}

Configuration configuration_from_json(const Json& j) {
  if (!j.is_array()) {
    throw ParamError("configuration must be a JSON array of integers");
  }
  Gaps g;
  for (const Json& x : j) {
    if (!x.is_number_integer()) {
      throw ParamError("configuration must be a JSON array of integers");
    }
    g.push_back(x.get<int>());
  }
  return Configuration(std::move(g));
}

MoveTuple moves_from_json(const Json& j) {
  if (!j.is_array()) {
    throw ParamError("move tuple must be a JSON array");
  }
  MoveTuple m;
  for (const Json& x : j) {
    if (!x.is_string()) {
      throw ParamError("moves are strings");
    }
    m.push_back(parse_move(x.get<std::string>()));
  }
  return m;
}

Json arena_to_json(const Arena& a) {
  Json prot = Json::array();
  for (VertexId i = 0; i < a.protagonist_count(); ++i) {
    Json cls = to_json(a.classes[i]);
    prot.push_back(Json{{"id", i}, {"rep", cls["rep"]}, {"members", cls["members"]}});
  }
  Json anta = Json::array();
  for (std::size_t j = 0; j < a.antagonists.size(); ++j) {
    const AntagonistVertex& av = a.antagonists[j];
    anta.push_back(Json{{"id", a.protagonist_count() + j},
                        {"config", to_json(av.config)},
                        {"decisions", to_json(av.decisions)}});
  }
  Json edges = Json::array();
  for (VertexId v = 0; v < a.game.size(); ++v) {
    for (const Edge& e : a.game.successors(v)) {
      edges.push_back(Json{{"from", v}, {"to", e.to}, {"weight", e.weight}});
    }
  }
  return Json{{"n", a.params.n},
              {"k", a.params.k},
              {"semantics", to_string(a.semantics)},
              {"target", Json::array({a.target()})},
              {"protagonist", std::move(prot)},
              {"antagonist", std::move(anta)},
              {"edges", std::move(edges)}};
}

std::string arena_to_dot(const Arena& a, const std::vector<std::optional<VertexId>>* strategy) {
  std::ostringstream os;
  os << "digraph arena {\n  rankdir=LR;\n";
  const VertexId target = a.target();
  for (VertexId v = 0; v < a.game.size(); ++v) {
    os << "  v" << v << " [shape=" << (a.is_protagonist(v) ? "box" : "circle") << ", label=\""
       << a.game.label(v) << "\"";
    if (v == target) {
      os << ", style=filled, fillcolor=gray80";
    }
    os << "];\n";
  }
  for (VertexId v = 0; v < a.game.size(); ++v) {
    for (const Edge& e : a.game.successors(v)) {
      os << "  v" << v << " -> v" << e.to << " [label=\"" << e.weight << "\"";
      if (strategy && v < strategy->size() && (*strategy)[v] == e.to) {
        os << ", color=red, penwidth=2";
      }
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

Json solution_to_json(const Arena& a, const Solution& sol, const ValueMap& values,
                      const std::vector<std::vector<VertexId>>& optimal,
                      const std::vector<std::optional<VertexId>>& choice) {
  Json classes = Json::array();
  for (VertexId v = 0; v < a.protagonist_count(); ++v) {
    Json entry{{"rep", to_json(a.classes[v].representative)},
               {"kind", to_string(classify(a.classes[v].representative).symmetry)},
               {"winning", static_cast<bool>(sol.winning[v])}};
    entry["value"] = values.value[v] ? Json(*values.value[v]) : Json(nullptr);
    entry["choice"] = choice[v] ? to_json(a.antagonist(*choice[v]).decisions) : Json(nullptr);
    Json opt = Json::array();
    for (VertexId o : optimal[v]) {
      opt.push_back(to_json(a.antagonist(o).decisions));
    }
    entry["optimal"] = std::move(opt);
    classes.push_back(std::move(entry));
  }
  return Json{{"n", a.params.n}, {"k", a.params.k}, {"semantics", to_string(a.semantics)}, {"classes", classes}};
}

namespace {

const char* family_pattern(Gather3Family f) {
  switch (f) {
    case Gather3Family::TowerFlank: return "{(y,-1,z),(z,-1,y)}";
    case Gather3Family::EqualPair: return "{(x,x,z),(z,x,x)}";
    case Gather3Family::Disoriented: return "{(z,x,z)}";
    case Gather3Family::Ascending: return "{(x,y,z),(z,y,x)}";
    case Gather3Family::MiddleSmallest: return "{(y,x,z),(z,x,y)}";
  }
  return "";
}

}  // namespace

Json table_to_json(const AlgorithmTable& t) {
  Json rules = Json::array();
  for (const auto& [canon, d] : t.rules()) {
    Json view = Json::array();
    for (const Gaps& g : View{canon}.tuples()) {
      view.push_back(Json(g));
    }
    rules.push_back(Json{{"view", std::move(view)}, {"decision", to_string(d)}});
  }
  Json j{{"n", t.params().n}, {"k", t.params().k}, {"rules", std::move(rules)}};
  if (t.is_builtin()) {
    j["builtin"] = "gather3";
    Json patterns = Json::array();
    const std::pair<Gather3Family, const char*> fams[] = {
        {Gather3Family::TowerFlank, "y<z"},    {Gather3Family::EqualPair, "x<z"},
        {Gather3Family::Disoriented, "x<z"},   {Gather3Family::Ascending, "x<y<z"},
        {Gather3Family::MiddleSmallest, "x<y<z"},
    };
    for (const auto& [f, constraint] : fams) {
      patterns.push_back(Json{{"family", to_string(f)},
                              {"view", family_pattern(f)},
                              {"constraint", constraint},
                              {"decision", f == Gather3Family::Disoriented ? "ANY" : "CW"}});
    }
    j["patterns"] = std::move(patterns);
    j["default"] = "IDLE";
  }
  return j;
}

AlgorithmTable table_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("k")) {
      throw ParamError("table needs integer fields n and k");
    }
    const RingParams p{j.at("n").get<int>(), j.at("k").get<int>()};
    p.validate();
    if (j.contains("builtin")) {
      if (j.at("builtin") != "gather3") {
        throw ParamError("unknown builtin table");
      }
      return AlgorithmTable::builtin_gather3(p);
    }
    AlgorithmTable t(p);
    for (const Json& r : j.at("rules")) {
      const Json& v = r.at("view");
      if (!v.is_array() || v.empty() || v.size() > 2) {
        throw ParamError("a view has one or two tuples");
      }
      Gaps first = v[0].get<Gaps>();
      const View view{std::min(first, reversed(first))};
      if (v.size() == 2) {
        const Gaps second = v[1].get<Gaps>();
        if (second != reversed(first) || second == first) {
          throw ParamError("a two-tuple view lists a reading and its reverse");
        }
      } else if (!view.disoriented()) {
        throw ParamError("a one-tuple view must read the same both ways");
      }
      for (int d : view.canonical) {
        if (d < -1) {
          throw ParamError("view entries are >= -1");
        }
      }
      try {
        t.set_rule(view, parse_decision(r.at("decision").get<std::string>()));
      } catch (const ContractError& e) {
        throw ParamError(e.what());
      }
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParamError(std::string("malformed table: ") + e.what());
  }
}

std::string trace_to_jsonl(const Trace& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep& s = t.steps[i];
    Json activation = Json::array();
    for (std::size_t r = 0; r < s.choice.activation.size(); ++r) {
      if (s.choice.activation[r]) {
        activation.push_back(r);
      }
    }
    Json chir = Json::object();
    for (const auto& [r, m] : s.choice.chirality) {
      chir[std::to_string(r)] = to_string(m);
    }
    const Configuration& next = i + 1 < t.steps.size() ? t.steps[i + 1].config : t.final_config;
    os << Json{{"step", i},
               {"config", to_json(s.config)},
               {"decisions", to_json(s.decisions)},
               {"activation", std::move(activation)},
               {"chirality", std::move(chir)},
               {"moves", to_json(s.moves)},
               {"next", to_json(next)}}
              .dump()
       << '\n';
  }
  os << Json{{"final", to_json(t.final_config)},
             {"gathered", t.final_config.is_gathered()},
             {"rounds", t.steps.size()},
             {"moves", t.total_moves()}}
            .dump()
     << '\n';
  return os.str();
}

Json verdict_to_json(const Verdict& v, const RingParams& p, Semantics sem) {
  Json classes = Json::array();
  for (const ClassVerdict& c : v.classes) {
    classes.push_back(Json{{"rep", to_json(c.representative)},
                           {"kind", to_string(c.kind.symmetry)},
                           {"tower", c.kind.has_tower},
                           {"status", to_string(c.status)},
                           {"worst_rounds", c.worst_rounds},
                           {"worst_moves", c.worst_moves}});
  }
  Json j{{"n", p.n},
         {"k", p.k},
         {"semantics", to_string(sem)},
         {"verified", v.verified},
         {"bound_exhausted", v.bound_exhausted},
         {"gathered_stable", v.gathered_stable},
         {"classes_explored", v.classes_explored},
         {"max_rounds", v.max_rounds},
         {"max_moves", v.max_moves},
         {"classes", std::move(classes)}};
  if (v.counterexample) {
    Json steps = Json::array();
    std::istringstream lines(trace_to_jsonl(*v.counterexample));
    for (std::string line; std::getline(lines, line);) {
      steps.push_back(Json::parse(line));
    }
    j["counterexample"] = std::move(steps);
  }
  return j;
}

}  // namespace ringgather
