#include "ringgather/kernels.hpp"

#include <algorithm>
#include <set>

#include "ringgather/errors.hpp"

namespace ringgather::kernels {

ClassExpansion expand_class(const ConfigClass& cls, Semantics sem) {
  ClassExpansion e;
  for (DecisionTuple& d : protagonist_successors(cls)) {
    DecisionOption opt;
    opt.successors = antagonist_successors({cls.representative, d}, sem);
    opt.decisions = std::move(d);
    e.options.push_back(std::move(opt));
  }
  return e;
}

std::vector<ClassExpansion> expand_classes_serial(const std::vector<ConfigClass>& classes, Semantics sem) {
  std::vector<ClassExpansion> out(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out[i] = expand_class(classes[i], sem);
  }
  return out;
}

std::vector<ClassExpansion> expand_classes_omp(const std::vector<ConfigClass>& classes, Semantics sem) {
  std::vector<ClassExpansion> out(classes.size());
  const long long count = static_cast<long long>(classes.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < count; ++i) {
    out[i] = expand_class(classes[i], sem);
  }
  return out;
}

ClassExpansionUnderTable expand_under_table(const Configuration& rep, const AlgorithmTable& table, Semantics sem) {
  ClassExpansionUnderTable e;
  e.decisions = table_decisions(table, rep);
  for (AdversaryChoice& adv : adversary_choices(e.decisions, sem)) {
    const MoveTuple m = resolve(e.decisions, adv);
    Branch b;
    b.next = representative(successor(rep, m));
    b.movers = count_movers(m);
    b.choice = std::move(adv);
    e.branches.push_back(std::move(b));
  }
  return e;
}

std::vector<ClassExpansionUnderTable> expand_under_table_serial(const std::vector<ConfigClass>& classes,
                                                                const AlgorithmTable& table, Semantics sem) {
  std::vector<ClassExpansionUnderTable> out(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out[i] = expand_under_table(classes[i].representative, table, sem);
  }
  return out;
}

std::vector<ClassExpansionUnderTable> expand_under_table_omp(const std::vector<ConfigClass>& classes,
                                                             const AlgorithmTable& table, Semantics sem) {
  std::vector<ClassExpansionUnderTable> out(classes.size());
  const long long count = static_cast<long long>(classes.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < count; ++i) {
    out[i] = expand_under_table(classes[i].representative, table, sem);
  }
  return out;
}

namespace {

// Decision tuples of c built robot by robot: every assignment of a decision
// to each robot, kept when it is a decision function of the views (equal
// views decide alike, singleton views only Idle/Any, Any only on singletons).
std::set<DecisionTuple> raw_decision_tuples(const Configuration& c) {
  const int k = c.k();
  std::vector<View> views(k);
  std::vector<bool> cw(k);
  for (int i = 0; i < k; ++i) {
    views[i] = view(c, i);
    cw[i] = reads_clockwise(c, i);
  }
  std::set<DecisionTuple> out;
  std::vector<int> digit(k, 0);
  constexpr Decision kAll[] = {Decision::Idle, Decision::CW, Decision::CCW, Decision::Any};
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      const Decision di = kAll[digit[i]];
      const bool single = views[i].disoriented();
      ok = single ? (di == Decision::Idle || di == Decision::Any) : di != Decision::Any;
      for (int j = 0; j < i && ok; ++j) {
        if (views[j] == views[i]) {
          ok = kAll[digit[j]] == di;
        }
      }
    }
    if (ok) {
      DecisionTuple t(k);
      for (int i = 0; i < k; ++i) {
        t[i] = cw[i] ? kAll[digit[i]] : flip(kAll[digit[i]]);
      }
      out.insert(std::move(t));
    }
    int j = 0;
    while (j < k && ++digit[j] == 4) {
      digit[j++] = 0;
    }
    if (j == k) {
      break;
    }
  }
  return out;
}

RawExpansion expand_raw(const std::vector<Configuration>& configs, std::size_t idx) {
  const Configuration& c = configs[idx];
  RawExpansion e;
  for (const DecisionTuple& d : raw_decision_tuples(c)) {
    int w = 0;
    std::vector<int> any;
    MoveTuple m(d.size(), Move::Idle);
    for (std::size_t i = 0; i < d.size(); ++i) {
      w += d[i] != Decision::Idle;
      if (d[i] == Decision::Any) {
        any.push_back(static_cast<int>(i));
      } else if (d[i] == Decision::CW) {
        m[i] = Move::CW;
      } else if (d[i] == Decision::CCW) {
        m[i] = Move::CCW;
      }
    }
    std::vector<std::size_t> succ;
    for (std::uint32_t mask = 0; mask < (1u << any.size()); ++mask) {
      for (std::size_t b = 0; b < any.size(); ++b) {
        m[any[b]] = (mask >> b) & 1 ? Move::CW : Move::CCW;
      }
      const Configuration next = successor(c, m);
      auto it = std::lower_bound(configs.begin(), configs.end(), next);
      if (it == configs.end() || *it != next) {
        throw ContractError("raw successor " + next.str() + " outside the enumeration");
      }
      succ.push_back(static_cast<std::size_t>(it - configs.begin()));
    }
    e.weight.push_back(w);
    e.successors.push_back(std::move(succ));
  }
  return e;
}

Value sweep_one(const RawExpansion& e, const std::vector<Value>& in) {
  Value best;
  for (std::size_t j = 0; j < e.weight.size(); ++j) {
    Value worst = std::uint64_t{0};
    for (std::size_t s : e.successors[j]) {
      if (!in[s]) {
        worst.reset();
        break;
      }
      worst = std::max(*worst, *in[s]);
    }
    if (worst) {
      const std::uint64_t cand = *worst + static_cast<std::uint64_t>(e.weight[j]);
      if (!best || cand < *best) {
        best = cand;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<RawExpansion> expand_raw_serial(const std::vector<Configuration>& configs) {
  std::vector<RawExpansion> out(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) {
    out[i] = expand_raw(configs, i);
  }
  return out;
}

std::vector<RawExpansion> expand_raw_omp(const std::vector<Configuration>& configs) {
  std::vector<RawExpansion> out(configs.size());
  const long long count = static_cast<long long>(configs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < count; ++i) {
    out[i] = expand_raw(configs, static_cast<std::size_t>(i));
  }
  return out;
}

bool bellman_sweep_serial(const std::vector<RawExpansion>& raw, const std::vector<bool>& target,
                          const std::vector<Value>& in, std::vector<Value>& out) {
  bool changed = false;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out[i] = target[i] ? Value{0} : sweep_one(raw[i], in);
    changed = changed || out[i] != in[i];
  }
  return changed;
}

bool bellman_sweep_omp(const std::vector<RawExpansion>& raw, const std::vector<bool>& target,
                       const std::vector<Value>& in, std::vector<Value>& out) {
  int changed = 0;
  const long long count = static_cast<long long>(raw.size());
#pragma omp parallel for reduction(| : changed) schedule(static)
  for (long long i = 0; i < count; ++i) {
    out[i] = target[i] ? Value{0} : sweep_one(raw[i], in);
    changed |= out[i] != in[i] ? 1 : 0;
  }
  return changed != 0;
}

}  // namespace ringgather::kernels
