#include "abdkit/sat.hpp"

#include <algorithm>

namespace abdkit {

void CnfProblem::reserve_source_vars(const std::set<std::string>& vars) {
  for (const std::string& v : vars) index_of(v);
}

int CnfProblem::index_of(const std::string& var) {
  auto it = var_index.find(var);
  if (it != var_index.end()) return it->second;
  int idx = ++num_vars;
  var_index.emplace(var, idx);
  return idx;
}

int CnfProblem::encode_node(const Formula& f) {
  if (f.is_var()) return index_of(f.var_name());
  std::vector<int> kid_vars;
  kid_vars.reserve(f.children().size());
  for (const Formula& kid : f.children()) kid_vars.push_back(encode_node(kid));
  const int aux = ++num_vars;
  const BoolFun& fun = *f.fun();
  const unsigned rows = 1u << fun.arity();
  for (unsigned row = 0; row < rows; ++row) {
    std::vector<int> clause;
    clause.reserve(kid_vars.size() + 1);
    for (std::size_t i = 0; i < kid_vars.size(); ++i) {
      const bool bit = (row >> (kid_vars.size() - 1 - i)) & 1;
      clause.push_back(bit ? -kid_vars[i] : kid_vars[i]);
    }
    clause.push_back(fun.value(row) ? aux : -aux);
    clauses.push_back(std::move(clause));
  }
  return aux;
}

void CnfProblem::add_formula(const Formula& f, bool asserted_value) {
  const int root = encode_node(f);
  clauses.push_back({asserted_value ? root : -root});
}

void CnfProblem::add_literal(const Literal& l) {
  const int idx = index_of(l.var);
  clauses.push_back({l.positive ? idx : -idx});
}

std::optional<std::vector<bool>> CnfProblem::solve() const {
  // 0 = unassigned, 1 = true, -1 = false.
  std::vector<int8_t> value(num_vars + 1, 0);
  std::vector<int> trail;

  const auto assign = [&](int lit) {
    value[std::abs(lit)] = lit > 0 ? 1 : -1;
    trail.push_back(std::abs(lit));
  };
  const auto lit_state = [&](int lit) -> int8_t {
    int8_t v = value[std::abs(lit)];
    return lit > 0 ? v : static_cast<int8_t>(-v);
  };

  // Returns false on conflict; appends propagated variables to the trail.
  const auto propagate = [&]() -> bool {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const std::vector<int>& clause : clauses) {
        int unassigned = 0;
        int free_lit = 0;
        bool satisfied = false;
        for (int lit : clause) {
          int8_t st = lit_state(lit);
          if (st > 0) {
            satisfied = true;
            break;
          }
          if (st == 0) {
            ++unassigned;
            free_lit = lit;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          assign(free_lit);
          changed = true;
        }
      }
    }
    return true;
  };

  auto search = [&](auto&& self) -> bool {
    const std::size_t mark = trail.size();
    if (!propagate()) {
      while (trail.size() > mark) {
        value[trail.back()] = 0;
        trail.pop_back();
      }
      return false;
    }
    int branch = 0;
    for (int v = 1; v <= num_vars; ++v) {
      if (value[v] == 0) {
        branch = v;
        break;
      }
    }
    if (branch == 0) return true;
    for (int sign : {-1, +1}) {
      const std::size_t mark2 = trail.size();
      assign(sign * branch);
      if (self(self)) return true;
      while (trail.size() > mark2) {
        value[trail.back()] = 0;
        trail.pop_back();
      }
    }
    while (trail.size() > mark) {
      value[trail.back()] = 0;
      trail.pop_back();
    }
    return false;
  };

  if (!search(search)) return std::nullopt;
  std::vector<bool> model(num_vars + 1, false);
  for (int v = 1; v <= num_vars; ++v) model[v] = value[v] > 0;
  return model;
}

std::pair<bool, std::optional<Assignment>> satisfiable(
    const KnowledgeBase& kb, const std::vector<Literal>& extra) {
  CnfProblem cnf;
  cnf.reserve_source_vars(kb.vars());
  for (const Formula& f : kb.formulas()) cnf.add_formula(f, true);
  for (const Literal& l : extra) cnf.add_literal(l);

  auto model = cnf.solve();
  if (!model) return {false, std::nullopt};
  Assignment a;
  for (const auto& [name, idx] : cnf.var_index) a[name] = (*model)[idx];
  for (const Formula& f : kb.formulas()) {
    if (!f.evaluate(a)) throw InternalError("sat witness fails evaluation check");
  }
  return {true, std::move(a)};
}

namespace {

bool refute(const KnowledgeBase& kb, const std::vector<Literal>& extra,
            const std::vector<Literal>& negated_units,
            const Formula* false_formula) {
  CnfProblem cnf;
  cnf.reserve_source_vars(kb.vars());
  for (const Formula& f : kb.formulas()) cnf.add_formula(f, true);
  for (const Literal& l : extra) cnf.add_literal(l);
  for (const Literal& l : negated_units) cnf.add_literal(l);
  if (false_formula) cnf.add_formula(*false_formula, false);
  return !cnf.solve().has_value();
}

}  // namespace

bool entails(const KnowledgeBase& kb, const std::vector<Literal>& extra,
             const Manifestation& phi) {
  switch (phi.kind()) {
    case ManifestationKind::Literal:
    case ManifestationKind::Clause: {
      // ¬(l1 ∨ ... ∨ lk) = conjunction of the complements.
      std::vector<Literal> negated;
      for (const Literal& l : phi.literals()) negated.push_back({l.var, !l.positive});
      return refute(kb, extra, negated, nullptr);
    }
    case ManifestationKind::Term: {
      // Gamma ∧ E |= l1 ∧ ... ∧ lk iff it entails each literal.
      for (const Literal& l : phi.literals()) {
        if (!refute(kb, extra, {{l.var, !l.positive}}, nullptr)) return false;
      }
      return true;
    }
    case ManifestationKind::BFormula:
      return refute(kb, extra, {}, &phi.bformula());
  }
  throw InternalError("unhandled manifestation kind");
}

bool brute_sat(const KnowledgeBase& kb, const std::vector<Literal>& extra) {
  std::set<std::string> var_set = kb.vars();
  for (const Literal& l : extra) var_set.insert(l.var);
  if (var_set.size() > 20) {
    throw LimitError("brute_sat supports at most 20 variables");
  }
  std::vector<std::string> order(var_set.begin(), var_set.end());
  std::vector<CompiledFormula> compiled;
  compiled.reserve(kb.formulas().size());
  for (const Formula& f : kb.formulas()) compiled.emplace_back(f, order);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);

  const uint64_t limit = uint64_t{1} << order.size();
  for (uint64_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (const Literal& l : extra) {
      if (((mask >> index[l.var]) & 1) != (l.positive ? 1u : 0u)) {
        ok = false;
        break;
      }
    }
    for (std::size_t i = 0; ok && i < compiled.size(); ++i) {
      if (!compiled[i].eval_mask(mask)) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace abdkit
