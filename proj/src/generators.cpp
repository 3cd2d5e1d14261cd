#include "abdkit/generators.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "abdkit/clones.hpp"

namespace abdkit {

std::string to_string(GenKind k) {
  switch (k) {
    case GenKind::TwoInThree: return "two_in_three";
    case GenKind::ThreeSatTerm: return "three_sat_term";
    case GenKind::Qsat2: return "qsat2";
    case GenKind::LinearSystem: return "linear_system";
    case GenKind::Pos2SatCount: return "pos2sat_count";
    case GenKind::Pi1Count: return "pi1_count";
    case GenKind::Unsat3CnfPos: return "unsat_3cnf_pos";
    case GenKind::Taut3DnfPos: return "taut_3dnf_pos";
    case GenKind::Random: return "random";
  }
  throw InternalError("unhandled generator kind");
}

namespace {

std::optional<GenKind> parse_kind(std::string_view s) {
  using GK = GenKind;
  for (GK k : {GK::TwoInThree, GK::ThreeSatTerm, GK::Qsat2, GK::LinearSystem,
               GK::Pos2SatCount, GK::Pi1Count, GK::Unsat3CnfPos, GK::Taut3DnfPos,
               GK::Random}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

// Fresh-name prefix such that prefix+stem+index collides with nothing used.
std::string fresh_prefix(const std::set<std::string>& used,
                         const std::vector<std::string>& stems) {
  std::string prefix;
  for (;;) {
    bool clash = false;
    for (const std::string& u : used) {
      for (const std::string& stem : stems) {
        const std::string cand = prefix + stem;
        if (u.compare(0, cand.size(), cand) == 0) {
          clash = true;
          break;
        }
      }
      if (clash) break;
    }
    if (!clash) return prefix;
    prefix += "_";
  }
}

// Canonical-connective builder; formulas are retargeted to B afterwards.
struct Builder {
  FunPtr f_or = std::make_shared<const BoolFun>(fn::or_());
  FunPtr f_and = std::make_shared<const BoolFun>(fn::and_());
  FunPtr f_not = std::make_shared<const BoolFun>(fn::not_());
  FunPtr f_imp = std::make_shared<const BoolFun>(fn::imp());
  FunPtr f_xor3 = std::make_shared<const BoolFun>(fn::xor3());
  FunPtr f_top = std::make_shared<const BoolFun>(fn::top());
  FunPtr f_bot = std::make_shared<const BoolFun>(fn::bot());

  Formula top() const { return Formula::apply(f_top, {}); }
  Formula bot() const { return Formula::apply(f_bot, {}); }

  Formula lit(const Literal& l) const {
    Formula v = Formula::var(l.var);
    return l.positive ? v : Formula::apply(f_not, {std::move(v)});
  }

  // Balanced binary tree; `items` must be non-empty.
  Formula fold(const FunPtr& op, std::vector<Formula> items) const {
    if (items.empty()) throw InternalError("empty connective fold");
    while (items.size() > 1) {
      std::vector<Formula> next;
      for (std::size_t i = 0; i + 1 < items.size(); i += 2) {
        next.push_back(Formula::apply(op, {items[i], items[i + 1]}));
      }
      if (items.size() % 2) next.push_back(items.back());
      items = std::move(next);
    }
    return items[0];
  }

  Formula or_tree(std::vector<Formula> items) const { return fold(f_or, std::move(items)); }
  Formula and_tree(std::vector<Formula> items) const { return fold(f_and, std::move(items)); }

  // Balanced ternary XOR tree; the leaf count must be odd.
  Formula xor3_tree(std::vector<Formula> leaves) const {
    if (leaves.size() % 2 == 0) throw InternalError("ternary XOR tree needs odd leaves");
    while (leaves.size() > 1) {
      std::vector<Formula> next;
      std::size_t i = 0;
      while (leaves.size() - i >= 3) {
        next.push_back(Formula::apply(f_xor3, {leaves[i], leaves[i + 1], leaves[i + 2]}));
        i += 3;
      }
      while (i < leaves.size()) next.push_back(leaves[i++]);
      leaves = std::move(next);
    }
    return leaves[0];
  }
};

// Replaces every connective by a representation over the target base.
class Retargeter {
public:
  explicit Retargeter(const std::vector<BoolFun>& target) {
    for (const BoolFun& f : target) funs_.add(f);
  }

  const FunctionSet& functions() const { return funs_; }

  Formula rewrite(const Formula& f) {
    if (f.is_var()) return f;
    std::vector<Formula> kids;
    kids.reserve(f.children().size());
    for (const Formula& kid : f.children()) kids.push_back(rewrite(kid));
    // A target connective with the same table is used directly.
    for (const FunPtr& g : funs_.functions()) {
      if (g->same_table(*f.fun())) return Formula::apply(g, std::move(kids));
    }
    // Constants pass through; the caller eliminates them per Lemma 1.
    if (f.fun()->arity() == 0) return f;
    const Formula& rep = representation(*f.fun());
    std::map<std::string, Formula> subst;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      subst.emplace("x" + std::to_string(i + 1), kids[i]);
    }
    return rep.substitute_vars(subst);
  }

private:
  const Formula& representation(const BoolFun& f) {
    auto it = cache_.find(f.bits() + "/" + std::to_string(f.arity()));
    if (it != cache_.end()) return it->second;
    std::optional<Formula> rep = find_representation(funs_, f, 31);
    if (!rep) {
      throw ValidationError("target base cannot represent connective '" + f.name() + "'");
    }
    return cache_.emplace(f.bits() + "/" + std::to_string(f.arity()), std::move(*rep))
        .first->second;
  }

  FunctionSet funs_;
  std::map<std::string, Formula> cache_;
};

struct Pieces {
  std::vector<Formula> formulas;
  std::set<std::string> hyps;
  std::optional<Manifestation> manifest;
  Mode mode = Mode::Symmetric;
  std::string relation;
  bool keeps_top = false;  // run Lemma-1 top elimination afterwards
};

Generated assemble(const Pieces& pieces, const std::vector<BoolFun>& target) {
  Retargeter rt(target);
  std::vector<Formula> rewritten;
  bool top_used = false;
  for (const Formula& f : pieces.formulas) rewritten.push_back(rt.rewrite(f));

  // A top constant may survive retargeting when the target base cannot
  // express it; Lemma-1 elimination removes it again below.
  FunctionSet funs;
  for (const FunPtr& f : rt.functions().functions()) funs.add(*f);
  const bool target_has_top = funs.contains_table(fn::top());
  const auto uses_fun = [&](const Formula& f, const auto& self, auto pred) -> bool {
    if (f.is_var()) return false;
    if (pred(*f.fun())) return true;
    for (const Formula& kid : f.children()) {
      if (self(kid, self, pred)) return true;
    }
    return false;
  };
  const auto is_top = [](const BoolFun& g) { return g.arity() == 0 && g.value(0); };
  for (const Formula& f : rewritten) {
    if (uses_fun(f, uses_fun, is_top)) top_used = true;
  }
  if (top_used && !target_has_top) funs.add(fn::top());

  KnowledgeBase kb(std::move(funs));
  for (Formula& f : rewritten) kb.add_formula(std::move(f));

  Manifestation m = *pieces.manifest;
  if (m.kind() == ManifestationKind::BFormula) {
    m = Manifestation::formula(rt.rewrite(m.bformula()));
  }
  Instance inst(std::move(kb), pieces.hyps, std::move(m), pieces.mode);
  if (top_used && !target_has_top) inst = eliminate_true_constant(inst);
  return {std::move(inst), pieces.relation};
}

std::set<std::string> clause_vars(const std::vector<GenClause>& clauses) {
  std::set<std::string> out;
  for (const GenClause& c : clauses) {
    for (const Literal& l : c.lits) out.insert(l.var);
  }
  return out;
}

Pieces build_two_in_three(const GenSpec& spec, const Builder& b) {
  if (spec.clauses.empty()) throw ValidationError("two_in_three needs at least one clause");
  for (const GenClause& c : spec.clauses) {
    std::set<std::string> vars;
    for (const Literal& l : c.lits) {
      if (!l.positive) throw ValidationError("two_in_three clauses must be positive");
      vars.insert(l.var);
    }
    if (c.lits.size() != 3 || vars.size() != 3) {
      throw ValidationError("two_in_three clauses need exactly three distinct variables");
    }
  }
  std::set<std::string> used = clause_vars(spec.clauses);
  const std::string p = fresh_prefix(used, {"q"});
  const std::string q = p + "q";

  Pieces out;
  std::vector<Formula> big;
  for (std::size_t i = 0; i < spec.clauses.size(); ++i) {
    const auto& lits = spec.clauses[i].lits;
    const std::string qi = p + "q" + std::to_string(i + 1);
    out.hyps.insert(qi);
    std::vector<Formula> cv;
    for (const Literal& l : lits) cv.push_back(Formula::var(l.var));
    out.formulas.push_back(b.or_tree(cv));
    for (int drop = 0; drop < 3; ++drop) {
      std::vector<Formula> pair;
      for (int j = 0; j < 3; ++j) {
        if (j != drop) pair.push_back(Formula::var(lits[j].var));
      }
      pair.push_back(Formula::var(qi));
      out.formulas.push_back(b.or_tree(std::move(pair)));
    }
    big.push_back(b.and_tree({Formula::var(lits[0].var), Formula::var(lits[1].var),
                              Formula::var(lits[2].var)}));
  }
  for (std::size_t i = 0; i < spec.clauses.size(); ++i) {
    big.push_back(Formula::var(p + "q" + std::to_string(i + 1)));
  }
  big.push_back(Formula::var(q));
  out.formulas.push_back(b.or_tree(std::move(big)));
  for (const std::string& v : used) out.hyps.insert(v);
  out.manifest = Manifestation::literal({q, true});
  out.mode = Mode::Symmetric;
  out.relation =
      "has explanation iff some assignment makes exactly two variables true in every clause";
  return out;
}

Pieces build_three_sat_term(const GenSpec& spec, const Builder& b) {
  if (spec.clauses.empty()) throw ValidationError("three_sat_term needs at least one clause");
  std::set<std::string> used = clause_vars(spec.clauses);
  if (used.empty()) throw ValidationError("three_sat_term needs at least one variable");
  const std::string p = fresh_prefix(used, {"xp", "q"});

  std::map<std::string, std::string> primed;
  std::map<std::string, std::string> qvar;
  int i = 0;
  for (const std::string& v : used) {
    ++i;
    primed[v] = p + "xp" + std::to_string(i);
    qvar[v] = p + "q" + std::to_string(i);
  }

  Pieces out;
  for (const GenClause& c : spec.clauses) {
    std::vector<Formula> items;
    for (const Literal& l : c.lits) {
      items.push_back(Formula::var(l.positive ? l.var : primed[l.var]));
    }
    out.formulas.push_back(b.or_tree(std::move(items)));
  }
  std::vector<Literal> term;
  for (const std::string& v : used) {
    out.formulas.push_back(b.or_tree({Formula::var(v), Formula::var(primed[v])}));
    out.formulas.push_back(b.or_tree({Formula::var(v), Formula::var(qvar[v])}));
    out.formulas.push_back(b.or_tree({Formula::var(primed[v]), Formula::var(qvar[v])}));
    out.hyps.insert(v);
    out.hyps.insert(primed[v]);
    term.push_back({qvar[v], true});
  }
  out.manifest = Manifestation::term(std::move(term));
  out.mode = Mode::Symmetric;
  out.relation = "has explanation iff the CNF is satisfiable";
  return out;
}

Pieces build_qsat2(const GenSpec& spec, const Builder& b) {
  std::set<std::string> quantified(spec.exists_vars.begin(), spec.exists_vars.end());
  for (const std::string& y : spec.forall_vars) {
    if (!quantified.insert(y).second) {
      throw ValidationError("qsat2: variable quantified twice");
    }
  }
  for (const GenClause& t : spec.clauses) {
    for (const Literal& l : t.lits) {
      if (!quantified.count(l.var)) {
        throw ValidationError("qsat2: term variable '" + l.var + "' is not quantified");
      }
    }
    if (t.lits.empty()) throw ValidationError("qsat2: empty DNF term");
  }
  if (spec.clauses.empty()) throw ValidationError("qsat2 needs at least one DNF term");

  std::set<std::string> used = quantified;
  const std::string p = fresh_prefix(used, {"xp", "yp", "t", "f", "q"});
  const std::string q = p + "q";
  std::map<std::string, std::string> primed;
  int xi = 0;
  std::map<std::string, std::pair<std::string, std::string>> tf;  // exists var -> (t_i, f_i)
  for (const std::string& x : spec.exists_vars) {
    ++xi;
    primed[x] = p + "xp" + std::to_string(xi);
    tf[x] = {p + "t" + std::to_string(xi), p + "f" + std::to_string(xi)};
  }
  int yi = 0;
  for (const std::string& y : spec.forall_vars) {
    primed[y] = p + "yp" + std::to_string(++yi);
  }

  Pieces out;
  // Negation normal form of NOT(DNF): one all-positive clause per term,
  // complemented literals replaced by primed variables.
  for (const GenClause& t : spec.clauses) {
    std::vector<Formula> items;
    for (const Literal& l : t.lits) {
      items.push_back(Formula::var(l.positive ? primed[l.var] : l.var));
    }
    items.push_back(Formula::var(q));
    out.formulas.push_back(b.or_tree(std::move(items)));
  }
  for (const std::string& v : quantified) {
    out.formulas.push_back(b.or_tree({Formula::var(v), Formula::var(primed[v])}));
  }
  for (const std::string& x : spec.exists_vars) {
    const auto& [ti, fi] = tf[x];
    out.formulas.push_back(b.or_tree({Formula::var(fi), Formula::var(x)}));
    out.formulas.push_back(b.or_tree({Formula::var(ti), Formula::var(primed[x])}));
    out.formulas.push_back(b.or_tree({Formula::var(fi), Formula::var(ti)}));
    out.hyps.insert(ti);
    out.hyps.insert(fi);
  }
  std::vector<Formula> psi;
  psi.push_back(Formula::var(q));
  for (const std::string& v : quantified) {
    psi.push_back(b.and_tree({Formula::var(v), Formula::var(primed[v])}));
  }
  out.manifest = Manifestation::formula(b.or_tree(std::move(psi)));
  out.mode = Mode::Symmetric;
  out.relation = "has explanation iff the Sigma2 sentence is true";
  return out;
}

Pieces build_linear_system(const GenSpec& spec, const Builder& b) {
  if (spec.equations.empty()) throw ValidationError("linear_system needs an equation");
  std::set<std::string> used;
  for (const auto& [vars, rhs] : spec.equations) {
    if (vars.empty()) throw ValidationError("linear_system: equation with no variables");
    for (const std::string& v : vars) used.insert(v);
  }
  const std::string q = fresh_prefix(used, {"q"}) + "q";

  Pieces out;
  bool q_used = false;
  for (const auto& [vars, rhs] : spec.equations) {
    std::vector<Formula> leaves;
    for (const std::string& v : vars) leaves.push_back(Formula::var(v));
    if (!rhs) leaves.push_back(b.top());
    // phi_i(1,...,1) = |vars| + [rhs = 0] mod 2; formulas failing to hold at
    // the all-ones point get the XOR q twist.
    const bool all_ones = (vars.size() + (rhs ? 0 : 1)) % 2 == 1;
    if (!all_ones) {
      leaves.push_back(Formula::var(q));
      q_used = true;
    }
    out.formulas.push_back(b.xor3_tree(std::move(leaves)));
  }
  if (!q_used) {
    // q must occur in the knowledge base; XOR in q twice (a no-op).
    Formula& first = out.formulas.front();
    first = Formula::apply(b.f_xor3, {first, Formula::var(q), Formula::var(q)});
  }
  out.manifest = Manifestation::literal({q, true});
  out.mode = Mode::Symmetric;
  out.relation = "has explanation iff the GF(2) system has no solution";
  return out;
}

Pieces build_pos2sat(const GenSpec& spec, const Builder& b) {
  if (spec.clauses.empty()) throw ValidationError("pos2sat_count needs at least one clause");
  for (const GenClause& c : spec.clauses) {
    if (c.lits.size() != 2 ||
        !std::all_of(c.lits.begin(), c.lits.end(),
                     [](const Literal& l) { return l.positive; })) {
      throw ValidationError("pos2sat_count clauses are pairs of positive literals");
    }
  }
  std::set<std::string> used = clause_vars(spec.clauses);
  const std::string q = fresh_prefix(used, {"q"}) + "q";

  Pieces out;
  for (const GenClause& c : spec.clauses) {
    out.formulas.push_back(b.or_tree(
        {Formula::var(c.lits[0].var), Formula::var(c.lits[1].var), Formula::var(q)}));
  }
  out.hyps = used;
  out.manifest = Manifestation::literal({q, true});
  out.mode = Mode::Symmetric;
  out.relation = "model count of the 2-CNF = 2^" + std::to_string(used.size()) +
                 " - full explanation count";
  return out;
}

Pieces build_pi1(const GenSpec& spec, const Builder& b) {
  if (spec.free_vars.empty()) throw ValidationError("pi1_count needs free variables");
  std::set<std::string> xs(spec.free_vars.begin(), spec.free_vars.end());
  std::set<std::string> ys(spec.forall_vars.begin(), spec.forall_vars.end());
  for (const std::string& x : xs) {
    if (ys.count(x)) throw ValidationError("pi1_count: variable both free and quantified");
  }
  for (const GenClause& t : spec.clauses) {
    if (t.lits.empty()) throw ValidationError("pi1_count: empty DNF term");
    for (const Literal& l : t.lits) {
      if (!xs.count(l.var) && !ys.count(l.var)) {
        throw ValidationError("pi1_count: unknown variable '" + l.var + "'");
      }
    }
  }
  std::set<std::string> used = xs;
  used.insert(ys.begin(), ys.end());
  const std::string p = fresh_prefix(used, {"xp", "r", "t", "q"});
  const std::string tvar = p + "t";
  const std::string q = p + "q";

  Pieces out;
  std::vector<Formula> final_clause;
  int i = 0;
  for (const std::string& x : xs) {
    ++i;
    const std::string xp = p + "xp" + std::to_string(i);
    const std::string r = p + "r" + std::to_string(i);
    out.formulas.push_back(b.or_tree({b.lit({x, false}), Formula::var(r)}));
    out.formulas.push_back(b.or_tree({b.lit({xp, false}), Formula::var(r)}));
    out.formulas.push_back(b.or_tree({b.lit({x, false}), b.lit({xp, false})}));
    out.hyps.insert(x);
    out.hyps.insert(xp);
    final_clause.push_back(b.lit({r, false}));
  }
  // phi -> t as clauses NOT(term) OR t.
  for (const GenClause& t : spec.clauses) {
    std::vector<Formula> items;
    for (const Literal& l : t.lits) items.push_back(b.lit({l.var, !l.positive}));
    items.push_back(Formula::var(tvar));
    out.formulas.push_back(b.or_tree(std::move(items)));
  }
  final_clause.push_back(b.lit({tvar, false}));
  final_clause.push_back(Formula::var(q));
  out.formulas.push_back(b.or_tree(std::move(final_clause)));
  out.manifest = Manifestation::literal({q, true});
  out.mode = Mode::Symmetric;
  out.relation = "model count of the forall-DNF sentence = full explanation count";
  return out;
}

Pieces build_unsat3cnf(const GenSpec& spec, const Builder& b) {
  if (spec.clauses.empty()) throw ValidationError("unsat_3cnf_pos needs at least one clause");
  std::set<std::string> used = clause_vars(spec.clauses);
  const std::string q = fresh_prefix(used, {"q"}) + "q";

  // {imp, bot}-representation of each clause, then bot replaced by q.
  const auto rep_lit = [&](const Literal& l) {
    Formula v = Formula::var(l.var);
    return l.positive ? v : Formula::apply(b.f_imp, {std::move(v), b.bot()});
  };
  const auto rep_or = [&](Formula lhs, Formula rhs) {
    return Formula::apply(b.f_imp,
                          {Formula::apply(b.f_imp, {std::move(lhs), b.bot()}), std::move(rhs)});
  };

  Pieces out;
  for (const GenClause& c : spec.clauses) {
    if (c.lits.empty()) throw ValidationError("unsat_3cnf_pos: empty clause");
    Formula f = rep_lit(c.lits.back());
    if (c.lits.size() == 1) {
      // Double negation keeps the constant (hence q) in the formula.
      f = Formula::apply(b.f_imp, {Formula::apply(b.f_imp, {std::move(f), b.bot()}), b.bot()});
    } else {
      for (std::size_t i = c.lits.size() - 1; i-- > 0;) {
        f = rep_or(rep_lit(c.lits[i]), std::move(f));
      }
    }
    // Replace the false constant with the fresh manifestation variable.
    out.formulas.push_back(f.substitute(b.bot(), Formula::var(q)));
  }
  out.manifest = Manifestation::literal({q, true});
  out.mode = Mode::Positive;
  out.relation = "has explanation iff the CNF is unsatisfiable";
  return out;
}

Pieces build_taut3dnf(const GenSpec& spec, const Builder& b) {
  if (spec.clauses.empty()) throw ValidationError("taut_3dnf_pos needs at least one term");
  std::set<std::string> used = clause_vars(spec.clauses);
  const std::string p = fresh_prefix(used, {"xp", "q"});
  const std::string q = p + "q";
  std::map<std::string, std::string> primed;
  int i = 0;
  for (const std::string& v : used) primed[v] = p + "xp" + std::to_string(++i);

  Pieces out;
  for (const GenClause& t : spec.clauses) {
    std::vector<Formula> items;
    for (const Literal& l : t.lits) {
      items.push_back(Formula::var(l.positive ? primed[l.var] : l.var));
    }
    items.push_back(Formula::var(q));
    out.formulas.push_back(b.or_tree(std::move(items)));
  }
  std::vector<Formula> psi;
  psi.push_back(Formula::var(q));
  for (const std::string& v : used) {
    out.formulas.push_back(b.or_tree({Formula::var(v), Formula::var(primed[v])}));
    psi.push_back(b.and_tree({Formula::var(v), Formula::var(primed[v])}));
  }
  out.manifest = Manifestation::formula(b.or_tree(std::move(psi)));
  out.mode = Mode::Positive;
  out.relation = "the empty set is an explanation iff the DNF is a tautology";
  return out;
}

std::vector<BoolFun> default_base(GenKind kind) {
  switch (kind) {
    case GenKind::TwoInThree:
    case GenKind::Qsat2:
    case GenKind::Taut3DnfPos:
      return {fn::or_(), fn::and_()};
    case GenKind::ThreeSatTerm:
    case GenKind::Pos2SatCount:
      return {fn::or_()};
    case GenKind::LinearSystem:
      return {fn::xor3()};
    case GenKind::Pi1Count:
      return {fn::or_(), fn::not_()};
    case GenKind::Unsat3CnfPos:
      return {fn::imp()};
    case GenKind::Random:
      return {};
  }
  throw InternalError("unhandled generator kind");
}

}  // namespace

Generated generate(const GenSpec& spec) {
  if (spec.kind == GenKind::Random) {
    return {gen_random(spec.seed, spec.profile), "seeded random instance"};
  }
  Builder b;
  Pieces pieces;
  switch (spec.kind) {
    case GenKind::TwoInThree: pieces = build_two_in_three(spec, b); break;
    case GenKind::ThreeSatTerm: pieces = build_three_sat_term(spec, b); break;
    case GenKind::Qsat2: pieces = build_qsat2(spec, b); break;
    case GenKind::LinearSystem: pieces = build_linear_system(spec, b); break;
    case GenKind::Pos2SatCount: pieces = build_pos2sat(spec, b); break;
    case GenKind::Pi1Count: pieces = build_pi1(spec, b); break;
    case GenKind::Unsat3CnfPos: pieces = build_unsat3cnf(spec, b); break;
    case GenKind::Taut3DnfPos: pieces = build_taut3dnf(spec, b); break;
    case GenKind::Random: break;
  }
  std::vector<BoolFun> target = spec.target_b.empty() ? default_base(spec.kind) : spec.target_b;
  return assemble(pieces, target);
}

Instance gen_random(uint64_t seed, const RandomProfile& profile) {
  std::optional<CloneId> region = parse_clone(profile.region);
  if (!region) throw ValidationError("unknown clone region '" + profile.region + "'");
  std::vector<BoolFun> base = base_of(*region);

  std::mt19937_64 rng(seed);
  const auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  FunctionSet funs;
  for (const BoolFun& f : base) funs.add(f);
  std::vector<FunPtr> fps = funs.functions();

  std::vector<std::string> vars;
  for (int i = 0; i < profile.num_vars; ++i) vars.push_back("x" + std::to_string(i + 1));

  const auto random_tree = [&](auto&& self, int depth,
                               const std::vector<std::string>& pool) -> Formula {
    if (depth <= 0 || pick(3) == 0) return Formula::var(pool[pick(pool.size())]);
    const FunPtr& f = fps[pick(fps.size())];
    std::vector<Formula> kids;
    for (int i = 0; i < f->arity(); ++i) kids.push_back(self(self, depth - 1, pool));
    return Formula::apply(f, std::move(kids));
  };

  for (int attempt = 0; attempt < 500; ++attempt) {
    KnowledgeBase kb(funs);
    for (int i = 0; i < profile.num_formulas; ++i) {
      kb.add_formula(random_tree(random_tree, profile.max_depth, vars));
    }
    std::set<std::string> occurring = kb.vars();
    if (static_cast<int>(occurring.size()) < profile.num_hyps + 1) continue;

    std::vector<std::string> occ(occurring.begin(), occurring.end());
    std::set<std::string> hyps;
    while (static_cast<int>(hyps.size()) < profile.num_hyps) {
      hyps.insert(occ[pick(occ.size())]);
    }
    std::vector<std::string> rest;
    for (const std::string& v : occ) {
      if (!hyps.count(v)) rest.push_back(v);
    }
    if (rest.empty()) continue;

    const auto random_sign = [&]() {
      if (profile.manifest_signs == "pos") return true;
      if (profile.manifest_signs == "neg") return false;
      return pick(2) == 0;
    };

    std::optional<Manifestation> manifest;
    switch (profile.manifest_kind) {
      case ManifestationKind::Literal:
        manifest = Manifestation::literal({rest[pick(rest.size())], random_sign()});
        break;
      case ManifestationKind::Clause:
      case ManifestationKind::Term: {
        const int want = std::max(1, std::min<int>(profile.manifest_size,
                                                   static_cast<int>(rest.size())));
        std::set<std::string> chosen;
        while (static_cast<int>(chosen.size()) < want) chosen.insert(rest[pick(rest.size())]);
        std::vector<Literal> lits;
        for (const std::string& v : chosen) lits.push_back({v, random_sign()});
        manifest = profile.manifest_kind == ManifestationKind::Clause
                       ? Manifestation::clause(std::move(lits))
                       : Manifestation::term(std::move(lits));
        break;
      }
      case ManifestationKind::BFormula: {
        Formula f = random_tree(random_tree, 2, rest);
        manifest = Manifestation::formula(std::move(f));
        break;
      }
    }
    try {
      return Instance(std::move(kb), std::move(hyps), std::move(*manifest), profile.mode);
    } catch (const ValidationError&) {
      continue;
    }
  }
  throw InternalError("random generator failed to produce a valid instance");
}

GenSpec parse_genspec(std::string_view text) {
  GenSpec spec;
  bool kind_set = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  const auto fail = [&](const std::string& msg) -> void {
    throw ParseError("genspec line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "kind") {
      std::string k;
      ls >> k;
      auto parsed = parse_kind(k);
      if (!parsed) fail("unknown kind '" + k + "'");
      spec.kind = *parsed;
      kind_set = true;
    } else if (tok == "fun") {
      std::string name, bits;
      int arity;
      if (!(ls >> name >> arity >> bits)) fail("expected: fun <name> <arity> <bits>");
      spec.target_b.push_back(BoolFun::from_bits(name, arity, bits));
    } else if (tok == "c" || tok == "t") {
      GenClause clause;
      std::string lit;
      while (ls >> lit) clause.lits.push_back(parse_literal(lit));
      if (clause.lits.empty()) fail("empty clause");
      spec.clauses.push_back(std::move(clause));
    } else if (tok == "eq") {
      std::vector<std::string> vars;
      std::string item;
      bool saw_eq = false;
      int rhs = -1;
      while (ls >> item) {
        if (item == "=") {
          saw_eq = true;
        } else if (saw_eq) {
          if (item != "0" && item != "1") fail("equation right side must be 0 or 1");
          rhs = item == "1";
        } else {
          vars.push_back(item);
        }
      }
      if (!saw_eq || rhs < 0 || vars.empty()) fail("expected: eq <var>... = 0|1");
      spec.equations.emplace_back(std::move(vars), rhs == 1);
    } else if (tok == "exists" || tok == "forall" || tok == "free") {
      std::vector<std::string>& into = tok == "exists" ? spec.exists_vars
                                       : tok == "forall" ? spec.forall_vars
                                                         : spec.free_vars;
      std::string v;
      while (ls >> v) into.push_back(v);
    } else if (tok == "seed") {
      if (!(ls >> spec.seed)) fail("expected: seed <n>");
    } else if (tok == "region") {
      if (!(ls >> spec.profile.region)) fail("expected: region <clone>");
    } else if (tok == "vars") {
      if (!(ls >> spec.profile.num_vars)) fail("expected: vars <n>");
    } else if (tok == "formulas") {
      if (!(ls >> spec.profile.num_formulas)) fail("expected: formulas <n>");
    } else if (tok == "hyps") {
      if (!(ls >> spec.profile.num_hyps)) fail("expected: hyps <n>");
    } else if (tok == "depth") {
      if (!(ls >> spec.profile.max_depth)) fail("expected: depth <n>");
    } else if (tok == "mode") {
      std::string m;
      ls >> m;
      if (m == "symmetric") {
        spec.profile.mode = Mode::Symmetric;
      } else if (m == "positive") {
        spec.profile.mode = Mode::Positive;
      } else {
        fail("expected: mode symmetric|positive");
      }
    } else if (tok == "manifest") {
      std::string m;
      ls >> m;
      if (m == "literal") {
        spec.profile.manifest_kind = ManifestationKind::Literal;
      } else if (m == "clause") {
        spec.profile.manifest_kind = ManifestationKind::Clause;
      } else if (m == "term") {
        spec.profile.manifest_kind = ManifestationKind::Term;
      } else if (m == "formula") {
        spec.profile.manifest_kind = ManifestationKind::BFormula;
      } else {
        fail("expected: manifest literal|clause|term|formula");
      }
    } else if (tok == "signs") {
      std::string s;
      ls >> s;
      if (s != "pos" && s != "neg" && s != "mixed") fail("expected: signs pos|neg|mixed");
      spec.profile.manifest_signs = s;
    } else if (tok == "msize") {
      if (!(ls >> spec.profile.manifest_size)) fail("expected: msize <n>");
    } else {
      fail("unknown directive '" + tok + "'");
    }
  }
  if (!kind_set) throw ParseError("genspec: missing kind directive");
  return spec;
}

}  // namespace abdkit
