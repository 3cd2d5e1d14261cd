#include "abdkit/solvers.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "abdkit/affine.hpp"
#include "abdkit/sat.hpp"
#include "normal_forms.hpp"

namespace abdkit {

using BigInt = boost::multiprecision::cpp_int;

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Auto: return "auto";
    case Algorithm::Generic: return "generic";
    case Algorithm::Monotone: return "monotone";
    case Algorithm::Affine: return "affine";
    case Algorithm::Syntactic: return "syntactic";
    case Algorithm::Brute: return "brute";
  }
  throw InternalError("unhandled algorithm");
}

std::optional<Algorithm> parse_algorithm(std::string_view s) {
  using A = Algorithm;
  for (A a : {A::Auto, A::Generic, A::Monotone, A::Affine, A::Syntactic, A::Brute}) {
    if (to_string(a) == s) return a;
  }
  return std::nullopt;
}

CloneId instance_clone(const Instance& p) {
  if (p.kb().functions().empty()) return make_clone(CloneFamily::I2);
  return clone_id(p.kb().functions());
}

namespace {

bool leq(const CloneId& c, CloneFamily fam) { return clone_leq(c, make_clone(fam)); }

bool negative_class(ManifestationClass c) {
  return c == ManifestationClass::NQ || c == ManifestationClass::NC ||
         c == ManifestationClass::NT;
}

std::vector<std::string> sorted_hypotheses(const Instance& p) {
  return {p.hypotheses().begin(), p.hypotheses().end()};
}

using detail::DisjNF;
using detail::ForcedLits;
using detail::LitConj;
using detail::forced_from_kb;
using detail::normalize_disj;
using detail::normalize_lit_conj;

// Gamma |= phi given the forced-literal form of a satisfiable Gamma.
bool forced_entails(const std::map<std::string, bool>& forced, const Manifestation& phi) {
  const auto matches = [&](const Literal& l) {
    auto it = forced.find(l.var);
    return it != forced.end() && it->second == l.positive;
  };
  const auto has_complement_pair = [&](const std::vector<Literal>& lits) {
    for (std::size_t i = 0; i < lits.size(); ++i) {
      for (std::size_t j = i + 1; j < lits.size(); ++j) {
        if (lits[i].var == lits[j].var && lits[i].positive != lits[j].positive) return true;
      }
    }
    return false;
  };
  switch (phi.kind()) {
    case ManifestationKind::Literal:
      return matches(phi.literals()[0]);
    case ManifestationKind::Clause:
      return has_complement_pair(phi.literals()) ||
             std::any_of(phi.literals().begin(), phi.literals().end(), matches);
    case ManifestationKind::Term:
      return !has_complement_pair(phi.literals()) &&
             std::all_of(phi.literals().begin(), phi.literals().end(), matches);
    case ManifestationKind::BFormula: {
      LitConj nf = normalize_lit_conj(phi.bformula());
      if (nf.bot) return false;
      for (const auto& [v, s] : nf.lits) {
        auto it = forced.find(v);
        if (it == forced.end() || it->second != s) return false;
      }
      return true;
    }
  }
  throw InternalError("unhandled manifestation kind");
}

// Existence with a fixed literal prefix. For E/N knowledge bases the fixed
// part only matters for consistency; the rest of A never helps.
struct EnContext {
  ForcedLits forced;
  bool entailed = false;
};

EnContext en_context(const Instance& p) {
  EnContext ctx;
  ctx.forced = forced_from_kb(p.kb());
  if (!ctx.forced.unsat) ctx.entailed = forced_entails(ctx.forced.lits, p.manifestation());
  return ctx;
}

bool en_exists(const EnContext& ctx, const std::vector<Literal>& fixed) {
  if (ctx.forced.unsat || !ctx.entailed) return false;
  for (const Literal& l : fixed) {
    auto it = ctx.forced.lits.find(l.var);
    if (it != ctx.forced.lits.end() && it->second != l.positive) return false;
  }
  return true;
}

struct VContext {
  std::vector<DisjNF> formulas;  // Bot entries mean Gamma is unsatisfiable
  bool unsat = false;
};

VContext v_context(const KnowledgeBase& kb) {
  VContext ctx;
  for (const Formula& f : kb.formulas()) {
    ctx.formulas.push_back(normalize_disj(f));
    if (ctx.formulas.back().kind == DisjNF::Bot) ctx.unsat = true;
  }
  return ctx;
}

// Applies fixed literals: true literals satisfy clauses, false ones shrink them.
VContext v_apply(const VContext& ctx, const std::vector<Literal>& fixed) {
  VContext out = ctx;
  std::set<std::string> made_true, made_false;
  for (const Literal& l : fixed) (l.positive ? made_true : made_false).insert(l.var);
  for (DisjNF& nf : out.formulas) {
    if (nf.kind != DisjNF::Vars) continue;
    bool sat = std::any_of(nf.vars.begin(), nf.vars.end(),
                           [&](const std::string& v) { return made_true.count(v); });
    if (sat) {
      nf = {DisjNF::Top, {}};
      continue;
    }
    for (const std::string& v : made_false) nf.vars.erase(v);
    if (nf.vars.empty()) {
      nf = {DisjNF::Bot, {}};
      out.unsat = true;
    }
  }
  return out;
}

bool v_satisfiable(const VContext& ctx) { return !ctx.unsat; }

// Satisfiability of Gamma with the candidate variables X set to false.
bool v_sat_with_false(const VContext& ctx, const std::set<std::string>& x) {
  if (ctx.unsat) return false;
  for (const DisjNF& nf : ctx.formulas) {
    if (nf.kind != DisjNF::Vars) continue;
    bool alive = std::any_of(nf.vars.begin(), nf.vars.end(),
                             [&](const std::string& v) { return !x.count(v); });
    if (!alive) return false;
  }
  return true;
}

// Existence for [B] ⊆ V, symmetric mode, clause-like manifestations.
// Returns the witness set X (hypotheses set to false) on success.
std::optional<std::set<std::string>> v_exists(const VContext& ctx,
                                              const std::set<std::string>& active_a,
                                              const Manifestation& phi) {
  if (ctx.unsat) return std::nullopt;
  using MC = ManifestationClass;
  const MC cls = phi.cls();
  if (cls == MC::NQ || cls == MC::NC) return std::nullopt;  // trivially no

  std::set<std::string> goal;  // positive clause to entail
  if (phi.kind() == ManifestationKind::BFormula) {
    DisjNF nf = normalize_disj(phi.bformula());
    if (nf.kind == DisjNF::Bot) return std::nullopt;
    if (nf.kind == DisjNF::Top) return std::set<std::string>{};
    goal = nf.vars;
  } else {
    // Mixed clauses reduce to their positive part; complementary pairs are
    // tautological.
    for (std::size_t i = 0; i < phi.literals().size(); ++i) {
      for (std::size_t j = i + 1; j < phi.literals().size(); ++j) {
        if (phi.literals()[i].var == phi.literals()[j].var &&
            phi.literals()[i].positive != phi.literals()[j].positive) {
          return std::set<std::string>{};
        }
      }
    }
    for (const Literal& l : phi.literals()) {
      if (l.positive) goal.insert(l.var);
    }
    if (goal.empty()) return std::nullopt;
  }

  for (const DisjNF& nf : ctx.formulas) {
    if (nf.kind != DisjNF::Vars) continue;
    std::set<std::string> x, outside;
    for (const std::string& v : nf.vars) {
      if (active_a.count(v)) {
        x.insert(v);
      } else {
        outside.insert(v);
      }
    }
    if (outside.empty()) continue;  // would make the clause false
    bool inside_goal = std::all_of(outside.begin(), outside.end(),
                                   [&](const std::string& v) { return goal.count(v); });
    if (!inside_goal) continue;
    if (v_sat_with_false(ctx, x)) return x;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Affine machinery ([B] ⊆ L).
// ---------------------------------------------------------------------------

struct Violator {
  std::vector<std::pair<std::string, bool>> units;
  std::optional<std::pair<std::set<std::string>, bool>> equation;
};

struct AffineContext {
  Gf2System base;
  std::vector<Violator> violators;  // sigma violates phi iff it extends one
};

AffineContext affine_context(const Instance& p) {
  AffineContext ctx{system_from_kb(p.kb()), {}};
  const Manifestation& phi = p.manifestation();
  switch (phi.kind()) {
    case ManifestationKind::Literal:
    case ManifestationKind::Clause: {
      Violator v;
      for (const Literal& l : phi.literals()) v.units.emplace_back(l.var, !l.positive);
      ctx.violators.push_back(std::move(v));
      break;
    }
    case ManifestationKind::Term: {
      for (const Literal& l : phi.literals()) {
        ctx.violators.push_back(Violator{{{l.var, !l.positive}}, std::nullopt});
      }
      break;
    }
    case ManifestationKind::BFormula: {
      AffineNormalForm anf = affine_normal_form(phi.bformula());
      // phi = c XOR (+)S; phi false iff (+)S = c.
      ctx.violators.push_back(Violator{{}, {{anf.odd_vars, anf.constant}}});
      break;
    }
  }
  return ctx;
}

Gf2System with_violator(const Gf2System& sys, const Violator& v) {
  Gf2System out = sys;
  for (const auto& [var, val] : v.units) out.add_unit(var, val);
  if (v.equation) out.add_equation(v.equation->first, v.equation->second);
  return out;
}

BigInt space_size(const Gf2System& sys) {
  auto dim = sys.dimension();
  if (!dim) return 0;
  return BigInt(1) << *dim;
}

// Does some full assignment of active_a extend to a model of sys + fixed and
// avoid every violator extension? (Explanations project onto exactly these.)
bool affine_exists(const AffineContext& ctx, const std::vector<Literal>& fixed,
                   const std::set<std::string>& active_a) {
  Gf2System sys = ctx.base;
  for (const Literal& l : fixed) sys.add_unit(l.var, l.positive);

  Gf2System projected = sys.project(active_a);
  const BigInt total = space_size(projected);
  if (total == 0) return false;

  std::vector<Gf2System> parts;
  for (const Violator& v : ctx.violators) {
    parts.push_back(with_violator(sys, v).project(active_a));
  }
  // Inclusion-exclusion over the union of the projected violating spaces.
  const std::size_t k = parts.size();
  BigInt unioned = 0;
  for (std::size_t subset = 1; subset < (std::size_t{1} << k); ++subset) {
    Gf2System inter = projected;
    for (std::size_t i = 0; i < k; ++i) {
      if (subset & (std::size_t{1} << i)) inter.merge(parts[i]);
    }
    const BigInt sz = space_size(inter);
    if (std::popcount(subset) % 2 == 1) {
      unioned += sz;
    } else {
      unioned -= sz;
    }
  }
  return unioned < total;
}

// ---------------------------------------------------------------------------
// Monotone verification (Prop 4 / Prop 8 style).
// ---------------------------------------------------------------------------

bool eval_with_default(const Formula& f, const std::map<std::string, bool>& subst,
                       const std::map<std::string, bool>& overrides) {
  if (f.is_var()) {
    if (auto it = overrides.find(f.var_name()); it != overrides.end()) return it->second;
    if (auto it = subst.find(f.var_name()); it != subst.end()) return it->second;
    return true;
  }
  unsigned row = 0;
  for (const Formula& kid : f.children()) {
    row = (row << 1) | (eval_with_default(kid, subst, overrides) ? 1u : 0u);
  }
  return f.fun()->value(row);
}

// For monotone Gamma, Gamma ∧ E ∧ units is satisfiable iff the all-true
// completion works.
bool monotone_sat(const KnowledgeBase& kb, const std::map<std::string, bool>& subst,
                  const std::map<std::string, bool>& overrides) {
  for (const Formula& f : kb.formulas()) {
    if (!eval_with_default(f, subst, overrides)) return false;
  }
  return true;
}

bool monotone_verify(const Instance& p, const Explanation& e) {
  const std::map<std::string, bool>& subst = e.signs();
  if (!monotone_sat(p.kb(), subst, {})) return false;
  const Manifestation& phi = p.manifestation();
  switch (phi.kind()) {
    case ManifestationKind::Literal:
    case ManifestationKind::Clause: {
      std::map<std::string, bool> overrides;
      for (const Literal& l : phi.literals()) {
        auto [it, inserted] = overrides.emplace(l.var, !l.positive);
        if (!inserted && it->second != !l.positive) return true;  // tautology
      }
      return !monotone_sat(p.kb(), subst, overrides);
    }
    case ManifestationKind::Term: {
      for (const Literal& l : phi.literals()) {
        if (monotone_sat(p.kb(), subst, {{l.var, !l.positive}})) return false;
      }
      return true;
    }
    case ManifestationKind::BFormula:
      // coNP-grade verification; delegate the entailment side.
      return entails(p.kb(), e.literals(), phi);
  }
  throw InternalError("unhandled manifestation kind");
}

// ---------------------------------------------------------------------------
// Candidate searches.
// ---------------------------------------------------------------------------

// Full candidates over A in deterministic order: positive sign first.
template <typename Verify>
std::optional<Explanation> search_full(const std::vector<std::string>& avars,
                                       const Verify& verify) {
  std::vector<Literal> lits;
  auto rec = [&](auto&& self, std::size_t i) -> std::optional<Explanation> {
    if (i == avars.size()) {
      Explanation e(lits);
      if (verify(e)) return e;
      return std::nullopt;
    }
    for (bool sign : {true, false}) {
      lits.push_back({avars[i], sign});
      if (auto r = self(self, i + 1)) return r;
      lits.pop_back();
    }
    return std::nullopt;
  };
  return rec(rec, 0);
}

// Subsets of A in lexicographic order (absent < positive).
template <typename Verify>
std::optional<Explanation> search_subsets(const std::vector<std::string>& avars,
                                          const Verify& verify) {
  std::vector<Literal> lits;
  auto rec = [&](auto&& self, std::size_t i) -> std::optional<Explanation> {
    if (i == avars.size()) {
      Explanation e(lits);
      if (verify(e)) return e;
      return std::nullopt;
    }
    if (auto r = self(self, i + 1)) return r;
    lits.push_back({avars[i], true});
    if (auto r = self(self, i + 1)) return r;
    lits.pop_back();
    return std::nullopt;
  };
  return rec(rec, 0);
}

Explanation full_positive(const Instance& p) {
  Explanation e;
  for (const std::string& v : p.hypotheses()) e.set(v, true);
  return e;
}

}  // namespace

SolveResult solve_syntactic(const Instance& p) {
  const CloneId c = instance_clone(p);
  const bool en = leq(c, CloneFamily::E) || leq(c, CloneFamily::N);
  const bool v = leq(c, CloneFamily::V);
  if (!en && !v) {
    throw ValidationError("syntactic algorithm requires [B] ⊆ E, N, or V; clone is " +
                          c.name());
  }
  if (en) {
    EnContext ctx = en_context(p);
    if (en_exists(ctx, {})) return {true, Explanation{}, "syntactic"};
    return {false, std::nullopt, "syntactic"};
  }
  const bool term_class = p.manifestation().kind() == ManifestationKind::Term;
  if (p.mode() == Mode::Positive) {
    // Lemma 2: V ⊆ M, so testing the single candidate A suffices.
    Explanation a = full_positive(p);
    if (monotone_verify(p, a)) return {true, std::move(a), "syntactic"};
    return {false, std::nullopt, "syntactic"};
  }
  if (term_class) {
    // NP-complete region (positive terms over V): no shortcut attempted.
    return solve_generic(p);
  }
  VContext ctx = v_context(p.kb());
  std::set<std::string> active(p.hypotheses().begin(), p.hypotheses().end());
  if (auto x = v_exists(ctx, active, p.manifestation())) {
    Explanation e;
    for (const std::string& var : *x) e.set(var, false);
    return {true, std::move(e), "syntactic"};
  }
  return {false, std::nullopt, "syntactic"};
}

SolveResult solve_affine(const Instance& p) {
  const CloneId c = instance_clone(p);
  if (!leq(c, CloneFamily::L)) {
    throw ValidationError("affine algorithm requires [B] ⊆ L; clone is " + c.name());
  }
  if (p.mode() == Mode::Positive) {
    AffineContext ctx = affine_context(p);
    const std::vector<std::string> avars = sorted_hypotheses(p);
    auto verify = [&](const Explanation& e) {
      Gf2System sys = ctx.base;
      for (const auto& [var, sign] : e.signs()) sys.add_unit(var, sign);
      if (!sys.consistent()) return false;
      for (const Violator& v : ctx.violators) {
        if (with_violator(sys, v).consistent()) return false;
      }
      return true;
    };
    if (auto e = search_subsets(avars, verify)) return {true, std::move(*e), "affine"};
    return {false, std::nullopt, "affine"};
  }
  AffineContext ctx = affine_context(p);
  std::set<std::string> remaining(p.hypotheses().begin(), p.hypotheses().end());
  std::vector<Literal> fixed;
  if (!affine_exists(ctx, fixed, remaining)) return {false, std::nullopt, "affine"};
  for (const std::string& var : sorted_hypotheses(p)) {
    remaining.erase(var);
    bool committed = false;
    for (bool sign : {true, false}) {
      fixed.push_back({var, sign});
      if (affine_exists(ctx, fixed, remaining)) {
        committed = true;
        break;
      }
      fixed.pop_back();
    }
    if (!committed) throw InternalError("affine descent lost the explanation");
  }
  Explanation witness(fixed);
  return {true, std::move(witness), "affine"};
}

SolveResult solve_monotone(const Instance& p) {
  const CloneId c = instance_clone(p);
  if (p.mode() == Mode::Positive) {
    if (!leq(c, CloneFamily::M) && !leq(c, CloneFamily::R1)) {
      throw ValidationError(
          "positive single-candidate test requires [B] ⊆ M or ⊆ R1; clone is " + c.name());
    }
    Explanation a = full_positive(p);
    const bool ok = leq(c, CloneFamily::M) ? monotone_verify(p, a)
                                           : verify_explanation(p, a);
    if (ok) return {true, std::move(a), "monotone"};
    return {false, std::nullopt, "monotone"};
  }
  if (!leq(c, CloneFamily::M)) {
    throw ValidationError("monotone algorithm requires [B] ⊆ M; clone is " + c.name());
  }
  if (negative_class(p.manifestation().cls())) {
    return {false, std::nullopt, "monotone"};  // trivially no (monotone KB)
  }
  const std::vector<std::string> avars = sorted_hypotheses(p);
  auto verify = [&](const Explanation& e) { return monotone_verify(p, e); };
  if (auto e = search_full(avars, verify)) return {true, std::move(*e), "monotone"};
  return {false, std::nullopt, "monotone"};
}

SolveResult solve_generic(const Instance& p) {
  const std::vector<std::string> avars = sorted_hypotheses(p);
  auto verify = [&](const Explanation& e) {
    std::vector<Literal> lits = e.literals();
    if (!satisfiable(p.kb(), lits).first) return false;
    return entails(p.kb(), lits, p.manifestation());
  };
  std::optional<Explanation> e = p.mode() == Mode::Positive
                                     ? search_subsets(avars, verify)
                                     : search_full(avars, verify);
  if (e) return {true, std::move(*e), "generic"};
  return {false, std::nullopt, "generic"};
}

SolveResult solve_positive(const Instance& p) {
  if (p.mode() != Mode::Positive) {
    throw ValidationError("solve_positive requires a positive-mode instance");
  }
  const CloneId c = instance_clone(p);
  if (leq(c, CloneFamily::E) || leq(c, CloneFamily::N) || leq(c, CloneFamily::V)) {
    return solve_syntactic(p);
  }
  if (leq(c, CloneFamily::M) || leq(c, CloneFamily::R1)) {
    return solve_monotone(p);
  }
  if (leq(c, CloneFamily::L)) {
    return solve_affine(p);
  }
  return solve_generic(p);
}

SolveResult solve(const Instance& p, Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Generic:
      return solve_generic(p);
    case Algorithm::Monotone:
      return solve_monotone(p);
    case Algorithm::Affine:
      return solve_affine(p);
    case Algorithm::Syntactic:
      return solve_syntactic(p);
    case Algorithm::Brute: {
      std::vector<Explanation> all = brute_force_explanations(p, false);
      if (all.empty()) return {false, std::nullopt, "brute"};
      return {true, all.front(), "brute"};
    }
    case Algorithm::Auto:
      break;
  }
  if (p.mode() == Mode::Positive) return solve_positive(p);
  const CloneId c = instance_clone(p);
  const ManifestationClass cls = p.manifestation().cls();
  const bool clause_like =
      cls != ManifestationClass::PT && cls != ManifestationClass::NT &&
      cls != ManifestationClass::T;
  if (leq(c, CloneFamily::E) || leq(c, CloneFamily::N) ||
      (leq(c, CloneFamily::V) && clause_like)) {
    return solve_syntactic(p);
  }
  if (leq(c, CloneFamily::L)) return solve_affine(p);
  if (leq(c, CloneFamily::M)) return solve_monotone(p);
  return solve_generic(p);
}

namespace {

// Shared by enumeration: path-specific "does an explanation extend this
// prefix" tests.
enum class DescentPath { EN, V, Affine, Exhaustive };

}  // namespace

void enumerate_explanations(const Instance& p,
                            const std::function<bool(const Explanation&)>& emit) {
  const std::vector<std::string> avars = sorted_hypotheses(p);
  const CloneId c = instance_clone(p);
  const bool term_class = p.manifestation().kind() == ManifestationKind::Term;

  DescentPath path = DescentPath::Exhaustive;
  if (leq(c, CloneFamily::L)) {
    path = DescentPath::Affine;
  } else if (leq(c, CloneFamily::E) || leq(c, CloneFamily::N)) {
    path = DescentPath::EN;
  } else if (leq(c, CloneFamily::V) && !term_class) {
    path = DescentPath::V;
  }

  if (path == DescentPath::Exhaustive) {
    if (avars.size() > 12) {
      throw LimitError("exhaustive enumeration supports at most 12 hypotheses");
    }
    const int states = p.mode() == Mode::Positive ? 2 : 3;
    std::vector<int> digits(avars.size(), 0);
    while (true) {
      Explanation e;
      for (std::size_t i = 0; i < avars.size(); ++i) {
        if (digits[i] == 1) e.set(avars[i], true);
        if (digits[i] == 2) e.set(avars[i], false);
      }
      if (verify_explanation(p, e)) {
        if (!emit(e)) return;
      }
      int pos = static_cast<int>(avars.size()) - 1;
      while (pos >= 0 && digits[pos] == states - 1) digits[pos--] = 0;
      if (pos < 0) break;
      ++digits[pos];
    }
    return;
  }

  // Self-reducible descent. exists(fixed, remaining) decides whether some
  // explanation has exactly the prefix `fixed` on the processed variables.
  std::optional<EnContext> en_ctx;
  std::optional<VContext> v_ctx;
  std::optional<AffineContext> aff_ctx;
  if (path == DescentPath::EN) en_ctx = en_context(p);
  if (path == DescentPath::V) v_ctx = v_context(p.kb());
  if (path == DescentPath::Affine) aff_ctx = affine_context(p);

  std::set<std::string> remaining(avars.begin(), avars.end());
  const auto exists = [&](const std::vector<Literal>& fixed) -> bool {
    switch (path) {
      case DescentPath::EN:
        return en_exists(*en_ctx, fixed);
      case DescentPath::V: {
        if (p.mode() == Mode::Positive) {
          // Lemma 2 on the reduced instance (V ⊆ M): test fixed ∪ remaining.
          Explanation cand;
          for (const Literal& l : fixed) cand.set(l.var, l.positive);
          for (const std::string& v : remaining) cand.set(v, true);
          return monotone_verify(p, cand);
        }
        VContext reduced = v_apply(*v_ctx, fixed);
        return v_exists(reduced, remaining, p.manifestation()).has_value();
      }
      case DescentPath::Affine: {
        if (p.mode() == Mode::Positive) {
          // Subset search over the remaining hypotheses.
          Gf2System sys = aff_ctx->base;
          for (const Literal& l : fixed) sys.add_unit(l.var, l.positive);
          std::vector<std::string> rest(remaining.begin(), remaining.end());
          auto verify = [&](const Explanation& e) {
            Gf2System s2 = sys;
            for (const auto& [var, sign] : e.signs()) s2.add_unit(var, sign);
            if (!s2.consistent()) return false;
            for (const Violator& v : aff_ctx->violators) {
              if (with_violator(s2, v).consistent()) return false;
            }
            return true;
          };
          return search_subsets(rest, verify).has_value();
        }
        return affine_exists(*aff_ctx, fixed, remaining);
      }
      case DescentPath::Exhaustive:
        break;
    }
    throw InternalError("unhandled descent path");
  };

  std::vector<Literal> fixed;
  bool keep_going = true;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (!keep_going) return;
    if (i == avars.size()) {
      Explanation e(fixed);
      keep_going = emit(e);
      return;
    }
    remaining.erase(avars[i]);
    const int states = p.mode() == Mode::Positive ? 2 : 3;
    for (int state = 0; state < states && keep_going; ++state) {
      bool pushed = false;
      if (state == 1) {
        fixed.push_back({avars[i], true});
        pushed = true;
      } else if (state == 2) {
        fixed.push_back({avars[i], false});
        pushed = true;
      }
      if (exists(fixed)) self(self, i + 1);
      if (pushed) fixed.pop_back();
    }
    remaining.insert(avars[i]);
  };
  if (exists(fixed)) rec(rec, 0);
}

std::vector<Explanation> enumerate_explanations(const Instance& p) {
  std::vector<Explanation> out;
  enumerate_explanations(p, [&](const Explanation& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

std::vector<Explanation> brute_force_explanations(const Instance& p, bool full_only) {
  const std::vector<std::string> avars = sorted_hypotheses(p);
  const std::set<std::string>& kb_vars = p.kb_vars();
  if (avars.size() > 12) throw LimitError("brute force supports at most 12 hypotheses");
  if (kb_vars.size() > 20) throw LimitError("brute force supports at most 20 variables");

  const std::vector<std::string> order(kb_vars.begin(), kb_vars.end());
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);

  std::vector<CompiledFormula> compiled;
  for (const Formula& f : p.kb().formulas()) compiled.emplace_back(f, order);

  const Manifestation& phi = p.manifestation();
  std::optional<CompiledFormula> phi_formula;
  if (phi.kind() == ManifestationKind::BFormula) {
    phi_formula.emplace(phi.bformula(), order);
  }
  const auto phi_holds = [&](uint64_t mask) -> bool {
    switch (phi.kind()) {
      case ManifestationKind::BFormula:
        return phi_formula->eval_mask(mask);
      case ManifestationKind::Literal:
      case ManifestationKind::Clause: {
        for (const Literal& l : phi.literals()) {
          if ((((mask >> index.at(l.var)) & 1) != 0) == l.positive) return true;
        }
        return false;
      }
      case ManifestationKind::Term: {
        for (const Literal& l : phi.literals()) {
          if ((((mask >> index.at(l.var)) & 1) != 0) != l.positive) return false;
        }
        return true;
      }
    }
    throw InternalError("unhandled manifestation kind");
  };

  const std::size_t k = avars.size();
  std::vector<int> apos(k);
  for (std::size_t i = 0; i < k; ++i) apos[i] = index.at(avars[i]);

  std::vector<uint8_t> sat_any(std::size_t{1} << k, 0), viol_any(std::size_t{1} << k, 0);
  const uint64_t masks = uint64_t{1} << order.size();
  for (uint64_t mask = 0; mask < masks; ++mask) {
    bool ok = true;
    for (const CompiledFormula& f : compiled) {
      if (!f.eval_mask(mask)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    uint64_t sigma = 0;
    for (std::size_t i = 0; i < k; ++i) sigma |= ((mask >> apos[i]) & 1) << i;
    sat_any[sigma] = 1;
    if (!phi_holds(mask)) viol_any[sigma] = 1;
  }

  std::vector<Explanation> out;
  const int states = p.mode() == Mode::Positive ? 2 : 3;
  std::vector<int> digits(k, 0);
  const uint64_t sigma_count = uint64_t{1} << k;
  while (true) {
    uint64_t pos_mask = 0, dom_mask = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (digits[i] != 0) dom_mask |= uint64_t{1} << i;
      if (digits[i] == 1) pos_mask |= uint64_t{1} << i;
    }
    if (!full_only || dom_mask == sigma_count - 1) {
      bool sat = false, viol = false;
      for (uint64_t sigma = 0; sigma < sigma_count; ++sigma) {
        if ((sigma & dom_mask) != pos_mask) continue;
        if (sat_any[sigma]) sat = true;
        if (viol_any[sigma]) viol = true;
        if (sat && viol) break;
      }
      if (sat && !viol) {
        Explanation e;
        for (std::size_t i = 0; i < k; ++i) {
          if (digits[i] == 1) e.set(avars[i], true);
          if (digits[i] == 2) e.set(avars[i], false);
        }
        out.push_back(std::move(e));
      }
    }
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && digits[pos] == states - 1) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }
  return out;
}

}  // namespace abdkit
