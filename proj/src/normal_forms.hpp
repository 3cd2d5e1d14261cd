#pragma once

// Internal normal forms for the syntactically tractable clones: E/N
// knowledge bases collapse to forced literals, V ones to disjunction sets.

#include <bit>
#include <map>
#include <set>

#include "abdkit/clones.hpp"
#include "abdkit/formula.hpp"

namespace abdkit::detail {

// Conjunction-of-literals form of an E/N-clone formula.
struct LitConj {
  bool bot = false;
  std::map<std::string, bool> lits;  // empty with !bot => constant true
};

inline LitConj normalize_lit_conj(const Formula& f) {
  if (f.is_var()) return {false, {{f.var_name(), true}}};
  const BoolFun& fun = *f.fun();
  const unsigned ess = essential_mask(fun);
  const int n = fun.arity();
  if (ess == 0) {
    return fun.value(0) ? LitConj{} : LitConj{true, {}};
  }
  PropertySignature sig = function_properties(fun);
  if (sig.conjunction_form) {
    LitConj out;
    for (int i = 0; i < n; ++i) {
      if (!(ess & (1u << (n - 1 - i)))) continue;
      LitConj kid = normalize_lit_conj(f.children()[i]);
      if (kid.bot) return {true, {}};
      for (const auto& [v, s] : kid.lits) {
        auto [it, inserted] = out.lits.emplace(v, s);
        if (!inserted && it->second != s) return {true, {}};  // x AND NOT x
      }
    }
    return out;
  }
  if (sig.unary_form) {
    const int p = std::countr_zero(ess);
    const bool negated = !fun.value(1u << p);
    LitConj kid = normalize_lit_conj(f.children()[n - 1 - p]);
    if (!negated) return kid;
    if (kid.bot) return {};                   // NOT false
    if (kid.lits.empty()) return {true, {}};  // NOT true
    if (kid.lits.size() != 1) {
      throw ValidationError("connective '" + fun.name() +
                            "' negates a non-literal subformula (outside E/N)");
    }
    auto [v, s] = *kid.lits.begin();
    return {false, {{v, !s}}};
  }
  throw ValidationError("connective '" + fun.name() + "' is outside the E/N clones");
}

struct ForcedLits {
  bool unsat = false;
  std::map<std::string, bool> lits;
};

inline ForcedLits forced_from_kb(const KnowledgeBase& kb) {
  ForcedLits out;
  for (const Formula& f : kb.formulas()) {
    LitConj nf = normalize_lit_conj(f);
    if (nf.bot) return {true, {}};
    for (const auto& [v, s] : nf.lits) {
      auto [it, inserted] = out.lits.emplace(v, s);
      if (!inserted && it->second != s) return {true, {}};
    }
  }
  return out;
}

// Disjunction-set form of a V-clone formula.
struct DisjNF {
  enum Kind { Top, Bot, Vars } kind = Bot;
  std::set<std::string> vars;
};

inline DisjNF normalize_disj(const Formula& f) {
  if (f.is_var()) return {DisjNF::Vars, {f.var_name()}};
  const BoolFun& fun = *f.fun();
  const unsigned ess = essential_mask(fun);
  const int n = fun.arity();
  if (ess == 0) return {fun.value(0) ? DisjNF::Top : DisjNF::Bot, {}};
  PropertySignature sig = function_properties(fun);
  if (!sig.disjunction_form) {
    throw ValidationError("connective '" + fun.name() + "' is outside the V clones");
  }
  DisjNF out{DisjNF::Vars, {}};
  for (int i = 0; i < n; ++i) {
    if (!(ess & (1u << (n - 1 - i)))) continue;
    DisjNF kid = normalize_disj(f.children()[i]);
    if (kid.kind == DisjNF::Top) return {DisjNF::Top, {}};
    if (kid.kind == DisjNF::Bot) continue;
    out.vars.insert(kid.vars.begin(), kid.vars.end());
  }
  if (out.vars.empty()) return {DisjNF::Bot, {}};
  return out;
}

}  // namespace abdkit::detail
