#pragma once

// Shared helpers for the test suites: instance construction shortcuts and
// truth-table reference oracles kept independent of the sat backend.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "abdkit/clones.hpp"
#include "abdkit/generators.hpp"
#include "abdkit/model.hpp"

namespace testutil {

using namespace abdkit;

inline Instance make_instance(const std::string& text) { return parse_instance(text); }

// Truth-table reference check of Gamma ∧ E sat and Gamma ∧ E |= phi;
// enumerates every assignment and uses plain formula evaluation only.
inline bool ref_verify(const Instance& p, const Explanation& e) {
  std::vector<std::string> vars(p.kb_vars().begin(), p.kb_vars().end());
  bool sat = false;
  bool entails = true;
  const std::size_t n = vars.size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    Assignment a;
    for (std::size_t i = 0; i < n; ++i) a[vars[i]] = (mask >> i) & 1;
    bool ok = true;
    for (const auto& [var, sign] : e.signs()) {
      if (a.at(var) != sign) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (const Formula& f : p.kb().formulas()) {
      if (!f.evaluate(a)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    sat = true;
    if (!p.manifestation().evaluate(a)) entails = false;
  }
  return sat && entails;
}

// All explanations by the reference verifier, in no particular order.
inline std::vector<Explanation> ref_explanations(const Instance& p, bool full_only) {
  std::vector<std::string> avars(p.hypotheses().begin(), p.hypotheses().end());
  std::vector<Explanation> out;
  const std::size_t k = avars.size();
  const int states = p.mode() == Mode::Positive ? 2 : 3;
  std::vector<int> digits(k, 0);
  while (true) {
    Explanation e;
    for (std::size_t i = 0; i < k; ++i) {
      if (digits[i] == 1) e.set(avars[i], true);
      if (digits[i] == 2) e.set(avars[i], false);
    }
    if ((!full_only || e.size() == k) && ref_verify(p, e)) out.push_back(e);
    std::size_t pos = k;
    while (pos > 0 && digits[pos - 1] == states - 1) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  return out;
}

// ---- payload-side oracles for the generator relations ----

// Does some assignment make exactly two literals true in every clause?
inline bool two_in_three_exists(const std::vector<GenClause>& clauses,
                                const std::vector<std::string>& vars) {
  for (uint64_t mask = 0; mask < (uint64_t{1} << vars.size()); ++mask) {
    std::map<std::string, bool> a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (mask >> i) & 1;
    bool ok = true;
    for (const GenClause& c : clauses) {
      int t = 0;
      for (const Literal& l : c.lits) t += a.at(l.var) ? 1 : 0;
      if (t != 2) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline bool clause_holds(const GenClause& c, const std::map<std::string, bool>& a) {
  for (const Literal& l : c.lits) {
    if (a.at(l.var) == l.positive) return true;
  }
  return false;
}

inline bool term_holds(const GenClause& t, const std::map<std::string, bool>& a) {
  for (const Literal& l : t.lits) {
    if (a.at(l.var) != l.positive) return false;
  }
  return true;
}

inline bool cnf_satisfiable(const std::vector<GenClause>& clauses,
                            const std::vector<std::string>& vars) {
  for (uint64_t mask = 0; mask < (uint64_t{1} << vars.size()); ++mask) {
    std::map<std::string, bool> a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (mask >> i) & 1;
    bool ok = true;
    for (const GenClause& c : clauses) {
      if (!clause_holds(c, a)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline uint64_t cnf_model_count(const std::vector<GenClause>& clauses,
                                const std::vector<std::string>& vars) {
  uint64_t count = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << vars.size()); ++mask) {
    std::map<std::string, bool> a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (mask >> i) & 1;
    bool ok = true;
    for (const GenClause& c : clauses) {
      if (!clause_holds(c, a)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

inline bool dnf_holds(const std::vector<GenClause>& terms,
                      const std::map<std::string, bool>& a) {
  for (const GenClause& t : terms) {
    if (term_holds(t, a)) return true;
  }
  return false;
}

inline bool dnf_tautology(const std::vector<GenClause>& terms,
                          const std::vector<std::string>& vars) {
  for (uint64_t mask = 0; mask < (uint64_t{1} << vars.size()); ++mask) {
    std::map<std::string, bool> a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (mask >> i) & 1;
    if (!dnf_holds(terms, a)) return false;
  }
  return true;
}

// exists x-vars, forall y-vars: DNF body.
inline bool qbf2_true(const std::vector<std::string>& xs, const std::vector<std::string>& ys,
                      const std::vector<GenClause>& terms) {
  for (uint64_t xmask = 0; xmask < (uint64_t{1} << xs.size()); ++xmask) {
    bool all = true;
    for (uint64_t ymask = 0; ymask < (uint64_t{1} << ys.size()); ++ymask) {
      std::map<std::string, bool> a;
      for (std::size_t i = 0; i < xs.size(); ++i) a[xs[i]] = (xmask >> i) & 1;
      for (std::size_t i = 0; i < ys.size(); ++i) a[ys[i]] = (ymask >> i) & 1;
      if (!dnf_holds(terms, a)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

// Model count of psi(x) = forall y: DNF(x, y).
inline uint64_t pi1_model_count(const std::vector<std::string>& xs,
                                const std::vector<std::string>& ys,
                                const std::vector<GenClause>& terms) {
  uint64_t count = 0;
  for (uint64_t xmask = 0; xmask < (uint64_t{1} << xs.size()); ++xmask) {
    bool all = true;
    for (uint64_t ymask = 0; ymask < (uint64_t{1} << ys.size()); ++ymask) {
      std::map<std::string, bool> a;
      for (std::size_t i = 0; i < xs.size(); ++i) a[xs[i]] = (xmask >> i) & 1;
      for (std::size_t i = 0; i < ys.size(); ++i) a[ys[i]] = (ymask >> i) & 1;
      if (!dnf_holds(terms, a)) {
        all = false;
        break;
      }
    }
    if (all) ++count;
  }
  return count;
}

inline bool gf2_solvable(const std::vector<std::pair<std::vector<std::string>, bool>>& eqs,
                         const std::vector<std::string>& vars) {
  for (uint64_t mask = 0; mask < (uint64_t{1} << vars.size()); ++mask) {
    std::map<std::string, bool> a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (mask >> i) & 1;
    bool ok = true;
    for (const auto& [evars, rhs] : eqs) {
      bool sum = false;
      for (const std::string& v : evars) sum ^= a.at(v);
      if (sum != rhs) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// ---- seeded random payload generators ----

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(uint64_t seed) : engine(seed) {}
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(engine() % n); }
  bool coin() { return pick(2) == 0; }
};

inline std::vector<std::string> var_names(int n, const std::string& stem = "x") {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

inline std::vector<GenClause> random_cnf(Rng& rng, const std::vector<std::string>& vars,
                                         int num_clauses, int width, bool positive_only) {
  std::vector<GenClause> out;
  for (int i = 0; i < num_clauses; ++i) {
    GenClause c;
    std::set<std::string> seen;
    while (static_cast<int>(c.lits.size()) < width) {
      const std::string& v = vars[rng.pick(vars.size())];
      if (!seen.insert(v).second) continue;
      c.lits.push_back({v, positive_only || rng.coin()});
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace testutil
