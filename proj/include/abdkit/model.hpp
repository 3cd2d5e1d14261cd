#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abdkit/formula.hpp"

namespace abdkit {

struct Literal {
  std::string var;
  bool positive = true;

  bool operator==(const Literal&) const = default;
  auto operator<=>(const Literal&) const = default;
  std::string to_string() const { return positive ? var : "!" + var; }
};

Literal parse_literal(std::string_view text);  // "x" or "!x"

enum class ManifestationKind { Literal, Clause, Term, BFormula };

enum class ManifestationClass { PQ, NQ, Q, PC, NC, C, PT, NT, T, F };

std::string to_string(ManifestationClass c);
std::optional<ManifestationClass> parse_manifestation_class(std::string_view);

// The query phi: a literal, clause, term, or B-formula.
class Manifestation {
public:
  static Manifestation literal(Literal l);
  static Manifestation clause(std::vector<Literal> lits);
  static Manifestation term(std::vector<Literal> lits);
  static Manifestation formula(Formula f);

  ManifestationKind kind() const { return kind_; }
  ManifestationClass cls() const;
  const std::vector<Literal>& literals() const;
  const Formula& bformula() const;
  std::set<std::string> vars() const;
  std::string to_string() const;

  // Evaluates phi under a total assignment (oracle-side evaluation).
  bool evaluate(const Assignment& a) const;

private:
  Manifestation(ManifestationKind k, std::vector<Literal> lits,
                std::optional<Formula> f);
  ManifestationKind kind_;
  std::vector<Literal> lits_;
  std::optional<Formula> formula_;
};

enum class Mode { Symmetric, Positive };

// A validated abduction instance (Gamma, A, phi, mode).
class Instance {
public:
  // Checks A ⊆ Vars(Gamma) and Vars(phi) ⊆ Vars(Gamma) \ A.
  Instance(KnowledgeBase kb, std::set<std::string> hypotheses,
           Manifestation manifestation, Mode mode);

  const KnowledgeBase& kb() const { return kb_; }
  const std::set<std::string>& hypotheses() const { return hyps_; }
  const Manifestation& manifestation() const { return manifest_; }
  Mode mode() const { return mode_; }
  const std::set<std::string>& kb_vars() const { return kb_vars_; }

  Instance with_mode(Mode m) const { return Instance(kb_, hyps_, manifest_, m); }

private:
  KnowledgeBase kb_;
  std::set<std::string> hyps_;
  Manifestation manifest_;
  Mode mode_;
  std::set<std::string> kb_vars_;
};

// A consistent set of literals over A; in positive mode all signs positive.
class Explanation {
public:
  Explanation() = default;
  explicit Explanation(const std::vector<Literal>& lits);  // rejects conflicts

  void set(const std::string& var, bool positive);
  bool contains(const std::string& var) const { return signs_.count(var) != 0; }
  std::optional<bool> sign(const std::string& var) const;
  const std::map<std::string, bool>& signs() const { return signs_; }
  std::size_t size() const { return signs_.size(); }
  bool empty() const { return signs_.empty(); }
  bool all_positive() const;

  std::vector<Literal> literals() const;  // sorted by variable name
  std::string to_string() const;          // "{x !y}"

  bool operator==(const Explanation&) const = default;
  auto operator<=>(const Explanation&) const = default;

private:
  std::map<std::string, bool> signs_;
};

// Gamma ∧ E satisfiable and Gamma ∧ E |= phi (via the sat backend).
bool verify_explanation(const Instance& p, const Explanation& e);

// Lemma-1 constant elimination. Both return the input unchanged when the
// corresponding constant is absent.
Instance eliminate_true_constant(const Instance& p);
Instance eliminate_false_constant(const Instance& p);  // symmetric mode only

// Line-oriented instance text format:
//   fun <name> <arity> <bits> | kb <sexpr> | hyp <v>... (cumulative)
//   mode symmetric|positive | manifest literal <lit> | manifest clause <lit>+
//   manifest term <lit>+ | manifest formula <sexpr>
// '#' starts a comment; unknown directives are errors.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& p);

}  // namespace abdkit
