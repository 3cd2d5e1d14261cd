#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abdkit/formula.hpp"
#include "abdkit/model.hpp"

namespace abdkit {

// Row-wise Tseitin encoding of connective trees: one auxiliary per Apply
// node, one clause per truth-table row.
struct CnfProblem {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;       // 1-based signed indices
  std::map<std::string, int> var_index;        // source variable -> index

  void add_formula(const Formula& f, bool asserted_value);
  void add_literal(const Literal& l);
  void reserve_source_vars(const std::set<std::string>& vars);

  // Deterministic DPLL: lowest-index branch variable, false first.
  std::optional<std::vector<bool>> solve() const;

private:
  int index_of(const std::string& var);
  int encode_node(const Formula& f);
};

// True iff Gamma ∧ extra has a model; the witness is total over Vars(Gamma)
// plus the extra literals' variables and verified by evaluation.
std::pair<bool, std::optional<Assignment>> satisfiable(
    const KnowledgeBase& kb, const std::vector<Literal>& extra);

// True iff Gamma ∧ extra ∧ ¬phi is unsatisfiable. Term manifestations are
// checked literal by literal.
bool entails(const KnowledgeBase& kb, const std::vector<Literal>& extra,
             const Manifestation& phi);

// Exhaustive oracle; <= 20 total variables.
bool brute_sat(const KnowledgeBase& kb, const std::vector<Literal>& extra);

}  // namespace abdkit
