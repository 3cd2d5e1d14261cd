#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abdkit/model.hpp"

namespace abdkit {

enum class GenKind {
  TwoInThree,     // 2-in-3-SAT reduction: NP-hard symmetric PQ instances
  ThreeSatTerm,   // 3SAT reduction: positive-term manifestations over V
  Qsat2,          // QSAT_2 reduction: Sigma2P-hard B-formula manifestations
  LinearSystem,   // GF(2) system reduction: affine instances, A = empty
  Pos2SatCount,   // #POS2SAT Turing reduction: counting instances
  Pi1Count,       // Pi1-model-counting reduction: parsimonious instances
  Unsat3CnfPos,   // co-3SAT reduction: positive instances over S0
  Taut3DnfPos,    // 3DNF-tautology reduction: positive B-formula instances
  Random,         // seeded profile-based random instances
};

std::string to_string(GenKind k);

struct GenClause {
  std::vector<Literal> lits;  // a CNF clause or a DNF term, by kind
};

struct RandomProfile {
  std::string region = "BF";  // clone name; connectives drawn from its base
  int num_vars = 6;
  int num_formulas = 4;
  int max_depth = 2;
  int num_hyps = 2;
  Mode mode = Mode::Symmetric;
  ManifestationKind manifest_kind = ManifestationKind::Literal;
  std::string manifest_signs = "pos";  // pos | neg | mixed
  int manifest_size = 2;               // clause/term literal count
};

struct GenSpec {
  GenKind kind = GenKind::Random;
  std::vector<GenClause> clauses;  // CNF clauses or DNF terms
  std::vector<std::pair<std::vector<std::string>, bool>> equations;
  std::vector<std::string> exists_vars;
  std::vector<std::string> forall_vars;
  std::vector<std::string> free_vars;
  uint64_t seed = 1;
  RandomProfile profile;
  std::vector<BoolFun> target_b;  // empty: the kind's default base
};

struct Generated {
  Instance instance;
  std::string relation;  // the guaranteed relation, as a human-readable note
};

// Builds the instance of the cited construction over the requested
// connective set (connectives replaced by their B-representations).
Generated generate(const GenSpec& spec);

// Reproducible random instance within the profile's clone region.
Instance gen_random(uint64_t seed, const RandomProfile& profile);

// Text format: kind/seed/region/... directives, `c <lit>...` clause lines,
// `t <lit>...` term lines, `eq <var>... = 0|1`, `fun <name> <arity> <bits>`.
GenSpec parse_genspec(std::string_view text);

}  // namespace abdkit
