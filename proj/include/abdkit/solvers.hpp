#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "abdkit/clones.hpp"
#include "abdkit/model.hpp"

namespace abdkit {

enum class Algorithm { Auto, Generic, Monotone, Affine, Syntactic, Brute };

std::string to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view s);

struct SolveResult {
  bool has_explanation = false;
  std::optional<Explanation> witness;
  std::string algorithm_used;
};

// Auto dispatch picks the per-clone algorithm; forcing an algorithm whose
// clone precondition fails is an error.
SolveResult solve(const Instance& p, Algorithm algorithm = Algorithm::Auto);

// Forced-literal procedure for [B] ⊆ E or N, clause search for [B] ⊆ V.
SolveResult solve_syntactic(const Instance& p);
// GF(2) solution-space projection for [B] ⊆ L.
SolveResult solve_affine(const Instance& p);
// Full-candidate search with polynomial-time verification for [B] ⊆ M;
// in positive mode the single-candidate test for [B] ⊆ M or ⊆ R1.
SolveResult solve_monotone(const Instance& p);
// Complete guess-and-check over full candidates (subsets in positive mode).
SolveResult solve_generic(const Instance& p);
// Positive-mode dispatch (single-candidate, affine subset search, generic).
SolveResult solve_positive(const Instance& p);

// All explanations in lexicographic order (variables in sorted A order;
// per variable absent < positive < negative). The callback returns false to
// stop early. Tractable clones (⊆ L, E, V) use self-reducible descent.
void enumerate_explanations(const Instance& p,
                            const std::function<bool(const Explanation&)>& emit);
std::vector<Explanation> enumerate_explanations(const Instance& p);

// Exhaustive truth-table oracle, independent of the sat backend.
// |A| <= 12 and <= 20 total variables.
std::vector<Explanation> brute_force_explanations(const Instance& p, bool full_only);

// Clone of the declared connective set; empty B acts as the projection clone.
CloneId instance_clone(const Instance& p);

}  // namespace abdkit
