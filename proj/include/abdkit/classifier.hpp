#pragma once

#include <optional>
#include <string>

#include "abdkit/clones.hpp"
#include "abdkit/counting.hpp"
#include "abdkit/model.hpp"

namespace abdkit {

enum class ComplexityClass {
  None,  // no hardness bound recorded
  LogSpace,
  ParityL,
  P,
  NP,
  CoNP,
  Sigma2P,
  FP,
  SharpP,
  SharpCoNP,
};

std::string to_string(ComplexityClass c);

struct Verdict {
  ComplexityClass membership = ComplexityClass::None;
  ComplexityClass hardness = ComplexityClass::None;
  bool complete = false;
  std::optional<std::string> note;

  std::string to_json() const;
  std::string to_text() const;  // e.g. "Sigma2P-complete", "in P, ParityL-hard"
};

// Decision-problem verdict by (clone, mode, manifestation class).
Verdict classify_decision(const CloneId& c, Mode mode, ManifestationClass cls);

// Counting verdict; only positive-literal manifestations are classified.
Verdict classify_counting(const CloneId& c, Mode mode, CountKind variant);

// Rank in the hardness order L <= ParityL <= P <= NP/coNP <= Sigma2P
// (counting: FP <= #P <= #coNP); used by the lattice-monotonicity checks.
int hardness_rank(ComplexityClass c);

}  // namespace abdkit
