#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "abdkit/model.hpp"

namespace abdkit {

using BigCount = boost::multiprecision::cpp_int;

enum class CountKind { Full, PositiveAll, PositiveMinimal };

struct CountResult {
  BigCount value;
  std::string method;  // "closed-form" | "brute-force"
};

// Full explanations of a symmetric instance. Closed forms for [B] ⊆ E, N
// (forced literals) and [B] ⊆ L (solution-space dimensions) with a positive
// literal manifestation; brute force elsewhere.
CountResult count_full_explanations(const Instance& p);

// Positive explanations (all, or only the subset-minimal ones). Closed form
// for [B] ⊆ M: 0 or 2^|A| (minimal: 0 or 1); brute force elsewhere.
CountResult count_positive_explanations(const Instance& p, bool minimal_only);

// Exhaustive oracle; |A| <= 12, <= 20 variables.
CountResult count_brute_force(const Instance& p, CountKind kind);

}  // namespace abdkit
