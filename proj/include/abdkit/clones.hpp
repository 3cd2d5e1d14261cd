#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "abdkit/formula.hpp"

namespace abdkit {

inline constexpr int kSepInf = std::numeric_limits<int>::max();
inline constexpr int kDegreeInf = std::numeric_limits<int>::max();
// Finite separation levels never exceed arity - 1, so degree 7 is the cap.
inline constexpr int kMaxDegree = kMaxArity - 1;

// Truth-table properties that define the clones. sep levels are the largest
// degree k for which the function is c-separating (kSepInf when it is
// c-separating outright); the floor is 1 since no clone distinguishes below
// degree 2.
struct PropertySignature {
  bool reproduces0 = false;
  bool reproduces1 = false;
  bool monotone = false;
  bool self_dual = false;
  bool affine = false;
  int sep0_level = 1;
  int sep1_level = 1;
  bool disjunction_form = false;      // V-shape
  bool conjunction_form = false;      // E-shape
  bool unary_form = false;            // N-shape
  bool projection_or_constant = false;  // I-shape
};

enum class CloneFamily {
  BF,
  R0, R1, R2,
  M, M0, M1, M2,
  S0, S1, S02, S01, S00, S12, S11, S10,  // chain families; degree 2.. or inf
  D, D1, D2,
  L, L0, L1, L2, L3,
  V, V0, V1, V2,
  E, E0, E1, E2,
  N, N2,
  I, I0, I1, I2,
};

bool is_chain_family(CloneFamily f);

// One clone of Post's lattice. Chain families carry a degree in 2..kMaxDegree
// or kDegreeInf (the unsuperscripted clone); other families use degree 0.
struct CloneId {
  CloneFamily family;
  int degree = 0;

  std::string name() const;  // Table-1 spelling, e.g. "S00^2", "S02", "L3"
  bool operator==(const CloneId&) const = default;
  auto operator<=>(const CloneId&) const = default;
};

CloneId make_clone(CloneFamily family, int degree = 0);
std::optional<CloneId> parse_clone(std::string_view name);

// All instantiated clones: the 30 non-chain clones, the 8 chain limits, and
// the chain members at degrees 2..kMaxDegree.
const std::vector<CloneId>& clone_catalog();

PropertySignature function_properties(const BoolFun& f);

// Bit p set when flipping bit p of the input row can change the output.
// Argument i of a k-ary function sits at bit k-1-i.
unsigned essential_mask(const BoolFun& f);

BoolFun dual(const BoolFun& f);

bool clone_member(const BoolFun& f, const CloneId& c);
bool clone_member(const PropertySignature& s, const CloneId& c);

// Inclusion in Post's lattice over the instantiated catalog.
bool clone_leq(const CloneId& a, const CloneId& b);

// The unique smallest catalog clone containing every function of B.
CloneId clone_id(const std::vector<FunPtr>& b);
CloneId clone_id(const FunctionSet& b);

// Table-1 base of the clone. Chain degrees above kMaxDegree are unsupported.
std::vector<BoolFun> base_of(const CloneId& c);

// Exact synthesis of a B-formula computing `target` over variables
// x1..x_arity, iterative deepening by node count. Returns nullopt when no
// representation of size <= budget exists.
std::optional<Formula> find_representation(const FunctionSet& b,
                                           const BoolFun& target, int budget);

// Convenience catalog of common connectives used by generators and tests.
namespace fn {
BoolFun top();
BoolFun bot();
BoolFun id();
BoolFun not_();
BoolFun and_();
BoolFun or_();
BoolFun xor_();
BoolFun xnor();
BoolFun xor3();
BoolFun xnor3();
BoolFun imp();      // x -> y
BoolFun nimp();     // x AND NOT y
BoolFun maj();      // majority of three
BoolFun or_and();   // x OR (y AND z)
BoolFun or_andn();  // x OR (y AND NOT z)
BoolFun and_or();   // x AND (y OR z)
BoolFun and_orn();  // x AND (y OR NOT z)
BoolFun and_xn();   // x AND (y XOR z XOR 1)
BoolFun dbase();    // (x AND NOT y) OR (x AND NOT z) OR (NOT y AND NOT z)
BoolFun d1base();   // (x AND y) OR (x AND NOT z) OR (y AND NOT z)
BoolFun hn(int n);        // OR_i AND_{j != i} x_j, arity n+1
BoolFun dual_hn(int n);   // dual(hn): at least two of n+1
}  // namespace fn

}  // namespace abdkit
