#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "abdkit/formula.hpp"

namespace abdkit {

// Affine normal form: the formula is equivalent to XOR of `odd_vars` plus
// `constant`. Throws ValidationError when a connective is not affine.
struct AffineNormalForm {
  std::set<std::string> odd_vars;
  bool constant = false;
};
AffineNormalForm affine_normal_form(const Formula& f);

// A linear system over GF(2) with a fixed, ordered variable universe.
class Gf2System {
public:
  explicit Gf2System(std::vector<std::string> universe);

  const std::vector<std::string>& universe() const { return vars_; }

  void add_equation(const std::set<std::string>& odd_vars, bool rhs);
  void add_unit(const std::string& var, bool value);
  void merge(const Gf2System& other);  // same universe

  bool consistent() const;
  // Solution-space dimension; nullopt when inconsistent.
  std::optional<int> dimension() const;

  // Constraints implied on `keep` (computed by eliminating the other
  // variables); the result's universe is `keep` in sorted order.
  Gf2System project(const std::set<std::string>& keep) const;

  // A solution, with free variables set to false; nullopt when inconsistent.
  std::optional<std::map<std::string, bool>> solve() const;

private:
  int index_of(const std::string& var) const;
  std::vector<std::string> vars_;
  std::map<std::string, int> index_;
  // Row: coefficient bits (one per universe variable) then the rhs bit.
  struct Row {
    std::vector<uint64_t> coef;
    bool rhs;
  };
  std::vector<Row> rows_;
  std::size_t words_;

  friend struct Gf2Elimination;
};

// Builds the system Gamma = true over sorted(Vars(Gamma)); throws when a
// connective is not affine.
Gf2System system_from_kb(const KnowledgeBase& kb);

}  // namespace abdkit
