#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace abdkit {

// Error hierarchy shared across the library. The C API maps these to codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};
class ParseError : public Error {
public:
  using Error::Error;
};
class ValidationError : public Error {
public:
  using Error::Error;
};
class LimitError : public Error {
public:
  using Error::Error;
};
class InternalError : public Error {
public:
  using Error::Error;
};

inline constexpr int kMaxArity = 8;

// A named Boolean function given by its truth table. Bit at index i is the
// value of f applied to the binary digits of i, most significant digit =
// first argument (so "0111" with arity 2 is disjunction).
class BoolFun {
public:
  BoolFun(std::string name, int arity, std::vector<uint8_t> table);

  // Parses a '0'/'1' bit string of length 2^arity.
  static BoolFun from_bits(std::string name, int arity, std::string_view bits);

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }
  const std::vector<uint8_t>& table() const { return table_; }
  std::string bits() const;

  bool value(unsigned row) const { return table_[row] != 0; }
  bool apply(std::span<const bool> args) const;

  bool same_table(const BoolFun& other) const {
    return arity_ == other.arity_ && table_ == other.table_;
  }

private:
  std::string name_;
  int arity_;
  std::vector<uint8_t> table_;
};

using FunPtr = std::shared_ptr<const BoolFun>;

using Assignment = std::map<std::string, bool>;

// Immutable formula tree: a variable leaf or an application of a BoolFun to
// exactly arity() children. Constants are 0-ary applications.
class Formula {
public:
  static Formula var(std::string name);
  static Formula apply(FunPtr fun, std::vector<Formula> children);

  bool is_var() const { return node_->fun == nullptr; }
  bool is_apply() const { return node_->fun != nullptr; }
  bool is_constant() const { return is_apply() && node_->fun->arity() == 0; }

  const std::string& var_name() const;
  const FunPtr& fun() const;
  std::span<const Formula> children() const;

  bool evaluate(const Assignment& a) const;

  // Returns this[target/replacement]; target must be a variable or constant.
  Formula substitute(const Formula& target, const Formula& replacement) const;
  // Simultaneous substitution of variables; occurrences inside replacements
  // are not rewritten again.
  Formula substitute_vars(const std::map<std::string, Formula>& map) const;

  std::set<std::string> vars() const;
  void collect_vars(std::set<std::string>& out) const;

  std::string to_string() const;
  int node_count() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

private:
  struct Node {
    FunPtr fun;  // null for variable leaves
    std::string var;
    std::vector<Formula> kids;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// The declared connective set B. Keeps declaration order; names are unique.
class FunctionSet {
public:
  FunctionSet() = default;

  const FunPtr& add(BoolFun f);  // throws ValidationError on duplicate name
  FunPtr find(const std::string& name) const;  // null when absent
  bool empty() const { return funs_.empty(); }
  std::size_t size() const { return funs_.size(); }
  const std::vector<FunPtr>& functions() const { return funs_; }

  bool contains_table(const BoolFun& f) const;

private:
  std::vector<FunPtr> funs_;
  std::map<std::string, FunPtr> by_name_;
};

// An ordered, duplicate-free set of B-formulae, identified with their
// conjunction, together with the declared connective set.
class KnowledgeBase {
public:
  KnowledgeBase() = default;
  explicit KnowledgeBase(FunctionSet funs) : funs_(std::move(funs)) {}

  // Structurally identical formulas are kept once; insertion order preserved.
  void add_formula(Formula f);

  const std::vector<Formula>& formulas() const { return formulas_; }
  const FunctionSet& functions() const { return funs_; }
  FunctionSet& functions() { return funs_; }

  std::set<std::string> vars() const;

private:
  FunctionSet funs_;
  std::vector<Formula> formulas_;
};

// S-expression syntax: leaf = identifier, application = (fname arg1 ... argk).
Formula parse_formula(std::string_view text, const FunctionSet& funs);

// Fast repeated evaluation over an indexed variable set (used by the
// truth-table oracles). Variables are looked up in `order`; evaluation takes
// a bit mask where bit i is the value of order[i].
class CompiledFormula {
public:
  CompiledFormula(const Formula& f, const std::vector<std::string>& order);
  bool eval_mask(uint64_t mask) const;

private:
  struct Op {
    const BoolFun* fun;  // null => variable load
    int var_index;
    int num_children;
  };
  std::vector<Op> ops_;  // postorder
};

}  // namespace abdkit
