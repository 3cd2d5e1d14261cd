#include "abdkit/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace abdkit {

BoolFun::BoolFun(std::string name, int arity, std::vector<uint8_t> table)
    : name_(std::move(name)), arity_(arity), table_(std::move(table)) {
  if (arity_ < 0 || arity_ > kMaxArity) {
    throw ValidationError("function '" + name_ + "': arity " +
                          std::to_string(arity_) + " out of range 0.." +
                          std::to_string(kMaxArity));
  }
  if (table_.size() != (std::size_t{1} << arity_)) {
    throw ValidationError("function '" + name_ + "': table has " +
                          std::to_string(table_.size()) + " entries, expected " +
                          std::to_string(std::size_t{1} << arity_));
  }
  for (auto& b : table_) b = b ? 1 : 0;
}

BoolFun BoolFun::from_bits(std::string name, int arity, std::string_view bits) {
  if (arity < 0 || arity > kMaxArity) {
    throw ValidationError("function '" + name + "': arity " +
                          std::to_string(arity) + " out of range 0.." +
                          std::to_string(kMaxArity));
  }
  if (bits.size() != (std::size_t{1} << arity)) {
    throw ValidationError("function '" + name + "': bit string length " +
                          std::to_string(bits.size()) + ", expected " +
                          std::to_string(std::size_t{1} << arity));
  }
  std::vector<uint8_t> table;
  table.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw ParseError("function '" + name + "': table must be 0/1 bits");
    }
    table.push_back(c == '1');
  }
  return BoolFun(std::move(name), arity, std::move(table));
}

std::string BoolFun::bits() const {
  std::string s;
  s.reserve(table_.size());
  for (uint8_t b : table_) s.push_back(b ? '1' : '0');
  return s;
}

bool BoolFun::apply(std::span<const bool> args) const {
  if (static_cast<int>(args.size()) != arity_) {
    throw InternalError("function '" + name_ + "' applied to " +
                        std::to_string(args.size()) + " arguments");
  }
  unsigned row = 0;
  for (bool a : args) row = (row << 1) | (a ? 1u : 0u);
  return value(row);
}

Formula Formula::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->var = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::apply(FunPtr fun, std::vector<Formula> children) {
  if (!fun) throw InternalError("Formula::apply: null function");
  if (static_cast<int>(children.size()) != fun->arity()) {
    throw ValidationError("function '" + fun->name() + "' expects " +
                          std::to_string(fun->arity()) + " arguments, got " +
                          std::to_string(children.size()));
  }
  auto node = std::make_shared<Node>();
  node->fun = std::move(fun);
  node->kids = std::move(children);
  return Formula(std::move(node));
}

const std::string& Formula::var_name() const {
  if (!is_var()) throw InternalError("var_name() on application node");
  return node_->var;
}

const FunPtr& Formula::fun() const {
  if (!is_apply()) throw InternalError("fun() on variable node");
  return node_->fun;
}

std::span<const Formula> Formula::children() const { return node_->kids; }

bool Formula::evaluate(const Assignment& a) const {
  if (is_var()) {
    auto it = a.find(node_->var);
    if (it == a.end()) throw ValidationError("unbound variable '" + node_->var + "'");
    return it->second;
  }
  unsigned row = 0;
  for (const Formula& kid : node_->kids) row = (row << 1) | (kid.evaluate(a) ? 1u : 0u);
  return node_->fun->value(row);
}

Formula Formula::substitute(const Formula& target, const Formula& replacement) const {
  if (!target.is_var() && !target.is_constant()) {
    throw ValidationError("substitution target must be a variable or constant");
  }
  if (*this == target) return replacement;
  if (is_var()) return *this;
  bool changed = false;
  std::vector<Formula> kids;
  kids.reserve(node_->kids.size());
  for (const Formula& kid : node_->kids) {
    Formula s = kid.substitute(target, replacement);
    if (s != kid) changed = true;
    kids.push_back(std::move(s));
  }
  if (!changed) return *this;
  return Formula::apply(node_->fun, std::move(kids));
}

Formula Formula::substitute_vars(const std::map<std::string, Formula>& map) const {
  if (is_var()) {
    auto it = map.find(node_->var);
    return it == map.end() ? *this : it->second;
  }
  if (node_->kids.empty()) return *this;
  bool changed = false;
  std::vector<Formula> kids;
  kids.reserve(node_->kids.size());
  for (const Formula& kid : node_->kids) {
    Formula s = kid.substitute_vars(map);
    if (s != kid) changed = true;
    kids.push_back(std::move(s));
  }
  if (!changed) return *this;
  return Formula::apply(node_->fun, std::move(kids));
}

std::set<std::string> Formula::vars() const {
  std::set<std::string> out;
  collect_vars(out);
  return out;
}

void Formula::collect_vars(std::set<std::string>& out) const {
  if (is_var()) {
    out.insert(node_->var);
    return;
  }
  for (const Formula& kid : node_->kids) kid.collect_vars(out);
}

std::string Formula::to_string() const {
  if (is_var()) return node_->var;
  std::string s = "(" + node_->fun->name();
  for (const Formula& kid : node_->kids) {
    s += ' ';
    s += kid.to_string();
  }
  s += ')';
  return s;
}

int Formula::node_count() const {
  if (is_var()) return 1;
  int n = 1;
  for (const Formula& kid : node_->kids) n += kid.node_count();
  return n;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (is_var() != other.is_var()) return false;
  if (is_var()) return node_->var == other.node_->var;
  if (node_->fun != other.node_->fun &&
      !(node_->fun->name() == other.node_->fun->name() &&
        node_->fun->same_table(*other.node_->fun))) {
    return false;
  }
  if (node_->kids.size() != other.node_->kids.size()) return false;
  for (std::size_t i = 0; i < node_->kids.size(); ++i) {
    if (node_->kids[i] != other.node_->kids[i]) return false;
  }
  return true;
}

const FunPtr& FunctionSet::add(BoolFun f) {
  if (by_name_.count(f.name())) {
    throw ValidationError("duplicate function name '" + f.name() + "'");
  }
  auto ptr = std::make_shared<const BoolFun>(std::move(f));
  funs_.push_back(ptr);
  by_name_.emplace(ptr->name(), ptr);
  return funs_.back();
}

FunPtr FunctionSet::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : it->second;
}

bool FunctionSet::contains_table(const BoolFun& f) const {
  return std::any_of(funs_.begin(), funs_.end(),
                     [&](const FunPtr& g) { return g->same_table(f); });
}

void KnowledgeBase::add_formula(Formula f) {
  for (const Formula& g : formulas_) {
    if (g == f) return;
  }
  formulas_.push_back(std::move(f));
}

std::set<std::string> KnowledgeBase::vars() const {
  std::set<std::string> out;
  for (const Formula& f : formulas_) f.collect_vars(out);
  return out;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct SexprParser {
  std::string_view text;
  std::size_t pos = 0;
  const FunctionSet& funs;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos) + " in '" +
                     std::string(text) + "'");
  }

  std::string ident() {
    if (pos >= text.size() || !is_ident_start(text[pos])) fail("expected identifier");
    std::size_t start = pos;
    while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  Formula expr() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      skip_ws();
      std::string name = ident();
      FunPtr f = funs.find(name);
      if (!f) fail("unknown function '" + name + "'");
      std::vector<Formula> kids;
      for (int i = 0; i < f->arity(); ++i) kids.push_back(expr());
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') {
        fail("expected ')' closing '" + name + "'");
      }
      ++pos;
      return Formula::apply(std::move(f), std::move(kids));
    }
    return Formula::var(ident());
  }
};

}  // namespace

Formula parse_formula(std::string_view text, const FunctionSet& funs) {
  SexprParser p{text, 0, funs};
  Formula f = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

CompiledFormula::CompiledFormula(const Formula& f, const std::vector<std::string>& order) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
  // Iterative postorder flatten.
  struct Frame {
    const Formula* f;
    bool expanded;
  };
  std::vector<Frame> stack{{&f, false}};
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    if (fr.f->is_var()) {
      auto it = index.find(fr.f->var_name());
      if (it == index.end()) {
        throw ValidationError("unbound variable '" + fr.f->var_name() + "'");
      }
      ops_.push_back({nullptr, it->second, 0});
      continue;
    }
    if (fr.expanded) {
      ops_.push_back({fr.f->fun().get(), -1,
                      static_cast<int>(fr.f->children().size())});
    } else {
      stack.push_back({fr.f, true});
      auto kids = fr.f->children();
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        stack.push_back({&*it, false});
      }
    }
  }
  int depth = 0, max_depth = 0;
  for (const Op& op : ops_) {
    depth += op.fun ? 1 - op.num_children : 1;
    max_depth = std::max(max_depth, depth);
  }
  if (max_depth > 255) throw LimitError("formula too deep for compiled evaluation");
}

bool CompiledFormula::eval_mask(uint64_t mask) const {
  // Small fixed stack; formula depth is bounded at desk scale.
  bool stack[256];
  int top = 0;
  for (const Op& op : ops_) {
    if (!op.fun) {
      stack[top++] = (mask >> op.var_index) & 1;
      continue;
    }
    unsigned row = 0;
    for (int i = op.num_children; i > 0; --i) {
      row |= (stack[top - i] ? 1u : 0u) << (i - 1);
    }
    top -= op.num_children;
    stack[top++] = op.fun->value(row);
  }
  return stack[0];
}

}  // namespace abdkit
