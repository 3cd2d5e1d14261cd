#include "abdkit/affine.hpp"

#include <algorithm>

namespace abdkit {

namespace {

void sym_diff(std::set<std::string>& into, const std::set<std::string>& other) {
  for (const std::string& v : other) {
    auto [it, inserted] = into.insert(v);
    if (!inserted) into.erase(it);
  }
}

}  // namespace

AffineNormalForm affine_normal_form(const Formula& f) {
  if (f.is_var()) return {{f.var_name()}, false};
  const BoolFun& fun = *f.fun();
  const int n = fun.arity();
  const bool c = fun.value(0);
  AffineNormalForm out;
  out.constant = c;
  // f = c XOR (XOR over args with odd coefficient); verify table.
  unsigned coef = 0;
  for (int p = 0; p < n; ++p) {
    if (fun.value(1u << p) != c) coef |= 1u << p;
  }
  const unsigned rows = 1u << n;
  for (unsigned a = 0; a < rows; ++a) {
    if (fun.value(a) != (c ^ (std::popcount(a & coef) & 1))) {
      throw ValidationError("connective '" + fun.name() + "' is not affine");
    }
  }
  for (int i = 0; i < n; ++i) {
    const int p = n - 1 - i;  // argument i sits at bit n-1-i
    if (!(coef & (1u << p))) continue;
    AffineNormalForm kid = affine_normal_form(f.children()[i]);
    out.constant ^= kid.constant;
    sym_diff(out.odd_vars, kid.odd_vars);
  }
  return out;
}

Gf2System::Gf2System(std::vector<std::string> universe) : vars_(std::move(universe)) {
  words_ = (vars_.size() + 63) / 64;
  if (words_ == 0) words_ = 1;
  for (std::size_t i = 0; i < vars_.size(); ++i) index_[vars_[i]] = static_cast<int>(i);
}

int Gf2System::index_of(const std::string& var) const {
  auto it = index_.find(var);
  if (it == index_.end()) throw InternalError("GF(2) system: unknown variable '" + var + "'");
  return it->second;
}

void Gf2System::add_equation(const std::set<std::string>& odd_vars, bool rhs) {
  Row row{std::vector<uint64_t>(words_, 0), rhs};
  for (const std::string& v : odd_vars) {
    const int i = index_of(v);
    row.coef[i / 64] ^= uint64_t{1} << (i % 64);
  }
  rows_.push_back(std::move(row));
}

void Gf2System::add_unit(const std::string& var, bool value) {
  add_equation({var}, value);
}

void Gf2System::merge(const Gf2System& other) {
  if (other.vars_ != vars_) throw InternalError("GF(2) merge: universe mismatch");
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

// Row reduction under an explicit column order.
struct Gf2Elimination {
  std::vector<Gf2System::Row> rows;
  std::size_t words;
  bool inconsistent = false;
  int rank = 0;
  std::vector<int> pivot_cols;

  Gf2Elimination(const Gf2System& sys, const std::vector<int>& column_order)
      : rows(sys.rows_), words(sys.words_) {
    const auto get = [&](const std::vector<uint64_t>& coef, int col) {
      return (coef[col / 64] >> (col % 64)) & 1;
    };
    std::size_t next_row = 0;
    for (int col : column_order) {
      std::size_t pivot = next_row;
      while (pivot < rows.size() && !get(rows[pivot].coef, col)) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[next_row], rows[pivot]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r != next_row && get(rows[r].coef, col)) {
          for (std::size_t w = 0; w < words; ++w) rows[r].coef[w] ^= rows[next_row].coef[w];
          rows[r].rhs ^= rows[next_row].rhs;
        }
      }
      pivot_cols.push_back(col);
      ++next_row;
    }
    rank = static_cast<int>(next_row);
    for (std::size_t r = next_row; r < rows.size(); ++r) {
      bool zero = std::all_of(rows[r].coef.begin(), rows[r].coef.end(),
                              [](uint64_t w) { return w == 0; });
      if (zero && rows[r].rhs) inconsistent = true;
    }
  }
};

namespace {

std::vector<int> identity_order(std::size_t n) {
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  return order;
}

}  // namespace

bool Gf2System::consistent() const {
  return Gf2Elimination(*this, identity_order(vars_.size())).inconsistent == false;
}

std::optional<int> Gf2System::dimension() const {
  Gf2Elimination e(*this, identity_order(vars_.size()));
  if (e.inconsistent) return std::nullopt;
  return static_cast<int>(vars_.size()) - e.rank;
}

Gf2System Gf2System::project(const std::set<std::string>& keep) const {
  std::vector<int> eliminated, kept;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (keep.count(vars_[i])) {
      kept.push_back(static_cast<int>(i));
    } else {
      eliminated.push_back(static_cast<int>(i));
    }
  }
  std::vector<int> order = eliminated;
  order.insert(order.end(), kept.begin(), kept.end());
  Gf2Elimination e(*this, order);

  std::vector<std::string> new_vars;
  for (int i : kept) new_vars.push_back(vars_[i]);
  Gf2System out(new_vars);
  if (e.inconsistent) {
    out.add_equation({}, true);  // canonical empty system
    return out;
  }
  const auto get = [&](const std::vector<uint64_t>& coef, int col) {
    return (coef[col / 64] >> (col % 64)) & 1;
  };
  for (const Row& row : e.rows) {
    bool touches_eliminated = false;
    for (int col : eliminated) {
      if (get(row.coef, col)) {
        touches_eliminated = true;
        break;
      }
    }
    if (touches_eliminated) continue;
    std::set<std::string> odd;
    for (int col : kept) {
      if (get(row.coef, col)) odd.insert(vars_[col]);
    }
    if (odd.empty() && !row.rhs) continue;
    out.add_equation(odd, row.rhs);
  }
  return out;
}

std::optional<std::map<std::string, bool>> Gf2System::solve() const {
  Gf2Elimination e(*this, identity_order(vars_.size()));
  if (e.inconsistent) return std::nullopt;
  std::map<std::string, bool> out;
  for (const std::string& v : vars_) out[v] = false;
  // Reduced echelon with free variables set false: pivot value = rhs.
  for (int r = 0; r < e.rank; ++r) out[vars_[e.pivot_cols[r]]] = e.rows[r].rhs;
  return out;
}

Gf2System system_from_kb(const KnowledgeBase& kb) {
  std::set<std::string> var_set = kb.vars();
  Gf2System sys(std::vector<std::string>(var_set.begin(), var_set.end()));
  for (const Formula& f : kb.formulas()) {
    AffineNormalForm anf = affine_normal_form(f);
    sys.add_equation(anf.odd_vars, !anf.constant);
  }
  return sys;
}

}  // namespace abdkit
