#include "abdkit/clones.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <map>

namespace abdkit {

namespace {

// Minimum number of rows of f^{-1}(c) needed to break every coordinate
// (row a breaks coordinate p when a_p != c). No such set => c-separating.
int separation_level(const BoolFun& f, bool c) {
  const int n = f.arity();
  const unsigned size = 1u << n;
  const unsigned full = n == 0 ? 0u : (size - 1);
  std::vector<unsigned> covers;
  bool preimage_empty = true;
  unsigned covered_union = 0;
  for (unsigned a = 0; a < size; ++a) {
    if (f.value(a) != c) continue;
    preimage_empty = false;
    unsigned cv = c ? (~a & full) : (a & full);
    if (cv) covers.push_back(cv);
    covered_union |= cv;
  }
  if (preimage_empty) return kSepInf;
  if (n == 0) return 1;  // no coordinate can witness separation
  if (covered_union != full) return kSepInf;  // common c-coordinate exists
  std::vector<int> dp(size, INT_MAX);
  dp[0] = 0;
  for (unsigned mask = 0; mask < size; ++mask) {
    if (dp[mask] == INT_MAX) continue;
    for (unsigned cv : covers) {
      unsigned next = mask | cv;
      if (dp[next] > dp[mask] + 1) dp[next] = dp[mask] + 1;
    }
  }
  return std::max(1, dp[full] - 1);
}

}  // namespace

unsigned essential_mask(const BoolFun& f) {
  const int n = f.arity();
  const unsigned size = 1u << n;
  unsigned ess = 0;
  for (int p = 0; p < n; ++p) {
    for (unsigned a = 0; a < size; ++a) {
      if (f.value(a) != f.value(a ^ (1u << p))) {
        ess |= 1u << p;
        break;
      }
    }
  }
  return ess;
}

PropertySignature function_properties(const BoolFun& f) {
  const int n = f.arity();
  const unsigned size = 1u << n;
  const unsigned full = n == 0 ? 0u : (size - 1);
  PropertySignature s;
  s.reproduces0 = !f.value(0);
  s.reproduces1 = f.value(full);

  s.monotone = true;
  for (unsigned a = 0; a < size && s.monotone; ++a) {
    for (int p = 0; p < n; ++p) {
      if (!(a & (1u << p)) && f.value(a) && !f.value(a | (1u << p))) {
        s.monotone = false;
        break;
      }
    }
  }

  s.self_dual = n > 0;
  for (unsigned a = 0; a < size && s.self_dual; ++a) {
    if (f.value(a) == f.value(full ^ a)) s.self_dual = false;
  }

  s.affine = true;
  {
    const bool c = f.value(0);
    unsigned coef = 0;
    for (int p = 0; p < n; ++p) {
      if (f.value(1u << p) != c) coef |= 1u << p;
    }
    for (unsigned a = 0; a < size; ++a) {
      bool expect = c ^ (std::popcount(a & coef) & 1);
      if (f.value(a) != expect) {
        s.affine = false;
        break;
      }
    }
  }

  s.sep0_level = separation_level(f, false);
  s.sep1_level = separation_level(f, true);

  const unsigned ess = essential_mask(f);
  const bool constant = ess == 0;
  if (constant) {
    s.disjunction_form = s.conjunction_form = true;
    s.unary_form = s.projection_or_constant = true;
  } else {
    s.conjunction_form = s.disjunction_form = true;
    for (unsigned a = 0; a < size; ++a) {
      if (f.value(a) != ((a & ess) == ess)) s.conjunction_form = false;
      if (f.value(a) != ((a & ess) != 0)) s.disjunction_form = false;
      if (!s.conjunction_form && !s.disjunction_form) break;
    }
    s.unary_form = std::popcount(ess) <= 1;
    s.projection_or_constant = false;
    if (s.unary_form) {
      const int p = std::countr_zero(ess);
      s.projection_or_constant = true;
      for (unsigned a = 0; a < size; ++a) {
        if (f.value(a) != (((a >> p) & 1) != 0)) {
          s.projection_or_constant = false;
          break;
        }
      }
    }
  }
  return s;
}

BoolFun dual(const BoolFun& f) {
  const int n = f.arity();
  const unsigned size = 1u << n;
  const unsigned full = n == 0 ? 0u : (size - 1);
  std::vector<uint8_t> table(size);
  for (unsigned a = 0; a < size; ++a) table[a] = f.value(full ^ a) ? 0 : 1;
  return BoolFun("dual_" + f.name(), n, std::move(table));
}

bool is_chain_family(CloneFamily f) {
  switch (f) {
    case CloneFamily::S0:
    case CloneFamily::S1:
    case CloneFamily::S02:
    case CloneFamily::S01:
    case CloneFamily::S00:
    case CloneFamily::S12:
    case CloneFamily::S11:
    case CloneFamily::S10:
      return true;
    default:
      return false;
  }
}

namespace {

const std::map<CloneFamily, std::string>& family_names() {
  static const std::map<CloneFamily, std::string> names = {
      {CloneFamily::BF, "BF"}, {CloneFamily::R0, "R0"}, {CloneFamily::R1, "R1"},
      {CloneFamily::R2, "R2"}, {CloneFamily::M, "M"},   {CloneFamily::M0, "M0"},
      {CloneFamily::M1, "M1"}, {CloneFamily::M2, "M2"}, {CloneFamily::S0, "S0"},
      {CloneFamily::S1, "S1"}, {CloneFamily::S02, "S02"},
      {CloneFamily::S01, "S01"}, {CloneFamily::S00, "S00"},
      {CloneFamily::S12, "S12"}, {CloneFamily::S11, "S11"},
      {CloneFamily::S10, "S10"}, {CloneFamily::D, "D"},   {CloneFamily::D1, "D1"},
      {CloneFamily::D2, "D2"},   {CloneFamily::L, "L"},   {CloneFamily::L0, "L0"},
      {CloneFamily::L1, "L1"},   {CloneFamily::L2, "L2"}, {CloneFamily::L3, "L3"},
      {CloneFamily::V, "V"},     {CloneFamily::V0, "V0"}, {CloneFamily::V1, "V1"},
      {CloneFamily::V2, "V2"},   {CloneFamily::E, "E"},   {CloneFamily::E0, "E0"},
      {CloneFamily::E1, "E1"},   {CloneFamily::E2, "E2"}, {CloneFamily::N, "N"},
      {CloneFamily::N2, "N2"},   {CloneFamily::I, "I"},   {CloneFamily::I0, "I0"},
      {CloneFamily::I1, "I1"},   {CloneFamily::I2, "I2"},
  };
  return names;
}

}  // namespace

CloneId make_clone(CloneFamily family, int degree) {
  if (is_chain_family(family)) {
    if (degree != kDegreeInf && (degree < 2 || degree > kMaxDegree)) {
      throw ValidationError("chain clone degree must be 2.." +
                            std::to_string(kMaxDegree) + " or infinite");
    }
    return CloneId{family, degree};
  }
  if (degree != 0) throw ValidationError("degree only applies to S-chain clones");
  return CloneId{family, 0};
}

std::string CloneId::name() const {
  const std::string& base = family_names().at(family);
  if (is_chain_family(family) && degree != kDegreeInf) {
    return base + "^" + std::to_string(degree);
  }
  return base;
}

std::optional<CloneId> parse_clone(std::string_view name) {
  std::string base(name);
  int degree = 0;
  if (auto pos = base.find('^'); pos != std::string::npos) {
    try {
      degree = std::stoi(base.substr(pos + 1));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    base = base.substr(0, pos);
  }
  for (const auto& [fam, nm] : family_names()) {
    if (nm != base) continue;
    if (is_chain_family(fam)) {
      if (degree == 0) degree = kDegreeInf;
      if (degree != kDegreeInf && (degree < 2 || degree > kMaxDegree)) return std::nullopt;
      return CloneId{fam, degree};
    }
    if (degree != 0) return std::nullopt;
    return CloneId{fam, 0};
  }
  return std::nullopt;
}

const std::vector<CloneId>& clone_catalog() {
  static const std::vector<CloneId> catalog = [] {
    std::vector<CloneId> out;
    using F = CloneFamily;
    for (F f : {F::BF, F::R0, F::R1, F::R2, F::M, F::M0, F::M1, F::M2, F::D,
                F::D1, F::D2, F::L, F::L0, F::L1, F::L2, F::L3, F::V, F::V0,
                F::V1, F::V2, F::E, F::E0, F::E1, F::E2, F::N, F::N2, F::I,
                F::I0, F::I1, F::I2}) {
      out.push_back(CloneId{f, 0});
    }
    for (F f : {F::S0, F::S1, F::S02, F::S01, F::S00, F::S12, F::S11, F::S10}) {
      for (int d = 2; d <= kMaxDegree; ++d) out.push_back(CloneId{f, d});
      out.push_back(CloneId{f, kDegreeInf});
    }
    return out;
  }();
  return catalog;
}

bool clone_member(const PropertySignature& s, const CloneId& c) {
  const bool r2 = s.reproduces0 && s.reproduces1;
  const auto sep0_at = [&](int d) {
    return d == kDegreeInf ? s.sep0_level == kSepInf : s.sep0_level >= d;
  };
  const auto sep1_at = [&](int d) {
    return d == kDegreeInf ? s.sep1_level == kSepInf : s.sep1_level >= d;
  };
  using F = CloneFamily;
  switch (c.family) {
    case F::BF: return true;
    case F::R0: return s.reproduces0;
    case F::R1: return s.reproduces1;
    case F::R2: return r2;
    case F::M: return s.monotone;
    case F::M0: return s.monotone && s.reproduces0;
    case F::M1: return s.monotone && s.reproduces1;
    case F::M2: return s.monotone && r2;
    case F::S0: return sep0_at(c.degree);
    case F::S1: return sep1_at(c.degree);
    case F::S02: return sep0_at(c.degree) && r2;
    case F::S01: return sep0_at(c.degree) && s.monotone;
    case F::S00: return sep0_at(c.degree) && r2 && s.monotone;
    case F::S12: return sep1_at(c.degree) && r2;
    case F::S11: return sep1_at(c.degree) && s.monotone;
    case F::S10: return sep1_at(c.degree) && r2 && s.monotone;
    case F::D: return s.self_dual;
    case F::D1: return s.self_dual && r2;
    case F::D2: return s.self_dual && s.monotone;
    case F::L: return s.affine;
    case F::L0: return s.affine && s.reproduces0;
    case F::L1: return s.affine && s.reproduces1;
    case F::L2: return s.affine && r2;
    case F::L3: return s.affine && s.self_dual;
    case F::V: return s.disjunction_form;
    case F::V0: return s.disjunction_form && s.reproduces0;
    case F::V1: return s.disjunction_form && s.reproduces1;
    case F::V2: return s.disjunction_form && r2;
    case F::E: return s.conjunction_form;
    case F::E0: return s.conjunction_form && s.reproduces0;
    case F::E1: return s.conjunction_form && s.reproduces1;
    case F::E2: return s.conjunction_form && r2;
    // Table 1 prints N2 = N ∩ R2, but its stated base {¬x} generates
    // N ∩ D, which is the standard reading and the one consistent with
    // the rest of the lattice.
    case F::N: return s.unary_form;
    case F::N2: return s.unary_form && s.self_dual;
    case F::I: return s.projection_or_constant;
    case F::I0: return s.projection_or_constant && s.reproduces0;
    case F::I1: return s.projection_or_constant && s.reproduces1;
    case F::I2: return s.projection_or_constant && r2;
  }
  throw InternalError("unhandled clone family");
}

bool clone_member(const BoolFun& f, const CloneId& c) {
  return clone_member(function_properties(f), c);
}

namespace {

int catalog_index(const CloneId& c) {
  const auto& cat = clone_catalog();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (cat[i] == c) return static_cast<int>(i);
  }
  throw ValidationError("clone " + c.name() + " is not in the instantiated catalog");
}

// Separating witness set: every strict non-inclusion between catalog clones
// is witnessed by a function of arity <= 3 or by h_n / dual(h_n).
const std::vector<PropertySignature>& witness_signatures() {
  static const std::vector<PropertySignature> sigs = [] {
    std::vector<PropertySignature> out;
    for (int n = 0; n <= 3; ++n) {
      const std::size_t rows = std::size_t{1} << n;
      const std::size_t tables = std::size_t{1} << rows;
      for (std::size_t t = 0; t < tables; ++t) {
        std::vector<uint8_t> table(rows);
        for (std::size_t r = 0; r < rows; ++r) table[r] = (t >> r) & 1;
        out.push_back(function_properties(BoolFun("w", n, std::move(table))));
      }
    }
    for (int n = 3; n <= kMaxDegree; ++n) {
      out.push_back(function_properties(fn::hn(n)));
      out.push_back(function_properties(fn::dual_hn(n)));
    }
    return out;
  }();
  return sigs;
}

const std::vector<std::vector<bool>>& leq_matrix() {
  static const std::vector<std::vector<bool>> matrix = [] {
    const auto& cat = clone_catalog();
    const auto& wits = witness_signatures();
    std::vector<std::vector<bool>> m(cat.size(), std::vector<bool>(cat.size(), true));
    for (std::size_t i = 0; i < cat.size(); ++i) {
      for (std::size_t j = 0; j < cat.size(); ++j) {
        for (const PropertySignature& w : wits) {
          if (clone_member(w, cat[i]) && !clone_member(w, cat[j])) {
            m[i][j] = false;
            break;
          }
        }
      }
    }
    return m;
  }();
  return matrix;
}

}  // namespace

bool clone_leq(const CloneId& a, const CloneId& b) {
  return leq_matrix()[catalog_index(a)][catalog_index(b)];
}

CloneId clone_id(const std::vector<FunPtr>& b) {
  if (b.empty()) throw ValidationError("clone_id requires a non-empty function set");
  std::vector<PropertySignature> sigs;
  sigs.reserve(b.size());
  for (const FunPtr& f : b) sigs.push_back(function_properties(*f));

  const auto& cat = clone_catalog();
  std::vector<int> candidates;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    bool all = true;
    for (const PropertySignature& s : sigs) {
      if (!clone_member(s, cat[i])) {
        all = false;
        break;
      }
    }
    if (all) candidates.push_back(static_cast<int>(i));
  }
  const auto& m = leq_matrix();
  std::vector<int> minima;
  for (int i : candidates) {
    bool is_min = true;
    for (int j : candidates) {
      if (!m[i][j]) {
        is_min = false;
        break;
      }
    }
    if (is_min) minima.push_back(i);
  }
  if (minima.size() != 1) {
    throw InternalError("clone_id: no unique minimal clone (" +
                        std::to_string(minima.size()) + " minima) — lattice encoding bug");
  }
  return cat[minima[0]];
}

CloneId clone_id(const FunctionSet& b) { return clone_id(b.functions()); }

namespace fn {

namespace {

int arg(unsigned row, int arity, int i) { return (row >> (arity - 1 - i)) & 1; }

template <typename Fn>
BoolFun mk(std::string name, int arity, Fn&& row_fn) {
  std::vector<uint8_t> table(std::size_t{1} << arity);
  for (unsigned r = 0; r < table.size(); ++r) table[r] = row_fn(r) ? 1 : 0;
  return BoolFun(std::move(name), arity, std::move(table));
}

}  // namespace

BoolFun top() { return BoolFun("top", 0, {1}); }
BoolFun bot() { return BoolFun("bot", 0, {0}); }
BoolFun id() {
  return mk("id", 1, [](unsigned r) { return arg(r, 1, 0); });
}
BoolFun not_() {
  return mk("not", 1, [](unsigned r) { return !arg(r, 1, 0); });
}
BoolFun and_() {
  return mk("and", 2, [](unsigned r) { return arg(r, 2, 0) && arg(r, 2, 1); });
}
BoolFun or_() {
  return mk("or", 2, [](unsigned r) { return arg(r, 2, 0) || arg(r, 2, 1); });
}
BoolFun xor_() {
  return mk("xor", 2, [](unsigned r) { return arg(r, 2, 0) ^ arg(r, 2, 1); });
}
BoolFun xnor() {
  return mk("xnor", 2, [](unsigned r) { return !(arg(r, 2, 0) ^ arg(r, 2, 1)); });
}
BoolFun xor3() {
  return mk("xor3", 3, [](unsigned r) { return std::popcount(r & 7u) & 1; });
}
BoolFun xnor3() {
  return mk("xnor3", 3, [](unsigned r) { return !(std::popcount(r & 7u) & 1); });
}
BoolFun imp() {
  return mk("imp", 2, [](unsigned r) { return !arg(r, 2, 0) || arg(r, 2, 1); });
}
BoolFun nimp() {
  return mk("nimp", 2, [](unsigned r) { return arg(r, 2, 0) && !arg(r, 2, 1); });
}
BoolFun maj() {
  return mk("maj", 3, [](unsigned r) { return std::popcount(r & 7u) >= 2; });
}
BoolFun or_and() {
  return mk("orand", 3,
            [](unsigned r) { return arg(r, 3, 0) || (arg(r, 3, 1) && arg(r, 3, 2)); });
}
BoolFun or_andn() {
  return mk("orandn", 3,
            [](unsigned r) { return arg(r, 3, 0) || (arg(r, 3, 1) && !arg(r, 3, 2)); });
}
BoolFun and_or() {
  return mk("andor", 3,
            [](unsigned r) { return arg(r, 3, 0) && (arg(r, 3, 1) || arg(r, 3, 2)); });
}
BoolFun and_orn() {
  return mk("andorn", 3,
            [](unsigned r) { return arg(r, 3, 0) && (arg(r, 3, 1) || !arg(r, 3, 2)); });
}
BoolFun and_xn() {
  return mk("andxn", 3, [](unsigned r) {
    return arg(r, 3, 0) && !(arg(r, 3, 1) ^ arg(r, 3, 2));
  });
}
BoolFun dbase() {
  return mk("dbase", 3, [](unsigned r) {
    const int x = arg(r, 3, 0), y = arg(r, 3, 1), z = arg(r, 3, 2);
    return (x && !y) || (x && !z) || (!y && !z);
  });
}
BoolFun d1base() {
  return mk("d1base", 3, [](unsigned r) {
    const int x = arg(r, 3, 0), y = arg(r, 3, 1), z = arg(r, 3, 2);
    return (x && y) || (x && !z) || (y && !z);
  });
}
BoolFun hn(int n) {
  if (n < 2 || n + 1 > kMaxArity) {
    throw ValidationError("h_n degree out of supported range");
  }
  return mk("h" + std::to_string(n), n + 1,
            [n](unsigned r) { return std::popcount(r) >= n; });
}
BoolFun dual_hn(int n) {
  if (n < 2 || n + 1 > kMaxArity) {
    throw ValidationError("dual h_n degree out of supported range");
  }
  return mk("dh" + std::to_string(n), n + 1,
            [](unsigned r) { return std::popcount(r) >= 2; });
}

}  // namespace fn

std::vector<BoolFun> base_of(const CloneId& c) {
  using F = CloneFamily;
  const int d = c.degree;
  const bool fin = is_chain_family(c.family) && d != kDegreeInf;
  if (fin && (d < 2 || d > kMaxDegree)) {
    throw ValidationError("degree parameter out of supported range");
  }
  switch (c.family) {
    case F::BF: return {fn::and_(), fn::not_()};
    case F::R0: return {fn::and_(), fn::xor_()};
    case F::R1: return {fn::or_(), fn::xnor()};
    case F::R2: return {fn::or_(), fn::and_xn()};
    case F::M: return {fn::or_(), fn::and_(), fn::bot(), fn::top()};
    case F::M1: return {fn::or_(), fn::and_(), fn::top()};
    case F::M0: return {fn::or_(), fn::and_(), fn::bot()};
    case F::M2: return {fn::or_(), fn::and_()};
    case F::S0:
      return fin ? std::vector<BoolFun>{fn::imp(), fn::dual_hn(d)}
                 : std::vector<BoolFun>{fn::imp()};
    case F::S1:
      return fin ? std::vector<BoolFun>{fn::nimp(), fn::hn(d)}
                 : std::vector<BoolFun>{fn::nimp()};
    case F::S02:
      return fin ? std::vector<BoolFun>{fn::or_andn(), fn::dual_hn(d)}
                 : std::vector<BoolFun>{fn::or_andn()};
    case F::S01:
      return fin ? std::vector<BoolFun>{fn::dual_hn(d), fn::top()}
                 : std::vector<BoolFun>{fn::or_and(), fn::top()};
    case F::S00:
      return fin ? std::vector<BoolFun>{fn::or_and(), fn::dual_hn(d)}
                 : std::vector<BoolFun>{fn::or_and()};
    case F::S12:
      return fin ? std::vector<BoolFun>{fn::and_orn(), fn::hn(d)}
                 : std::vector<BoolFun>{fn::and_orn()};
    case F::S11:
      return fin ? std::vector<BoolFun>{fn::hn(d), fn::bot()}
                 : std::vector<BoolFun>{fn::and_or(), fn::bot()};
    case F::S10:
      return fin ? std::vector<BoolFun>{fn::and_or(), fn::hn(d)}
                 : std::vector<BoolFun>{fn::and_or()};
    case F::D: return {fn::dbase()};
    case F::D1: return {fn::d1base()};
    case F::D2: return {fn::maj()};
    case F::L: return {fn::xor_(), fn::top()};
    case F::L0: return {fn::xor_()};
    case F::L1: return {fn::xnor()};
    case F::L2: return {fn::xor3()};
    case F::L3: return {fn::xnor3()};
    case F::V: return {fn::or_(), fn::bot(), fn::top()};
    case F::V0: return {fn::or_(), fn::bot()};
    case F::V1: return {fn::or_(), fn::top()};
    case F::V2: return {fn::or_()};
    case F::E: return {fn::and_(), fn::bot(), fn::top()};
    case F::E0: return {fn::and_(), fn::bot()};
    case F::E1: return {fn::and_(), fn::top()};
    case F::E2: return {fn::and_()};
    case F::N: return {fn::not_(), fn::bot(), fn::top()};
    case F::N2: return {fn::not_()};
    case F::I: return {fn::id(), fn::bot(), fn::top()};
    case F::I0: return {fn::id(), fn::bot()};
    case F::I1: return {fn::id(), fn::top()};
    case F::I2: return {fn::id()};
  }
  throw InternalError("unhandled clone family");
}

std::optional<Formula> find_representation(const FunctionSet& b,
                                           const BoolFun& target, int budget) {
  if (budget < 1) throw ValidationError("representation budget must be >= 1");
  const int k = target.arity();
  const unsigned rows = 1u << k;

  using Table = std::vector<uint8_t>;
  const Table want(target.table().begin(), target.table().end());

  std::vector<FunPtr> funs = b.functions();
  std::sort(funs.begin(), funs.end(),
            [](const FunPtr& a, const FunPtr& c) { return a->name() < c->name(); });

  std::map<Table, Formula> seen;
  std::vector<std::vector<std::pair<Table, Formula>>> by_size(budget + 1);

  const auto consider = [&](Table t, Formula f, int size) -> bool {
    if (seen.count(t)) return false;
    bool hit = t == want;
    seen.emplace(t, f);
    by_size[size].emplace_back(std::move(t), std::move(f));
    return hit;
  };

  // Size 1: input variables and 0-ary connectives.
  for (int i = 0; i < k; ++i) {
    Table t(rows);
    for (unsigned r = 0; r < rows; ++r) t[r] = (r >> (k - 1 - i)) & 1;
    if (consider(std::move(t), Formula::var("x" + std::to_string(i + 1)), 1)) {
      return seen.at(want);
    }
  }
  for (const FunPtr& f : funs) {
    if (f->arity() != 0) continue;
    Table t(rows, f->value(0) ? 1 : 0);
    if (consider(std::move(t), Formula::apply(f, {}), 1)) return seen.at(want);
  }

  // Ordered compositions of `total` into m positive parts, lexicographic.
  const auto compositions = [](int total, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(m);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
      if (pos == m - 1) {
        cur[pos] = rem;
        out.push_back(cur);
        return;
      }
      for (int v = 1; v <= rem - (m - 1 - pos); ++v) {
        cur[pos] = v;
        self(self, pos + 1, rem - v);
      }
    };
    if (total >= m) rec(rec, 0, total);
    return out;
  };

  for (int size = 2; size <= budget; ++size) {
    for (const FunPtr& f : funs) {
      const int m = f->arity();
      if (m == 0 || m > size - 1) continue;
      for (const std::vector<int>& parts : compositions(size - 1, m)) {
        bool feasible = true;
        for (int p : parts) {
          if (by_size[p].empty()) {
            feasible = false;
            break;
          }
        }
        if (!feasible) continue;
        std::vector<std::size_t> idx(m, 0);
        while (true) {
          Table t(rows);
          for (unsigned r = 0; r < rows; ++r) {
            unsigned row = 0;
            for (int i = 0; i < m; ++i) {
              row = (row << 1) | by_size[parts[i]][idx[i]].first[r];
            }
            t[r] = f->value(row) ? 1 : 0;
          }
          if (!seen.count(t)) {
            std::vector<Formula> kids;
            kids.reserve(m);
            for (int i = 0; i < m; ++i) {
              kids.push_back(by_size[parts[i]][idx[i]].second);
            }
            if (consider(std::move(t), Formula::apply(f, std::move(kids)), size)) {
              return seen.at(want);
            }
          }
          int pos = m - 1;
          while (pos >= 0 && ++idx[pos] == by_size[parts[pos]].size()) {
            idx[pos] = 0;
            --pos;
          }
          if (pos < 0) break;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace abdkit
