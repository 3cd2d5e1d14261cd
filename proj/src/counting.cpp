#include "abdkit/counting.hpp"

#include <algorithm>

#include "abdkit/affine.hpp"
#include "abdkit/clones.hpp"
#include "abdkit/solvers.hpp"
#include "normal_forms.hpp"

namespace abdkit {

namespace {

bool leq(const CloneId& c, CloneFamily fam) { return clone_leq(c, make_clone(fam)); }

BigCount pow2(int exp) { return BigCount(1) << exp; }

// Forced-literal count for [B] ⊆ E or N with a positive literal query: 0
// unless Gamma is satisfiable and forces q; otherwise every hypothesis not
// pinned by the forced literals is free in a full explanation.
BigCount forced_literal_count(const Instance& p) {
  detail::ForcedLits forced = detail::forced_from_kb(p.kb());
  if (forced.unsat) return 0;
  const Literal& q = p.manifestation().literals()[0];
  auto it = forced.lits.find(q.var);
  if (it == forced.lits.end() || it->second != q.positive) return 0;
  int free_hyps = 0;
  for (const std::string& v : p.hypotheses()) {
    if (!forced.lits.count(v)) ++free_hyps;
  }
  return pow2(free_hyps);
}

// 2^d1 - 2^d0 where d1 = dim proj_A(solutions), d0 the same under q = 0.
BigCount affine_full_count(const Instance& p) {
  Gf2System sys = system_from_kb(p.kb());
  const std::set<std::string>& a = p.hypotheses();
  const Literal& q = p.manifestation().literals()[0];

  Gf2System proj = sys.project(a);
  auto d1 = proj.dimension();
  if (!d1) return 0;

  Gf2System sys0 = sys;
  sys0.add_unit(q.var, !q.positive);
  Gf2System proj0 = sys0.project(a);
  auto d0 = proj0.dimension();

  BigCount count = pow2(*d1);
  if (d0) count -= pow2(*d0);
  return count;
}

}  // namespace

CountResult count_full_explanations(const Instance& p) {
  if (p.mode() != Mode::Symmetric) {
    throw ValidationError("full-explanation counting applies to symmetric instances");
  }
  if (p.manifestation().cls() == ManifestationClass::PQ) {
    const CloneId c = instance_clone(p);
    if (leq(c, CloneFamily::E) || leq(c, CloneFamily::N)) {
      return {forced_literal_count(p), "closed-form"};
    }
    if (leq(c, CloneFamily::L)) {
      return {affine_full_count(p), "closed-form"};
    }
  }
  return count_brute_force(p, CountKind::Full);
}

CountResult count_positive_explanations(const Instance& p, bool minimal_only) {
  if (p.mode() != Mode::Positive) {
    throw ValidationError("positive-explanation counting applies to positive instances");
  }
  const CloneId c = instance_clone(p);
  if (leq(c, CloneFamily::M)) {
    // A is an explanation iff all subsets of A are explanations.
    Explanation a;
    for (const std::string& v : p.hypotheses()) a.set(v, true);
    if (!verify_explanation(p, a)) return {0, "closed-form"};
    if (minimal_only) return {1, "closed-form"};
    return {pow2(static_cast<int>(p.hypotheses().size())), "closed-form"};
  }
  return count_brute_force(p, minimal_only ? CountKind::PositiveMinimal
                                           : CountKind::PositiveAll);
}

CountResult count_brute_force(const Instance& p, CountKind kind) {
  switch (kind) {
    case CountKind::Full: {
      std::vector<Explanation> all = brute_force_explanations(p, true);
      return {BigCount(all.size()), "brute-force"};
    }
    case CountKind::PositiveAll: {
      if (p.mode() != Mode::Positive) {
        throw ValidationError("positive counting kinds require a positive instance");
      }
      std::vector<Explanation> all = brute_force_explanations(p, false);
      return {BigCount(all.size()), "brute-force"};
    }
    case CountKind::PositiveMinimal: {
      if (p.mode() != Mode::Positive) {
        throw ValidationError("positive counting kinds require a positive instance");
      }
      std::vector<Explanation> all = brute_force_explanations(p, false);
      std::size_t minimal = 0;
      for (const Explanation& e : all) {
        bool has_smaller = false;
        for (const Explanation& other : all) {
          if (other.size() >= e.size() || has_smaller) continue;
          bool subset = std::all_of(
              other.signs().begin(), other.signs().end(), [&](const auto& kv) {
                auto s = e.sign(kv.first);
                return s && *s == kv.second;
              });
          if (subset) has_smaller = true;
        }
        if (!has_smaller) ++minimal;
      }
      return {BigCount(minimal), "brute-force"};
    }
  }
  throw InternalError("unhandled count kind");
}

}  // namespace abdkit
