#include <doctest.h>

#include "abdkit/solvers.hpp"
#include "test_util.hpp"

using namespace abdkit;
using testutil::make_instance;
using testutil::ref_explanations;

namespace {

// Profiles covering the dispatch regions, modes, and manifestation classes.
RandomProfile profile_for(uint64_t seed) {
  static const std::vector<std::string> regions{
      "E2", "E", "N2", "N", "V2", "V", "L0", "L1", "L2", "L3", "L",
      "M2", "M", "S00", "S10", "D2", "S02", "S0", "D1", "BF", "R1", "I1"};
  RandomProfile p;
  p.region = regions[seed % regions.size()];
  p.num_vars = 4 + static_cast<int>(seed % 4);      // <= 7
  p.num_formulas = 2 + static_cast<int>(seed % 3);  // <= 4
  p.num_hyps = 1 + static_cast<int>(seed % 4);      // <= 4
  p.max_depth = 2;
  p.mode = (seed / 2) % 2 ? Mode::Symmetric : Mode::Positive;
  switch ((seed / 3) % 4) {
    case 0: p.manifest_kind = ManifestationKind::Literal; break;
    case 1: p.manifest_kind = ManifestationKind::Clause; break;
    case 2: p.manifest_kind = ManifestationKind::Term; break;
    default: p.manifest_kind = ManifestationKind::BFormula; break;
  }
  p.manifest_signs = (seed / 5) % 3 == 0 ? "pos" : (seed / 5) % 3 == 1 ? "neg" : "mixed";
  p.manifest_size = 1 + static_cast<int>(seed % 2);
  return p;
}

}  // namespace

TEST_CASE("auto dispatch on the running examples") {
  Instance p1 = make_instance("fun or 2 0111\nkb (or x q)\nhyp x\nmanifest literal q\n");
  SolveResult r1 = solve(p1);
  CHECK(r1.has_explanation);
  CHECK(r1.algorithm_used == "syntactic");
  REQUIRE(r1.witness.has_value());
  CHECK(r1.witness->to_string() == "{!x}");
  CHECK(verify_explanation(p1, *r1.witness));

  Instance p2 = make_instance("fun and 2 0001\nkb (and x q)\nhyp x\nmanifest literal q\n");
  SolveResult r2 = solve(p2);
  CHECK(r2.has_explanation);
  REQUIRE(r2.witness.has_value());
  CHECK(r2.witness->empty());  // Gamma already forces q

  Instance p3 = p1.with_mode(Mode::Positive);
  SolveResult r3 = solve(p3);
  CHECK_FALSE(r3.has_explanation);
}

TEST_CASE("syntactic solver: forced literals") {
  Instance p = make_instance(
      "fun not 1 10\nkb (not x)\nkb q\nhyp x\nmanifest literal q\n");
  SolveResult r = solve_syntactic(p);
  CHECK(r.has_explanation);
  CHECK(r.witness->empty());

  Instance p2 = make_instance(
      "fun or 2 0111\nkb (or q x)\nkb (or x x)\nhyp x\nmanifest literal q\n");
  CHECK_FALSE(solve_syntactic(p2).has_explanation);

  Instance p3 = make_instance("fun or 2 0111\nkb (or q x)\nhyp x\nmanifest literal q\n");
  SolveResult r3 = solve_syntactic(p3);
  CHECK(r3.has_explanation);
  CHECK(r3.witness->to_string() == "{!x}");

  // Clone precondition.
  Instance bf = make_instance(
      "fun and 2 0001\nfun not 1 10\nkb (and x (not q))\nhyp x\nmanifest literal q\n");
  CHECK_THROWS_AS(solve_syntactic(bf), ValidationError);
}

TEST_CASE("affine solver") {
  Instance p1 = make_instance(
      "fun xor 2 0110\nkb (xor x y)\nkb (xor y q)\nhyp x\nmanifest literal q\n");
  SolveResult r1 = solve_affine(p1);
  CHECK(r1.has_explanation);
  CHECK(r1.witness->to_string() == "{x}");

  Instance p2 = make_instance("fun xor 2 0110\nkb (xor x q)\nhyp x\nmanifest literal q\n");
  SolveResult r2 = solve_affine(p2);
  CHECK(r2.has_explanation);
  CHECK(r2.witness->to_string() == "{!x}");

  Instance p3 = make_instance(
      "fun xor3 3 01101001\nkb (xor3 x y q)\nhyp x\nmanifest literal q\n");
  CHECK_FALSE(solve_affine(p3).has_explanation);

  Instance notaffine =
      make_instance("fun or 2 0111\nkb (or x q)\nhyp x\nmanifest literal q\n");
  CHECK_THROWS_AS(solve_affine(notaffine), ValidationError);
}

TEST_CASE("monotone solver") {
  Instance p1 = make_instance(
      "fun or 2 0111\nkb (or x q)\nkb (or y q)\nhyp x y\nmanifest literal q\n");
  SolveResult r1 = solve_monotone(p1);
  CHECK(r1.has_explanation);
  CHECK(verify_explanation(p1, *r1.witness));
  CHECK(r1.witness->size() == 2);  // the search works over full candidates

  Instance p2 = make_instance("fun and 2 0001\nkb (and x q)\nhyp x\nmanifest literal q\n");
  SolveResult r2 = solve_monotone(p2);
  CHECK(r2.has_explanation);
  CHECK(verify_explanation(p2, *r2.witness));

  // Negative manifestations over monotone bases are trivially unsolvable.
  Instance neg = make_instance(
      "fun or 2 0111\nkb (or x q)\nhyp x\nmanifest literal !q\n");
  CHECK_FALSE(solve_monotone(neg).has_explanation);

  Instance affine = make_instance("fun xor 2 0110\nkb (xor x q)\nhyp x\nmanifest literal q\n");
  CHECK_THROWS_AS(solve_monotone(affine), ValidationError);
}

TEST_CASE("generic solver") {
  Instance p1 = make_instance("fun or 2 0111\nkb q\nmanifest literal q\n");
  SolveResult r1 = solve_generic(p1);
  CHECK(r1.has_explanation);
  CHECK(r1.witness->empty());

  Instance p2 = make_instance("fun not 1 10\nkb (not q)\nmanifest literal q\n");
  CHECK_FALSE(solve_generic(p2).has_explanation);
}

TEST_CASE("positive solver") {
  Instance p1 = make_instance(
      "fun and 2 0001\nkb (and x q)\nhyp x\nmode positive\nmanifest literal q\n");
  SolveResult r1 = solve_positive(p1);
  CHECK(r1.has_explanation);
  CHECK(verify_explanation(p1, *r1.witness));

  Instance p2 = make_instance(
      "fun or 2 0111\nkb (or x q)\nhyp x\nmode positive\nmanifest literal q\n");
  CHECK_FALSE(solve_positive(p2).has_explanation);

  Instance p3 = make_instance(
      "fun xor 2 0110\nkb (xor x q)\nhyp x\nmode positive\nmanifest literal q\n");
  CHECK_FALSE(solve_positive(p3).has_explanation);

  CHECK_THROWS_AS(solve_positive(p1.with_mode(Mode::Symmetric)), ValidationError);
}

TEST_CASE("forced algorithms reject mismatched clones") {
  Instance p = make_instance(
      "fun and 2 0001\nfun not 1 10\nkb (and x (not (and x q)))\nhyp x\n"
      "manifest literal q\n");
  CHECK_THROWS_AS(solve(p, Algorithm::Syntactic), ValidationError);
  CHECK_THROWS_AS(solve(p, Algorithm::Affine), ValidationError);
  CHECK_THROWS_AS(solve(p, Algorithm::Monotone), ValidationError);
  CHECK(solve(p, Algorithm::Generic).algorithm_used == "generic");
  CHECK(solve(p, Algorithm::Brute).algorithm_used == "brute");
}

TEST_CASE("oracle agreement across regions, modes, and classes") {
  int disagreements = 0;
  for (uint64_t seed = 1; seed <= 1000; ++seed) {
    Instance p = gen_random(seed, profile_for(seed));
    SolveResult r = solve(p);
    const bool oracle = !brute_force_explanations(p, false).empty();
    if (r.has_explanation != oracle) {
      ++disagreements;
      MESSAGE("disagreement at seed ", seed, ": ", serialize_instance(p));
    }
    if (r.has_explanation) CHECK(verify_explanation(p, *r.witness));
  }
  CHECK(disagreements == 0);
}

TEST_CASE("tractable paths agree with the generic solver") {
  const auto battery = [](const std::vector<std::string>& regions, auto&& specialized,
                          Mode mode, int rounds) {
    int ran = 0;
    for (uint64_t seed = 1; ran < rounds; ++seed) {
      RandomProfile p;
      p.region = regions[seed % regions.size()];
      p.num_vars = 4 + static_cast<int>(seed % 3);
      p.num_formulas = 2 + static_cast<int>(seed % 3);
      p.num_hyps = 1 + static_cast<int>(seed % 3);
      p.mode = mode;
      p.manifest_kind = seed % 3 == 0 ? ManifestationKind::Clause
                                      : ManifestationKind::Literal;
      p.manifest_signs = seed % 5 == 0 ? "neg" : "pos";
      Instance inst = gen_random(seed, p);
      SolveResult fast = specialized(inst);
      SolveResult slow = solve_generic(inst);
      CHECK(fast.has_explanation == slow.has_explanation);
      if (fast.has_explanation) CHECK(verify_explanation(inst, *fast.witness));
      ++ran;
    }
  };
  battery({"L0", "L1", "L2", "L3", "L"}, [](const Instance& p) { return solve_affine(p); },
          Mode::Symmetric, 300);
  battery({"M2", "M", "S00", "D2", "S10"},
          [](const Instance& p) { return solve_monotone(p); }, Mode::Symmetric, 300);
  battery({"E2", "E", "N2", "N", "V2", "V"},
          [](const Instance& p) { return solve_syntactic(p); }, Mode::Symmetric, 300);
}

TEST_CASE("positive mode: existence iff A is a solution (clone in M or R1)") {
  static const std::vector<std::string> regions{"M2", "M", "V", "E", "S00",
                                                "D2", "S02", "S0", "R1", "L1"};
  for (uint64_t seed = 1; seed <= 300; ++seed) {
    RandomProfile p;
    p.region = regions[seed % regions.size()];
    p.num_vars = 4 + static_cast<int>(seed % 3);
    p.num_formulas = 2 + static_cast<int>(seed % 3);
    p.num_hyps = 1 + static_cast<int>(seed % 3);
    p.mode = Mode::Positive;
    p.manifest_signs = seed % 7 == 0 ? "neg" : "pos";
    Instance inst = gen_random(seed, p);
    Explanation a;
    for (const std::string& v : inst.hypotheses()) a.set(v, true);
    CHECK(solve_positive(inst).has_explanation == verify_explanation(inst, a));
  }
}

TEST_CASE("negative manifestations over monotone bases are trivially no") {
  static const std::vector<std::string> regions{"M2", "M", "V2", "E", "S00", "D2"};
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    RandomProfile p;
    p.region = regions[seed % regions.size()];
    p.num_vars = 4;
    p.num_formulas = 3;
    p.num_hyps = 2;
    p.manifest_signs = "neg";
    p.manifest_kind = seed % 3 == 0   ? ManifestationKind::Literal
                      : seed % 3 == 1 ? ManifestationKind::Clause
                                      : ManifestationKind::Term;
    Instance inst = gen_random(seed, p);
    CHECK_FALSE(solve(inst).has_explanation);
    CHECK(brute_force_explanations(inst, false).empty());
  }
}

TEST_CASE("enumeration is lexicographic and matches the oracle") {
  const auto lex_key = [](const Explanation& e, const std::vector<std::string>& avars) {
    std::vector<int> key;
    for (const std::string& v : avars) {
      auto s = e.sign(v);
      key.push_back(!s ? 0 : (*s ? 1 : 2));
    }
    return key;
  };
  for (uint64_t seed = 1; seed <= 300; ++seed) {
    Instance p = gen_random(seed, profile_for(seed));
    std::vector<std::string> avars(p.hypotheses().begin(), p.hypotheses().end());
    std::vector<Explanation> got = enumerate_explanations(p);
    for (std::size_t i = 1; i < got.size(); ++i) {
      CHECK(lex_key(got[i - 1], avars) < lex_key(got[i], avars));
    }
    std::vector<Explanation> want = ref_explanations(p, false);
    std::set<Explanation> got_set(got.begin(), got.end());
    std::set<Explanation> want_set(want.begin(), want.end());
    REQUIRE_MESSAGE(got_set == want_set, "seed ", seed, "\n", serialize_instance(p));
  }
}

TEST_CASE("enumeration callback stops on demand") {
  Instance p = make_instance("fun and 2 0001\nkb (and x q)\nhyp x\nmanifest literal q\n");
  int seen = 0;
  enumerate_explanations(p, [&](const Explanation&) {
    ++seen;
    return false;
  });
  CHECK(seen == 1);
}

TEST_CASE("enumeration of the spec examples") {
  Instance p1 = make_instance("fun or 2 0111\nkb (or x q)\nhyp x\nmanifest literal q\n");
  std::vector<Explanation> e1 = enumerate_explanations(p1);
  REQUIRE(e1.size() == 1);
  CHECK(e1[0].to_string() == "{!x}");

  Instance p2 = make_instance("fun and 2 0001\nkb (and x q)\nhyp x\nmanifest literal q\n");
  std::vector<Explanation> e2 = enumerate_explanations(p2);
  REQUIRE(e2.size() == 2);
  CHECK(e2[0].to_string() == "{}");
  CHECK(e2[1].to_string() == "{x}");

  Instance p3 = make_instance("fun not 1 10\nkb (not q)\nmanifest literal q\n");
  CHECK(enumerate_explanations(p3).empty());
}

TEST_CASE("brute force explanations") {
  Instance p1 = make_instance("fun or 2 0111\nkb (or x q)\nhyp x\nmanifest literal q\n");
  auto full = brute_force_explanations(p1, true);
  REQUIRE(full.size() == 1);
  CHECK(full[0].to_string() == "{!x}");

  Instance p2 = make_instance("fun xor 2 0110\nkb (xor x q)\nhyp x\nmanifest literal q\n");
  auto full2 = brute_force_explanations(p2, true);
  REQUIRE(full2.size() == 1);
  CHECK(full2[0].to_string() == "{!x}");

  Instance p3 = make_instance("fun or 2 0111\nkb q\nmanifest literal q\n");
  auto all3 = brute_force_explanations(p3, false);
  REQUIRE(all3.size() == 1);
  CHECK(all3[0].empty());
}

TEST_CASE("solve with brute algorithm returns the lexicographically least witness") {
  Instance p = make_instance("fun and 2 0001\nkb (and x q)\nhyp x\nmanifest literal q\n");
  SolveResult r = solve(p, Algorithm::Brute);
  CHECK(r.has_explanation);
  CHECK(r.witness->empty());
}
