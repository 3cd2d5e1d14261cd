#include <doctest.h>

#include <random>

#include "abdkit/clones.hpp"
#include "abdkit/sat.hpp"

using namespace abdkit;

namespace {

KnowledgeBase kb_of(const std::vector<std::string>& formulas) {
  FunctionSet fs;
  fs.add(fn::or_());
  fs.add(fn::and_());
  fs.add(fn::not_());
  fs.add(fn::xor_());
  fs.add(fn::xor3());
  fs.add(fn::maj());
  fs.add(fn::imp());
  KnowledgeBase kb(fs);
  for (const std::string& f : formulas) kb.add_formula(parse_formula(f, kb.functions()));
  return kb;
}

}  // namespace

TEST_CASE("satisfiability basics") {
  CHECK_FALSE(satisfiable(kb_of({"x", "(not x)"}), {}).first);
  auto [sat, witness] = satisfiable(kb_of({"(xor x y)"}), {});
  CHECK(sat);
  REQUIRE(witness.has_value());
  CHECK(witness->at("x") != witness->at("y"));
  CHECK_FALSE(satisfiable(kb_of({"(and x (not x))"}), {}).first);
}

TEST_CASE("satisfiability with extra literals") {
  KnowledgeBase kb = kb_of({"(or x y)"});
  CHECK(satisfiable(kb, {{"x", false}}).first);
  CHECK_FALSE(satisfiable(kb, {{"x", false}, {"y", false}}).first);
}

TEST_CASE("entailment") {
  CHECK(entails(kb_of({"x"}), {}, Manifestation::literal({"x", true})));
  CHECK_FALSE(entails(kb_of({"(or x y)"}), {}, Manifestation::literal({"x", true})));
  CHECK(entails(kb_of({"(and x y)"}), {}, Manifestation::literal({"y", true})));
  // Empty knowledge base entails nothing about a fresh variable.
  KnowledgeBase empty = kb_of({"(or x x)"});
  CHECK_FALSE(entails(empty, {}, Manifestation::literal({"x", false})));

  // Clauses, terms, and formula manifestations.
  KnowledgeBase kb = kb_of({"(and x y)"});
  CHECK(entails(kb, {}, Manifestation::clause({{"x", true}, {"z", true}})));
  CHECK(entails(kb, {}, Manifestation::term({{"x", true}, {"y", true}})));
  CHECK_FALSE(entails(kb, {}, Manifestation::term({{"x", true}, {"z", true}})));
  CHECK(entails(kb, {}, Manifestation::formula(
                            parse_formula("(or x z)", kb.functions()))));
  // A tautological clause is always entailed.
  CHECK(entails(kb, {}, Manifestation::clause({{"z", true}, {"z", false}})));
}

TEST_CASE("brute force oracle") {
  CHECK(brute_sat(kb_of({"(xor x y)", "(xor y x)"}), {}));
  CHECK_FALSE(brute_sat(kb_of({"(xor x x)"}), {}));
  CHECK(brute_sat(kb_of({"(maj x y z)"}), {}));
}

TEST_CASE("DPLL agrees with the brute-force oracle on random knowledge bases") {
  std::mt19937_64 rng(42);
  FunctionSet fs;
  fs.add(fn::or_());
  fs.add(fn::and_());
  fs.add(fn::not_());
  fs.add(fn::xor3());
  fs.add(fn::maj());
  std::vector<std::string> vars{"a", "b", "c", "d", "e", "f", "g", "h"};

  auto random_tree = [&](auto&& self, int depth) -> Formula {
    if (depth == 0 || rng() % 3 == 0) return Formula::var(vars[rng() % vars.size()]);
    const auto& funs = fs.functions();
    FunPtr fun = funs[rng() % funs.size()];
    std::vector<Formula> kids;
    for (int i = 0; i < fun->arity(); ++i) kids.push_back(self(self, depth - 1));
    return Formula::apply(std::move(fun), std::move(kids));
  };

  int sat_count = 0;
  for (int round = 0; round < 1000; ++round) {
    KnowledgeBase kb(fs);
    const int formulas = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < formulas; ++i) kb.add_formula(random_tree(random_tree, 2));
    auto [sat, witness] = satisfiable(kb, {});
    CHECK(sat == brute_sat(kb, {}));
    if (sat) {
      ++sat_count;
      for (const Formula& f : kb.formulas()) CHECK(f.evaluate(*witness));
    }
  }
  // The battery should exercise both outcomes.
  CHECK(sat_count > 50);
  CHECK(sat_count < 1000);
}

TEST_CASE("identical inputs yield identical witnesses") {
  KnowledgeBase kb = kb_of({"(or x (or y z))", "(not y)"});
  auto [sat1, w1] = satisfiable(kb, {});
  auto [sat2, w2] = satisfiable(kb, {});
  REQUIRE(sat1);
  REQUIRE(sat2);
  CHECK(*w1 == *w2);
}

TEST_CASE("brute_sat variable limit") {
  FunctionSet fs;
  fs.add(fn::or_());
  KnowledgeBase kb(fs);
  std::vector<Formula> leaves;
  for (int i = 0; i < 21; ++i) leaves.push_back(Formula::var("v" + std::to_string(i)));
  Formula chain = leaves[0];
  for (std::size_t i = 1; i < leaves.size(); ++i) {
    chain = Formula::apply(fs.find("or"), {chain, leaves[i]});
  }
  kb.add_formula(chain);
  CHECK_THROWS_AS(brute_sat(kb, {}), LimitError);
}
