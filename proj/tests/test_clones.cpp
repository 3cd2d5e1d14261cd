#include <doctest.h>

#include "abdkit/clones.hpp"

using namespace abdkit;

namespace {

std::vector<FunPtr> wrap(std::vector<BoolFun> fs) {
  std::vector<FunPtr> out;
  for (BoolFun& f : fs) out.push_back(std::make_shared<const BoolFun>(std::move(f)));
  return out;
}

CloneId c(const std::string& name) {
  auto id = parse_clone(name);
  REQUIRE(id.has_value());
  return *id;
}

}  // namespace

TEST_CASE("property signatures of basic connectives") {
  PropertySignature a = function_properties(fn::and_());
  CHECK(a.monotone);
  CHECK(a.reproduces0);
  CHECK(a.reproduces1);
  CHECK_FALSE(a.affine);
  CHECK_FALSE(a.self_dual);
  CHECK(a.sep1_level == kSepInf);
  CHECK(a.sep0_level == 1);
  CHECK(a.conjunction_form);
  CHECK_FALSE(a.disjunction_form);

  PropertySignature x = function_properties(fn::xor_());
  CHECK(x.affine);
  CHECK(x.reproduces0);
  CHECK_FALSE(x.reproduces1);
  CHECK_FALSE(x.monotone);

  PropertySignature m = function_properties(fn::maj());
  CHECK(m.self_dual);
  CHECK(m.monotone);
  CHECK(m.sep0_level == 2);
  CHECK(m.sep1_level == 2);

  PropertySignature imp = function_properties(fn::imp());
  CHECK(imp.sep0_level == kSepInf);
  CHECK(imp.reproduces1);
  CHECK_FALSE(imp.reproduces0);
  CHECK_FALSE(imp.monotone);
}

TEST_CASE("0-ary constants") {
  PropertySignature t = function_properties(fn::top());
  CHECK(t.reproduces1);
  CHECK_FALSE(t.reproduces0);
  CHECK(t.monotone);
  CHECK(t.affine);
  CHECK_FALSE(t.self_dual);
  CHECK(t.sep0_level == kSepInf);
  CHECK(t.sep1_level == 1);
  CHECK(t.projection_or_constant);
  CHECK(t.unary_form);
  CHECK(t.conjunction_form);
  CHECK(t.disjunction_form);
}

TEST_CASE("duals") {
  CHECK(dual(fn::and_()).same_table(fn::or_()));
  CHECK(dual(fn::maj()).same_table(fn::maj()));  // maj is self-dual
  BoolFun nand = BoolFun::from_bits("nand", 2, "1110");
  CHECK(dual(dual(nand)).same_table(nand));
}

TEST_CASE("clone membership") {
  CHECK(clone_member(fn::or_(), c("M")));
  CHECK_FALSE(clone_member(fn::xor_(), c("M")));
  CHECK(clone_member(fn::and_(), c("S1")));  // f^{-1}(1) = {11}: common coordinate
  CHECK(clone_member(fn::maj(), c("D2")));
  CHECK(clone_member(fn::not_(), c("N2")));
  CHECK_FALSE(clone_member(fn::not_(), c("R0")));
  CHECK(clone_member(fn::imp(), c("S0")));
  CHECK_FALSE(clone_member(fn::imp(), c("S1^2")));
}

TEST_CASE("clone identification") {
  CHECK(clone_id(wrap({fn::and_(), fn::not_()})) == c("BF"));
  CHECK(clone_id(wrap({fn::xor_()})) == c("L0"));
  CHECK(clone_id(wrap({fn::maj()})) == c("D2"));
  CHECK(clone_id(wrap({fn::or_()})) == c("V2"));
  CHECK(clone_id(wrap({fn::imp()})) == c("S0"));
  CHECK(clone_id(wrap({fn::and_()})) == c("E2"));
  CHECK(clone_id(wrap({fn::top()})) == c("I1"));
  CHECK(clone_id(wrap({fn::id()})) == c("I2"));
  CHECK(clone_id(wrap({fn::xnor3()})) == c("L3"));
  CHECK(clone_id(wrap({fn::or_and()})) == c("S00"));
  CHECK(clone_id(wrap({fn::dual_hn(2), fn::top()})) == c("S01^2"));
  CHECK_THROWS_AS(clone_id(std::vector<FunPtr>{}), ValidationError);
}

TEST_CASE("clone inclusion spot checks") {
  CHECK(clone_leq(c("D2"), c("M")));
  CHECK(clone_leq(c("V2"), c("V")));
  CHECK_FALSE(clone_leq(c("BF"), c("M")));
  CHECK(clone_leq(c("S0^3"), c("S0^2")));
  CHECK_FALSE(clone_leq(c("S0^2"), c("S0^3")));
  CHECK(clone_leq(c("S0"), c("S0^7")));
  CHECK(clone_leq(c("D2"), c("D1")));
  CHECK(clone_leq(c("D2"), c("S00^2")));
  CHECK(clone_leq(c("E2"), c("S10")));
  CHECK(clone_leq(c("N2"), c("L3")));
  CHECK(clone_leq(c("V2"), c("S00")));
  CHECK(clone_leq(c("V1"), c("S01")));
  CHECK(clone_leq(c("I2"), c("N2")));
  CHECK(clone_leq(c("S02"), c("R1")));
  CHECK(clone_leq(c("N"), c("L")));
  CHECK(clone_leq(c("L2"), c("L0")));
  CHECK(clone_leq(c("L2"), c("L1")));

  CHECK_FALSE(clone_leq(c("N"), c("M")));
  CHECK_FALSE(clone_leq(c("L2"), c("M")));
  CHECK_FALSE(clone_leq(c("V2"), c("E")));
  CHECK_FALSE(clone_leq(c("E2"), c("V")));
  CHECK_FALSE(clone_leq(c("M2"), c("S10^2")));
  CHECK_FALSE(clone_leq(c("S02"), c("S01^2")));
  CHECK_FALSE(clone_leq(c("D"), c("R0")));
  CHECK_FALSE(clone_leq(c("L0"), c("L2")));
  CHECK_FALSE(clone_leq(c("S02^2"), c("S00^2")));
  CHECK_FALSE(clone_leq(c("S01^2"), c("S00^2")));
  CHECK_FALSE(clone_leq(c("R2"), c("S02^2")));
  CHECK_FALSE(clone_leq(c("S11"), c("S10")));
}

TEST_CASE("clone_leq is a partial order over the catalog") {
  const auto& cat = clone_catalog();
  for (const CloneId& a : cat) CHECK(clone_leq(a, a));
  int violations = 0;
  for (const CloneId& a : cat) {
    for (const CloneId& b : cat) {
      if (a == b) continue;
      // Antisymmetry: distinct clones are never mutually included.
      if (clone_leq(a, b) && clone_leq(b, a)) ++violations;
    }
  }
  CHECK(violations == 0);
  for (const CloneId& a : cat) {
    for (const CloneId& b : cat) {
      if (!clone_leq(a, b)) continue;
      for (const CloneId& d : cat) {
        if (clone_leq(b, d) && !clone_leq(a, d)) ++violations;
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("membership is monotone along inclusions (exhaustive, arity <= 3)") {
  const auto& cat = clone_catalog();
  int violations = 0;
  for (int arity = 0; arity <= 3; ++arity) {
    const std::size_t rows = std::size_t{1} << arity;
    for (std::size_t t = 0; t < (std::size_t{1} << rows); ++t) {
      std::vector<uint8_t> table(rows);
      for (std::size_t r = 0; r < rows; ++r) table[r] = (t >> r) & 1;
      PropertySignature sig = function_properties(BoolFun("f", arity, std::move(table)));
      std::vector<bool> member(cat.size());
      for (std::size_t i = 0; i < cat.size(); ++i) member[i] = clone_member(sig, cat[i]);
      for (std::size_t i = 0; i < cat.size(); ++i) {
        if (!member[i]) continue;
        for (std::size_t j = 0; j < cat.size(); ++j) {
          if (clone_leq(cat[i], cat[j]) && !member[j]) ++violations;
        }
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("separation levels stay in range; h_n witnesses are exact") {
  for (int arity = 0; arity <= 4; ++arity) {
    const std::size_t rows = std::size_t{1} << arity;
    for (std::size_t t = 0; t < (std::size_t{1} << rows); ++t) {
      std::vector<uint8_t> table(rows);
      for (std::size_t r = 0; r < rows; ++r) table[r] = (t >> r) & 1;
      PropertySignature sig = function_properties(BoolFun("f", arity, std::move(table)));
      CHECK(sig.sep0_level >= 1);
      CHECK(sig.sep1_level >= 1);
      if (sig.sep0_level != kSepInf) CHECK(sig.sep0_level <= std::max(1, arity - 1));
      if (sig.sep1_level != kSepInf) CHECK(sig.sep1_level <= std::max(1, arity - 1));
    }
  }
  for (int n = 2; n <= kMaxDegree; ++n) {
    CHECK(function_properties(fn::hn(n)).sep1_level == n);
    CHECK(function_properties(fn::dual_hn(n)).sep0_level == n);
  }
}

TEST_CASE("separation-degree membership is downward closed (arity <= 4)") {
  // S0^{k+1} ⊆ S0^k over every function, via the level encoding.
  for (int arity = 0; arity <= 4; ++arity) {
    const std::size_t rows = std::size_t{1} << arity;
    for (std::size_t t = 0; t < (std::size_t{1} << rows); ++t) {
      std::vector<uint8_t> table(rows);
      for (std::size_t r = 0; r < rows; ++r) table[r] = (t >> r) & 1;
      BoolFun f("f", arity, std::move(table));
      for (int k = 3; k <= kMaxDegree; ++k) {
        if (clone_member(f, CloneId{CloneFamily::S0, k})) {
          CHECK(clone_member(f, CloneId{CloneFamily::S0, k - 1}));
        }
        if (clone_member(f, CloneId{CloneFamily::S1, k})) {
          CHECK(clone_member(f, CloneId{CloneFamily::S1, k - 1}));
        }
      }
    }
  }
}

TEST_CASE("clone fidelity: clone_id(base_of(C)) = C at chain degrees 2 and 3") {
  for (const CloneId& cl : clone_catalog()) {
    if (is_chain_family(cl.family) && cl.degree != kDegreeInf && cl.degree > 3) continue;
    CloneId got = clone_id(wrap(base_of(cl)));
    REQUIRE_MESSAGE(got == cl, "base of ", cl.name(), " identified as ", got.name());
  }
}

TEST_CASE("clone names round-trip") {
  for (const CloneId& cl : clone_catalog()) {
    auto parsed = parse_clone(cl.name());
    REQUIRE(parsed.has_value());
    CHECK(*parsed == cl);
  }
  CHECK(c("S00^2").name() == "S00^2");
  CHECK(c("S02").name() == "S02");
  CHECK(c("D1").name() == "D1");
  CHECK(c("L3").name() == "L3");
  CHECK_FALSE(parse_clone("S00^9").has_value());
  CHECK_FALSE(parse_clone("Z").has_value());
}

TEST_CASE("representation synthesis") {
  FunctionSet h;
  h.add(BoolFun::from_bits("h", 2, "0010"));
  auto rep = find_representation(h, fn::and_(), 8);
  REQUIRE(rep.has_value());
  CHECK(rep->node_count() <= 8);
  for (bool x : {false, true}) {
    for (bool y : {false, true}) {
      CHECK(rep->evaluate({{"x1", x}, {"x2", y}}) == (x && y));
    }
  }

  FunctionSet just_or;
  just_or.add(fn::or_());
  auto trivial = find_representation(just_or, fn::or_(), 3);
  REQUIRE(trivial.has_value());
  CHECK(trivial->node_count() == 3);

  FunctionSet just_and;
  just_and.add(fn::and_());
  CHECK_FALSE(find_representation(just_and, fn::or_(), 20).has_value());
}

TEST_CASE("representations are table-equal for every requested connective") {
  std::vector<BoolFun> targets{fn::or_(),  fn::and_(),   fn::not_(),   fn::imp(),
                               fn::xor3(), fn::or_and(), fn::and_or(), fn::maj()};
  std::vector<std::vector<BoolFun>> bases{
      {fn::and_(), fn::not_()},
      {fn::imp(), fn::bot()},
      {fn::nimp(), fn::top()},
  };
  for (const auto& base : bases) {
    FunctionSet fs;
    for (const BoolFun& f : base) fs.add(f);
    for (const BoolFun& target : targets) {
      auto rep = find_representation(fs, target, 14);
      if (!rep) continue;  // not expressible within budget over this base
      const int k = target.arity();
      for (unsigned row = 0; row < (1u << k); ++row) {
        Assignment a;
        for (int i = 0; i < k; ++i) {
          a["x" + std::to_string(i + 1)] = ((row >> (k - 1 - i)) & 1) != 0;
        }
        CHECK(rep->evaluate(a) == target.value(row));
      }
    }
  }
}

TEST_CASE("find_representation is deterministic") {
  FunctionSet fs;
  fs.add(fn::imp());
  fs.add(fn::bot());
  auto a = find_representation(fs, fn::or_(), 12);
  auto b = find_representation(fs, fn::or_(), 12);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->to_string() == b->to_string());
}

TEST_CASE("base_of rejects unsupported chain degrees") {
  CHECK_THROWS_AS(base_of(CloneId{CloneFamily::S00, 9}), ValidationError);
  CHECK_THROWS_AS(make_clone(CloneFamily::S00, 1), ValidationError);
  CHECK_THROWS_AS(make_clone(CloneFamily::BF, 2), ValidationError);
}
