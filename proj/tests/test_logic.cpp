#include <gtest/gtest.h>

#include <cstdlib>

#include "coxkit/logic.hpp"

namespace {

using namespace coxkit;
using namespace coxkit::logic;
using perm::GroupWord;
using perm::Permutation;
using perm::PermGroup;

PermGroup S3() { return PermGroup::closure({Permutation::parse("(1 2)", 3), Permutation::parse("(1 2 3)", 3)}); }

Index idx(const FiniteGroupModel& m, std::string_view cycles) {
  return m.group.require_index(Permutation::parse(cycles, m.group.degree()));
}

TEST(Terms, Helpers) {
  EXPECT_EQ(render(commutator(var("a"), var("b"))), "a b a^-1 b^-1");
  EXPECT_EQ(render(power(var("x"), -2)), "x^-1 x^-1");
  EXPECT_EQ(render(Term{}), "1");
  EXPECT_EQ(inverse(concat(var("a"), constant("c"))), concat(inverse(constant("c")), inverse(var("a"))));
  EXPECT_EQ(term_of(GroupWord{1, -2}, {"p", "q"}), concat(var("p"), inverse(var("q"))));
}

TEST(Parse, RoundTrip) {
  const char* texts[] = {
      "true",
      "x = y",
      "forall x y. x y = y x",
      "exists x. ~(x = 1) & x^2 = 1",
      "forall g. (g $c g^-1 != $d | false) & (x = 1 | y = 1)",
      "~~(a b^-3 = 1)",
  };
  for (const char* t : texts) {
    const auto f = parse_formula(t);
    EXPECT_EQ(parse_formula(render(f)), f) << t;
  }
  const auto built = forall({"y"}, or_of({eq(var("x"), Term{}), negate(neq(power(var("y"), 3), constant("k")))}));
  EXPECT_EQ(parse_formula(render(built)), built);
  EXPECT_EQ(parse_formula("x^3 = 1 # trailing comment"), eq(power(var("x"), 3), Term{}));
  EXPECT_EQ(and_of({}), truth(true));
  EXPECT_EQ(or_of({}), truth(false));
}

TEST(Parse, ErrorsCarryOffsets) {
  const std::string bad = "forall x. x = ";
  try {
    parse_formula(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_LE(e.position(), bad.size());
  }
  try {
    parse_formula("x = y )");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_formula("forall . x = x"), ParseError);
  EXPECT_THROW(parse_formula("x ="), ParseError);
  EXPECT_THROW(parse_formula("x^ = 1"), ParseError);
}

TEST(Prefix, Classification) {
  auto tag = [](const char* t) { return classify_prefix(parse_formula(t)); };
  EXPECT_EQ(tag("x = y"), PrefixClass::QuantifierFree);
  EXPECT_EQ(tag("forall x. x = x"), PrefixClass::Universal);
  EXPECT_EQ(tag("~forall x. x = 1"), PrefixClass::Existential);
  EXPECT_EQ(tag("forall x. exists y. x = y"), PrefixClass::AE);
  EXPECT_EQ(tag("exists x. forall y. x y = y x"), PrefixClass::EA);
  EXPECT_EQ(tag("exists x. forall y. exists z. x = y z"), PrefixClass::EAE);
  EXPECT_EQ(tag("forall x. exists y. forall z. x = y z"), PrefixClass::Other);
  EXPECT_EQ(quantifier_prefix(parse_formula("(forall x. x = 1) & (exists y. y = 1)")), "EA");
  EXPECT_EQ(quantifier_prefix(parse_formula("forall x. forall y. x = y")), "A");
  EXPECT_TRUE(is_prenex(parse_formula("forall x. exists y. x = y & y = x")));
  EXPECT_FALSE(is_prenex(parse_formula("(forall x. x = 1) & y = 1")));
}

TEST(Substitute, AvoidsCapture) {
  const auto f = parse_formula("forall y. x y = y x");
  const auto g = substitute(f, "x", var("y"));
  EXPECT_EQ(free_variables(g), std::set<std::string>{"y"});
  const auto m = FiniteGroupModel::make(S3());
  for (Index i = 0; i < m.group.order(); ++i) EXPECT_EQ(evaluate(g, m, {{"y", i}}), evaluate(f, m, {{"x", i}}));
  // bound occurrences are untouched
  EXPECT_EQ(substitute(f, "y", var("z")), f);
}

TEST(Evaluate, Basics) {
  const auto m = FiniteGroupModel::make(S3(), {{"t", Permutation::parse("(1 2)", 3)}});
  EXPECT_TRUE(evaluate(parse_formula("forall y. y = y"), m));
  EXPECT_FALSE(evaluate(parse_formula("forall x y. x y = y x"), m));
  EXPECT_TRUE(evaluate(parse_formula("exists x. x != 1 & x^3 = 1"), m));
  EXPECT_TRUE(evaluate(parse_formula("$t^2 = 1 & $t != 1"), m));
  EXPECT_TRUE(evaluate(parse_formula("~(false | x = x^-1 & x != 1)"), m, {{"x", idx(m, "(1 2 3)")}}));
  EXPECT_THROW(evaluate(parse_formula("x = x"), m), std::invalid_argument);
  EXPECT_THROW(evaluate(parse_formula("$nope = 1"), m), std::invalid_argument);
  EXPECT_THROW(FiniteGroupModel::make(S3(), {{"bad", Permutation::parse("(1 2)(3 4)", 4)}}), std::invalid_argument);
}

TEST(Evaluate, Budget) {
  const auto m = FiniteGroupModel::make(S3());
  const auto f = parse_formula("forall x y z. x y z z^-1 = x y");
  EXPECT_THROW(evaluate(f, m, {}, 10), BudgetExceeded);
  EXPECT_TRUE(evaluate(f, m, {}, 6 + 36 + 216));
}

TEST(Evaluate, BudgetFromEnvironment) {
  ::setenv("COXKIT_BUDGET", "5", 1);
  EXPECT_EQ(budget_from_env(), 5u);
  ::setenv("COXKIT_BUDGET", "junk", 1);
  EXPECT_EQ(budget_from_env(), kDefaultBudget);
  ::unsetenv("COXKIT_BUDGET");
  EXPECT_EQ(budget_from_env(), kDefaultBudget);
}

TEST(Chi, OneIsTheCenter) {
  EXPECT_THROW(emit_chi(0), std::invalid_argument);
  EXPECT_EQ(free_variables(emit_chi(4)), std::set<std::string>{"x"});
  EXPECT_EQ(classify_prefix(emit_chi(2)), PrefixClass::Universal);
  const auto s3 = FiniteGroupModel::make(S3());
  const auto chi1 = emit_chi(1);
  for (Index i = 0; i < s3.group.order(); ++i) EXPECT_EQ(evaluate(chi1, s3, {{"x", i}}), i == 0);
  // y^2 ranges over the rotations, which commute with x exactly when x is not a reflection
  const auto chi2 = emit_chi(2);
  for (Index i = 0; i < s3.group.order(); ++i)
    EXPECT_EQ(evaluate(chi2, s3, {{"x", i}}), s3.table.element_orders()[i] != 2);
  const auto c4 = FiniteGroupModel::make(PermGroup::closure({Permutation::parse("(1 2 3 4)", 4)}));
  for (Index i = 0; i < 4; ++i) EXPECT_TRUE(evaluate(chi1, c4, {{"x", i}}));
}

TEST(FiniteG, CyclicOfOrderTwo) {
  const auto p = perm::parse_presentation("gens s\nrel s^2\n");
  const auto f = emit_finite_g(p, {{{}}, {{}, {1}}});
  EXPECT_EQ(classify_prefix(f), PrefixClass::QuantifierFree);
  EXPECT_EQ(free_variables(f), std::set<std::string>{generator_variable(0)});
  const auto m = FiniteGroupModel::make(PermGroup::closure({Permutation::parse("(1 2)", 2)}));
  EXPECT_TRUE(evaluate(f, m, {{"x1", 1}}));
  EXPECT_FALSE(evaluate(f, m, {{"x1", 0}}));
  EXPECT_THROW(emit_finite_g(p, {}), std::invalid_argument);
}

TEST(FiniteG, SameOrderPairsNeedNonConjugacy) {
  const auto p = perm::parse_presentation("gens a b\nrel a^2\nrel b^3\nrel (a b)^2\n");
  const auto m = FiniteGroupModel::make(S3());
  const Assignment at{{"x1", idx(m, "(1 2)")}, {"x2", idx(m, "(1 2 3)")}};

  const auto distinct_orders = emit_finite_g(p, {{{}}, {{}, {1}}, {{}, {2}, {2, 2}}});
  EXPECT_EQ(classify_prefix(distinct_orders), PrefixClass::QuantifierFree);
  EXPECT_TRUE(evaluate(distinct_orders, m, at));

  // <a> and <a b> are conjugate in S3
  const auto conjugate_pair = emit_finite_g(p, {{{}}, {{}, {1}}, {{}, {1, 2}}});
  EXPECT_EQ(classify_prefix(conjugate_pair), PrefixClass::Universal);
  EXPECT_FALSE(evaluate(conjugate_pair, m, at));

  // sending b to the identity makes the word b trivial
  EXPECT_FALSE(evaluate(distinct_orders, m, {{"x1", idx(m, "(1 2)")}, {"x2", 0}}));
}

TEST(Gamma, StructureAndErrors) {
  const auto p = perm::parse_presentation("gens s\nrel s^2\n");
  const auto theta = parse_formula("x = x");
  const auto g = emit_gamma(p, {"z"}, {{1}}, theta, {{{}}, {{}, {1}}}, {{1}});
  EXPECT_EQ(free_variables(g), std::set<std::string>{"z"});
  EXPECT_EQ(classify_prefix(g), PrefixClass::Existential);
  EXPECT_EQ(parse_formula(render(g)), g);
  const auto m = FiniteGroupModel::make(PermGroup::closure({Permutation::parse("(1 2)", 2)}));
  EXPECT_TRUE(evaluate(g, m, {{"z", 1}}));
  // no non-triviality conjuncts, so x1 = 1 also witnesses z = 1
  EXPECT_TRUE(evaluate(g, m, {{"z", 0}}));

  EXPECT_THROW(emit_gamma(p, {"z1", "z2"}, {{1}}, theta, {{{}}}, {{1}}), std::invalid_argument);
  EXPECT_THROW(emit_gamma(p, {"z"}, {{1}}, parse_formula("x = y"), {{{}}}, {{1}}), std::invalid_argument);
  const auto universal = parse_formula("forall y. x y = y x");
  EXPECT_EQ(classify_prefix(emit_gamma(p, {"z"}, {{1}}, universal, {{{}}, {{}, {1}}}, {{1}})), PrefixClass::EA);
}

}  // namespace
