#include <gtest/gtest.h>

#include <random>
#include <set>

#include "coxkit/permgrp.hpp"
#include "oracles.hpp"

namespace {

using namespace coxkit::perm;

Permutation P(std::string_view s, std::size_t d) { return Permutation::parse(s, d); }

PermGroup sym(std::size_t n) {
  if (n == 1) return PermGroup::closure({}, 1);
  std::string cyc = "(";
  for (std::size_t i = 1; i <= n; ++i) cyc += std::to_string(i) + (i < n ? " " : ")");
  return PermGroup::closure({P("(1 2)", n), P(cyc, n)}, n);
}

TEST(Permutation, ParseAndPrint) {
  const auto x = P("(1 3)(2 4)(5 6)", 6);
  EXPECT_EQ(x.to_string(), "(1 3)(2 4)(5 6)");
  EXPECT_EQ(x.order(), 2u);
  EXPECT_EQ(P("", 3).to_string(), "()");
  EXPECT_EQ(Permutation::parse("(1 2 3)").degree(), 3u);
  EXPECT_THROW(P("(1 1)", 3), std::invalid_argument);
  EXPECT_THROW(P("(1 4)", 3), std::invalid_argument);
  EXPECT_THROW(P("(1 2", 3), std::invalid_argument);
}

TEST(Permutation, CompositionIsRightToLeft) {
  const auto p = P("(1 2)", 3), q = P("(2 3)", 3);
  // (p q)(2) = p(q(2)) = p(3) = 3
  EXPECT_EQ((p * q)(1), 2);
  EXPECT_EQ((p * q).to_string(), "(1 2 3)");
  EXPECT_EQ(P("(1 2 3)", 3).pow(-1), P("(1 3 2)", 3));
  EXPECT_EQ(P("(1 2 3 4)", 4).pow(4), Permutation(4));
}

TEST(CycleType, Examples) {
  EXPECT_EQ(cycle_type(P("(1 3)(2 4)(5 6)", 6)), (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(cycle_type(Permutation(6)), (std::vector<std::size_t>(6, 1)));
  EXPECT_EQ(cycle_type(P("(1 2)", 6)), (std::vector<std::size_t>{2, 1, 1, 1, 1}));
}

TEST(CycleType, ConjugationInvariant) {
  const auto s6 = sym(6);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const auto g = s6.element(static_cast<Index>(rng() % s6.order()));
    const auto h = s6.element(static_cast<Index>(rng() % s6.order()));
    EXPECT_EQ(cycle_type(h * g * h.inverse()), cycle_type(g));
  }
}

TEST(Closure, Examples) {
  EXPECT_EQ(PermGroup::closure({P("(1 2)", 3), P("(1 2 3)", 3)}, 3).order(), 6u);
  EXPECT_EQ(PermGroup::closure({}, 4).order(), 1u);
  EXPECT_EQ(PermGroup().order(), 1u);
  const auto a = PermGroup::closure({P("(1 2)", 12), P("(1 2 3 4 5 6)", 12), P("(7 8)", 12), P("(7 8 9 10 11 12)", 12)});
  EXPECT_EQ(a.order(), 518400u);
}

TEST(Closure, AgreesWithOracleAndIsClosed) {
  const std::vector<std::vector<Permutation>> cases = {
      {P("(1 2 3 4)", 4), P("(1 3)", 4)},
      {P("(1 2)(3 4)", 5), P("(1 2 3 4 5)", 5)},
      {P("(1 2 3)", 6), P("(4 5)(1 2)", 6)},
  };
  for (const auto& gens : cases) {
    const auto g = PermGroup::closure(gens);
    const auto want = oracle::elements_of(gens, gens[0].degree());
    ASSERT_EQ(g.order(), want.size());
    for (const auto& x : want) EXPECT_TRUE(g.contains(x));
    for (Index i = 0; i < g.order(); ++i) {
      EXPECT_EQ(g.element(g.inverse(i)), g.element(i).inverse());
      for (Index j = 0; j < g.order(); ++j) EXPECT_EQ(g.element(g.multiply(i, j)), g.element(i) * g.element(j));
      // word_of reproduces the element
      Permutation w(g.degree());
      for (auto k : g.word_of(i)) w = w * g.generators()[k];
      EXPECT_EQ(w, g.element(i));
    }
    EXPECT_EQ(g.element(0), Permutation(g.degree()));
  }
}

TEST(Closure, BoundExceeded) {
  try {
    PermGroup::closure({P("(1 2)", 8), P("(1 2 3 4 5 6 7 8)", 8)}, 8, 1000);
    FAIL();
  } catch (const BoundExceeded& e) {
    EXPECT_GE(e.partial(), 1000u);
  }
}

TEST(Center, Examples) {
  EXPECT_EQ(center(sym(3)).order(), 1u);
  const auto c = PermGroup::closure({P("(1 2)", 8), P("(3 4)", 8), P("(5 6)", 8), P("(7 8)", 8)});
  EXPECT_EQ(center(c).order(), 16u);
  const auto b = direct_product(direct_product(sym(4), sym(3)).group, sym(5)).group;
  EXPECT_EQ(b.order(), 24u * 6 * 120);
  EXPECT_EQ(center(b).order(), 1u);
  EXPECT_EQ(center(PermGroup::closure({P("(1 2 3 4)", 4), P("(1 3)", 4)})).order(), 2u);
}

TEST(Centralizer, Examples) {
  const auto s3 = sym(3);
  EXPECT_EQ(centralizer_element(s3, P("(1 2 3)", 3)).order(), 3u);
  EXPECT_EQ(centralizer_element(s3, Permutation(3)).order(), 6u);
  EXPECT_THROW(centralizer_element(s3, P("(1 2)", 4)), std::exception);
  EXPECT_EQ(centralizer_element(sym(5), P("(1 2)", 5)).order(), 12u);
}

TEST(Conjugacy, Examples) {
  const auto s3 = sym(3), s4 = sym(4);
  const auto h12 = subgroup(s3, {P("(1 2)", 3)});
  EXPECT_TRUE(are_conjugate_subgroups(s3, h12, h12));
  EXPECT_TRUE(are_conjugate_subgroups(s3, h12, subgroup(s3, {P("(1 3)", 3)})));
  EXPECT_FALSE(are_conjugate_subgroups(s4, subgroup(s4, {P("(1 2)", 4)}), subgroup(s4, {P("(1 2)(3 4)", 4)})));
}

TEST(Conjugacy, EquivalenceRelationOnCyclicSubgroupsOfS4) {
  const auto s4 = sym(4);
  std::vector<PermGroup> subs;
  for (Index i = 0; i < s4.order(); ++i) subs.push_back(subgroup(s4, {s4.element(i)}));
  for (const auto& a : subs) {
    EXPECT_TRUE(are_conjugate_subgroups(s4, a, a));
    for (const auto& b : subs) {
      const bool ab = are_conjugate_subgroups(s4, a, b);
      EXPECT_EQ(ab, are_conjugate_subgroups(s4, b, a));
      std::set<Permutation> sa, sb;
      for (Index i = 0; i < a.order(); ++i) sa.insert(a.element(i));
      for (Index i = 0; i < b.order(); ++i) sb.insert(b.element(i));
      const auto all = oracle::elements_of(s4.generators(), 4);
      EXPECT_EQ(ab, oracle::conjugate_sets(all, sa, sb));
    }
  }
}

TEST(HomCount, Examples) {
  const auto s2 = parse_presentation("gens s\nrel s^2");
  EXPECT_EQ(hom_count(s2, sym(3)), (HomCount{4, 0}));
  EXPECT_EQ(hom_count(s2, PermGroup::closure({}, 1)), (HomCount{1, 1}));
  const auto dinf = parse_presentation("gens a b\nrel a^2\nrel b^2");
  EXPECT_EQ(hom_count(dinf, PermGroup::closure({P("(1 2)", 2)})), (HomCount{4, 3}));
  EXPECT_EQ(hom_count(parse_presentation("gens"), sym(3)), (HomCount{1, 0}));
}

TEST(HomCount, AgreesWithOracle) {
  const std::vector<Presentation> ps = {
      parse_presentation("gens a b\nrel a^2\nrel b^3\nrel (a b)^2"),
      parse_presentation("gens a b\nrel a^4\nrel b^2\nrel (a b)^2"),
      parse_presentation("gens a b\nrel a b a^-1 b^-1"),
      parse_presentation("gens a b c\nrel a^2\nrel b^2\nrel c^2\nrel (a b)^3\nrel (b c)^3\nrel (a c)^3"),
  };
  const std::vector<PermGroup> qs = {sym(3), sym(4), PermGroup::closure({P("(1 2 3 4)", 4), P("(1 3)", 4)}),
                                     PermGroup::closure({P("(1 2 3 4 5)", 5)})};
  for (const auto& p : ps)
    for (const auto& q : qs) {
      const auto want = oracle::hom_count(p, oracle::elements_of(q.generators(), q.degree()), q.degree());
      EXPECT_EQ(hom_count(p, q), (HomCount{want.homs, want.epis}));
    }
}

TEST(HomCount, MultiplicativeOverDirectProducts) {
  std::mt19937_64 rng(2);
  const std::vector<PermGroup> qs = {sym(3), PermGroup::closure({P("(1 2 3 4)", 4)}), PermGroup::closure({P("(1 2)", 2)}),
                                     PermGroup::closure({P("(1 2 3)", 3)})};
  for (int t = 0; t < 20; ++t) {
    Presentation p = Presentation::with_generators(2);
    for (int r = 0; r < 2; ++r) {
      GroupWord w;
      for (std::size_t k = 0, len = 1 + rng() % 5; k < len; ++k) w.push_back((rng() % 2 ? 1 : -1) * static_cast<int>(1 + rng() % 2));
      p.relators.push_back(w);
    }
    for (const auto& a : qs)
      for (const auto& b : qs)
        EXPECT_EQ(hom_count(p, direct_product(a, b).group).homs, hom_count(p, a).homs * hom_count(p, b).homs);
  }
}

TEST(Isomorphism, Examples) {
  const auto s4a = sym(4);
  const auto s4b = PermGroup::closure({P("(5 6)", 8), P("(5 6 7 8)", 8)});
  EXPECT_TRUE(is_isomorphic_small(s4a, s4b));
  EXPECT_FALSE(is_isomorphic_small(PermGroup::closure({P("(1 2 3 4)", 4)}), PermGroup::closure({P("(1 2)", 4), P("(3 4)", 4)})));
  EXPECT_FALSE(is_isomorphic_small(sym(4), sym(3)));
  EXPECT_FALSE(is_isomorphic_small(sym(4), sym(5)));
  EXPECT_FALSE(is_isomorphic_small(sym(3), sym(5)));
  // same order, same element orders multiset would not be enough in general;
  // D8 vs Q8 differ in the number of involutions
  const auto d8 = PermGroup::closure({P("(1 2 3 4)", 4), P("(1 3)", 4)});
  const CayleyTable q8 = CayleyTable(PermGroup::closure({P("(1 2 4 7)(3 6 8 5)", 8), P("(1 3 4 8)(2 5 7 6)", 8)}));
  EXPECT_EQ(q8.order(), 8u);
  EXPECT_FALSE(find_isomorphism(CayleyTable(d8), q8).has_value());
}

TEST(Automorphisms, Counts) {
  EXPECT_EQ(automorphisms(CayleyTable(sym(3))).size(), 6u);
  EXPECT_EQ(automorphisms(CayleyTable(PermGroup::closure({P("(1 2)", 4), P("(3 4)", 4)}))).size(), 6u);
  EXPECT_EQ(automorphisms(CayleyTable(PermGroup::closure({P("(1 2 3 4 5)", 5)}))).size(), 4u);
}

TEST(SubgroupClasses, Counts) {
  EXPECT_EQ(subgroup_class_representatives(CayleyTable(sym(3))).size(), 4u);
  EXPECT_EQ(subgroup_class_representatives(CayleyTable(sym(4))).size(), 11u);
  EXPECT_EQ(subgroup_class_representatives(CayleyTable(PermGroup::closure({P("(1 2)", 4), P("(3 4)", 4)}))).size(), 5u);
}

TEST(CayleyPresentation, DefinesTheGroup) {
  for (const auto& g : {sym(3), sym(4), PermGroup::closure({P("(1 2 3 4)", 4), P("(1 3)", 4)})}) {
    const auto p = cayley_presentation(g);
    // homs from <gens | Cayley relators> onto G itself number |Aut(G)|
    EXPECT_EQ(hom_count(p, g).epis, automorphisms(CayleyTable(g)).size());
    for (Index i = 0; i < g.order(); ++i) {
      std::vector<Permutation> imgs = g.generators();
      EXPECT_EQ(oracle::eval_word(group_word_of(g, i), imgs, g.degree()), g.element(i));
    }
  }
}

TEST(Presentation, ParseAndFormat) {
  const auto p = parse_presentation("gens a b # two\nrel a^2\nrel (a b)^-3\nrel 1\n");
  EXPECT_EQ(p.generators, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(p.relators.size(), 3u);
  EXPECT_EQ(p.relators[0], (GroupWord{1, 1}));
  EXPECT_EQ(p.relators[1], (GroupWord{-2, -1, -2, -1, -2, -1}));
  EXPECT_TRUE(p.relators[2].empty());
  EXPECT_EQ(parse_presentation(format_presentation(p)).relators, p.relators);
  EXPECT_THROW(parse_presentation("gens a\nrel b"), std::invalid_argument);
  EXPECT_THROW(parse_presentation("rel a"), std::invalid_argument);
}

}  // namespace
