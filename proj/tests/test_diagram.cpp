#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "coxkit/diagram.hpp"

namespace {

using namespace coxkit::diagram;

CoxeterMatrix triangle(Label p, Label q, Label r) {
  CoxeterMatrix m(3);
  m.set(0, 1, p);
  m.set(1, 2, q);
  m.set(0, 2, r);
  return m;
}

/// Sign of 1/p + 1/q + 1/r - 1 in integers.
Kind triangle_oracle(long p, long q, long r) {
  const long s = q * r + p * r + p * q - p * q * r;
  return s > 0 ? Kind::Spherical : s == 0 ? Kind::Affine : Kind::Other;
}

TEST(ParseDiagram, Examples) {
  const auto m = parse_diagram("verts 3\nedge 1 2 3\nedge 2 3 3\nedge 1 3 3");
  ASSERT_EQ(m.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m(i, j), i == j ? 1u : 3u);
  const auto one = parse_diagram("verts 1");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one(0, 0), 1u);
  const auto dinf = parse_diagram("verts 2\nedge 1 2 inf");
  EXPECT_EQ(dinf(0, 1), kInfinity);
  EXPECT_EQ(dinf(1, 0), kInfinity);
}

TEST(ParseDiagram, CommentsAndDefaults) {
  const auto m = parse_diagram("# square\nverts 4   # four vertices\nedge 1 2 4\n\nedge 3 4 inf\n");
  EXPECT_EQ(m(0, 1), 4u);
  EXPECT_EQ(m(0, 2), 2u);
  EXPECT_EQ(m(2, 3), kInfinity);
}

TEST(ParseDiagram, Errors) {
  EXPECT_THROW(parse_diagram("edge 1 2 3"), ParseError);
  EXPECT_THROW(parse_diagram("verts 2\nedge 1 3 3"), ParseError);
  EXPECT_THROW(parse_diagram("verts 2\nedge 1 1 3"), ParseError);
  EXPECT_THROW(parse_diagram("verts 2\nedge 1 2 1"), ParseError);
  EXPECT_THROW(parse_diagram("verts 2\nedge 1 2 x"), ParseError);
  try {
    parse_diagram("verts 2\nedge 1 2 3\nbogus");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseDiagram, FormatRoundTrip) {
  const auto m = affine_diagram('E', 8);
  EXPECT_EQ(parse_diagram(format_diagram(m)), m);
  EXPECT_EQ(parse_diagram(format_diagram(parse_diagram("verts 2\nedge 1 2 inf"))), parse_diagram("verts 2\nedge 1 2 inf"));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(triangle(3, 3, 3)).summary(), "Affine(Ã₂)");
  EXPECT_EQ(classify(CoxeterMatrix(1)).summary(), "Spherical(A₁)");
  EXPECT_EQ(classify(triangle(2, 3, 7)).summary(), "Other");
  EXPECT_EQ(classify(triangle(2, 3, 7)).global, Kind::Other);
}

TEST(Classify, Reducible) {
  CoxeterMatrix m(3);
  m.set(0, 1, 3);
  const auto r = classify(m);
  EXPECT_EQ(r.global, Kind::Spherical);
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.summary(), "Spherical(A₂ × A₁)");
  // spherical x affine is affine, anything with an Other component is Other
  CoxeterMatrix mixed(4);
  mixed.set(0, 1, kInfinity);
  EXPECT_EQ(classify(mixed).global, Kind::Affine);
  CoxeterMatrix hyp(5);
  hyp.set(0, 1, 3), hyp.set(1, 2, 3), hyp.set(0, 2, 4);
  EXPECT_EQ(classify(hyp).global, Kind::Other);
}

TEST(Classify, FamilyNames) {
  EXPECT_EQ(classify(finite_diagram('I', 2, 7)).components[0].family.ascii(), "I2(7)");
  EXPECT_EQ(classify(affine_diagram('A', 1)).components[0].family.ascii(), "~A1");
  EXPECT_EQ(classify(affine_diagram('E', 6)).summary(), "Affine(Ẽ₆)");
  EXPECT_EQ(classify(affine_diagram('B', 3)).summary(), "Affine(B̃₃)");
  EXPECT_EQ(classify(finite_diagram('H', 4)).summary(), "Spherical(H₄)");
}

TEST(Classify, FiniteCatalog) {
  struct Range {
    char letter;
    std::size_t lo, hi;
  };
  for (const auto& r : {Range{'A', 1, 10}, Range{'B', 2, 10}, Range{'D', 4, 10}, Range{'E', 6, 8}, Range{'F', 4, 4},
                        Range{'G', 2, 2}, Range{'H', 3, 4}})
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
      const auto res = classify(finite_diagram(r.letter, n));
      ASSERT_EQ(res.components.size(), 1u);
      EXPECT_EQ(res.global, Kind::Spherical);
      EXPECT_EQ(res.components[0].family, (Family{r.letter, n, false, 0})) << r.letter << n;
    }
}

TEST(Classify, InvariantUnderRelabeling) {
  std::mt19937_64 rng(5);
  const Label labels[] = {2, 2, 2, 3, 3, 4, 5, 6, kInfinity};
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 7;
    CoxeterMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, labels[rng() % std::size(labels)]);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto a = classify(m), b = classify(m.relabeled(perm));
    EXPECT_EQ(a.global, b.global);
    std::multiset<std::string> fa, fb;
    for (const auto& c : a.components) fa.insert(std::string(to_string(c.kind)) + c.family.ascii());
    for (const auto& c : b.components) fb.insert(std::string(to_string(c.kind)) + c.family.ascii());
    EXPECT_EQ(fa, fb);
    EXPECT_TRUE(diagrams_isomorphic(m, m.relabeled(perm)));
  }
}

TEST(ClassifyTriangle, Examples) {
  EXPECT_EQ(classify_triangle(3, 3, 3), Kind::Affine);
  EXPECT_EQ(classify_triangle(2, 3, 3), Kind::Spherical);
  EXPECT_EQ(classify_triangle(2, 3, 7), Kind::Other);
  EXPECT_THROW(classify_triangle(kInfinity, 2, 2), std::invalid_argument);
  EXPECT_THROW(classify_triangle(1, 2, 2), std::invalid_argument);
}

TEST(ClassifyTriangle, AgreesWithOracleAndClassify) {
  for (Label p = 2; p <= 12; ++p)
    for (Label q = 2; q <= 12; ++q)
      for (Label r = 2; r <= 12; ++r) {
        const auto k = classify_triangle(p, q, r);
        EXPECT_EQ(k, triangle_oracle(p, q, r));
        EXPECT_EQ(k, classify(triangle(p, q, r)).global) << p << " " << q << " " << r;
      }
}

TEST(SpecialSubgroups, Examples) {
  const auto t = special_spherical_subgroups(triangle(3, 3, 3));
  const std::vector<std::vector<std::size_t>> want = {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(t, want);
  EXPECT_EQ(special_spherical_subgroups(CoxeterMatrix(1)), (std::vector<std::vector<std::size_t>>{{}, {0}}));
  EXPECT_EQ(special_spherical_subgroups(parse_diagram("verts 2\nedge 1 2 inf")),
            (std::vector<std::vector<std::size_t>>{{}, {0}, {1}}));
}

TEST(SpecialSubgroups, DownwardClosedAndComplete) {
  std::mt19937_64 rng(6);
  const Label labels[] = {2, 3, 3, 4, 5, kInfinity};
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 6;
    CoxeterMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, labels[rng() % std::size(labels)]);
    const auto subs = special_spherical_subgroups(m);
    const std::set<std::vector<std::size_t>> set(subs.begin(), subs.end());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(i);
      const bool spherical = s.empty() || classify(m.induced(s)).global == Kind::Spherical;
      EXPECT_EQ(set.count(s) == 1, spherical);
      if (set.count(s))
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          auto sub = s;
          sub.erase(sub.begin() + static_cast<long>(drop));
          EXPECT_TRUE(set.count(sub));
        }
    }
  }
}

TEST(CentralizerRank, Examples) {
  const auto r = centralizer_rank(triangle(3, 3, 3), 0);
  EXPECT_EQ(r.commuting, std::vector<std::size_t>{0});
  EXPECT_EQ(r.odd_component, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(r.edges, 3u);
  EXPECT_EQ(r.vertices, 3u);
  EXPECT_EQ(r.free_rank, 1u);
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto c = centralizer_rank(affine_diagram('A', n), n - 1);
    EXPECT_EQ(c.odd_component.size(), n + 1);
    EXPECT_EQ(c.free_rank, 1u);
  }
  CoxeterMatrix even(4);
  even.set(0, 1, 4), even.set(1, 2, kInfinity), even.set(2, 3, 6);
  for (std::size_t s = 0; s < 4; ++s) {
    const auto c = centralizer_rank(even, s);
    EXPECT_EQ(c.odd_component, std::vector<std::size_t>{s});
    EXPECT_EQ(c.edges, 0u);
    EXPECT_EQ(c.vertices, 1u);
    EXPECT_EQ(c.free_rank, 0u);
  }
}

TEST(CentralizerRank, TreesHaveRankZero) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t s = 0; s < n; ++s) EXPECT_EQ(centralizer_rank(finite_diagram('A', n), s).free_rank, 0u);
  EXPECT_EQ(centralizer_rank(finite_diagram('E', 8), 3).free_rank, 0u);
}

TEST(CentralizerRank, CommutingSet) {
  CoxeterMatrix m(4);
  m.set(0, 1, 3), m.set(0, 2, 4);
  EXPECT_EQ(centralizer_rank(m, 0).commuting, (std::vector<std::size_t>{0, 3}));
}

TEST(Even, Examples) {
  EXPECT_TRUE(is_even(CoxeterMatrix(4)));
  EXPECT_TRUE(is_right_angled(CoxeterMatrix(4)));
  EXPECT_FALSE(is_even(triangle(3, 3, 3)));
  EXPECT_TRUE(is_even(triangle(4, kInfinity, 2)));
  EXPECT_FALSE(is_right_angled(triangle(4, kInfinity, 2)));
  EXPECT_TRUE(is_right_angled(triangle(2, kInfinity, 2)));
}

TEST(CoxeterMatrix, Validation) {
  EXPECT_THROW(CoxeterMatrix::from_rows({{1, 3}, {2, 1}}), std::invalid_argument);
  EXPECT_THROW(CoxeterMatrix::from_rows({{1, 1}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(CoxeterMatrix::from_rows({{2, 3}, {3, 1}}), std::invalid_argument);
  EXPECT_EQ(CoxeterMatrix::from_rows({{1, 3}, {3, 1}}), finite_diagram('A', 2));
  EXPECT_THROW(affine_diagram('E', 5), std::invalid_argument);
  EXPECT_THROW(finite_diagram('H', 5), std::invalid_argument);
}

TEST(ConnectedComponents, Basic) {
  CoxeterMatrix m(5);
  m.set(0, 3, 3), m.set(1, 4, kInfinity);
  EXPECT_EQ(connected_components(m), (std::vector<std::vector<std::size_t>>{{0, 3}, {1, 4}, {2}}));
}

TEST(Isomorphism, DistinguishesLabels) {
  EXPECT_FALSE(diagrams_isomorphic(finite_diagram('B', 3), finite_diagram('A', 3)));
  EXPECT_FALSE(diagrams_isomorphic(triangle(3, 3, 4), triangle(3, 4, 4)));
  EXPECT_TRUE(diagrams_isomorphic(triangle(3, 4, 5), triangle(5, 3, 4)));
}

}  // namespace
