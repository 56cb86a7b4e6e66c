#include <gtest/gtest.h>

#include <random>
#include <set>

#include "coxkit/crysto.hpp"

namespace {

using namespace coxkit;
using crysto::CrystElement;
using crysto::CrystGroup;
using crysto::IMat;
using perm::Permutation;
using perm::PermGroup;

PermGroup z2() { return PermGroup::closure({Permutation::parse("(1 2)", 2)}); }

CrystGroup z2_by(const IMat& m) { return CrystGroup(m.rows(), z2(), {m}); }

TEST(CrystGroup, Faithfulness) {
  EXPECT_TRUE(crysto::is_faithful(z2_by(IMat{{-1, 0}, {0, -1}})));
  EXPECT_FALSE(crysto::is_faithful(z2_by(IMat{{1, 0}, {0, 1}})));
  EXPECT_TRUE(crysto::is_faithful(crysto::build_affine_An(2).group));
}

TEST(CrystGroup, RejectsNonHomomorphism) {
  // the generator has order 2 but the matrix has order 4
  EXPECT_THROW(z2_by(IMat{{0, -1}, {1, 0}}), std::invalid_argument);
}

TEST(CrystGroup, GroupAxiomsOnRandomElements) {
  const auto model = crysto::build_affine_An(3);
  const auto& G = model.group;
  std::mt19937_64 rng(1);
  auto random_element = [&] {
    crysto::Vec v(G.rank());
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % 11) - 5;
    return CrystElement{v, static_cast<perm::Index>(rng() % G.point_group().order())};
  };
  for (int t = 0; t < 200; ++t) {
    const auto a = random_element(), b = random_element(), c = random_element();
    EXPECT_EQ(G.multiply(G.multiply(a, b), c), G.multiply(a, G.multiply(b, c)));
    EXPECT_EQ(G.multiply(a, G.identity()), a);
    EXPECT_EQ(G.multiply(G.identity(), a), a);
    EXPECT_EQ(G.multiply(a, G.inverse(a)), G.identity());
    EXPECT_EQ(G.multiply(G.inverse(a), a), G.identity());
    EXPECT_EQ(crysto::cryst_multiply(G, a, b), G.multiply(a, b));
    // conjugation by (0, g) acts on translations by rho(g)
    const auto tr = G.translation(a.v);
    const auto conj = G.multiply(G.multiply(G.point(b.g), tr), G.inverse(G.point(b.g)));
    ASSERT_TRUE(G.is_translation(conj));
    const auto& rho = G.rho(b.g);
    for (std::size_t i = 0; i < G.rank(); ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < G.rank(); ++j) s += rho(i, j) * a.v[j];
      EXPECT_EQ(conj.v[i], s);
    }
  }
}

TEST(CrystGroup, OverflowIsReported) {
  const auto G = z2_by(IMat{{-1}});
  const auto big = G.translation({std::numeric_limits<std::int64_t>::max() / 2 + 1});
  EXPECT_THROW(G.multiply(big, big), crysto::OverflowError);
}

TEST(Irreducibility, Examples) {
  const auto model = crysto::build_affine_An(2);
  EXPECT_EQ(crysto::irreducibility_status(model.group).status, crysto::Irreducibility::Irreducible);

  const auto swap = crysto::irreducibility_status(z2_by(IMat{{0, 1}, {1, 0}}));
  ASSERT_EQ(swap.status, crysto::Irreducibility::Reducible);
  ASSERT_FALSE(swap.witness.empty());
  ASSERT_LT(swap.witness.size(), 2u);
  // an invariant line of the swap is spanned by (1,1) or (1,-1)
  const auto& w = swap.witness[0];
  EXPECT_TRUE(w[0] == w[1] || w[0] == -w[1]);

  // block-diagonal product representation
  const PermGroup g0 = PermGroup::closure({Permutation::parse("(1 2)", 4), Permutation::parse("(3 4)", 4)});
  const CrystGroup block(4, g0, {IMat{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
                                 IMat{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}});
  EXPECT_EQ(crysto::irreducibility_status(block).status, crysto::Irreducibility::Reducible);
}

TEST(Irreducibility, Deterministic) {
  const auto G = z2_by(IMat{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});
  const auto a = crysto::irreducibility_status(G), b = crysto::irreducibility_status(G);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(AffineModel, InfiniteDihedral) {
  const auto m = crysto::build_affine_An(1);
  const auto t = m.word({0, 1});
  EXPECT_TRUE(m.group.is_translation(t));
  EXPECT_NE(t, m.group.identity());
  EXPECT_FALSE(crysto::element_order(m.group, t, 50).has_value());
}

TEST(AffineModel, A2) {
  const auto m = crysto::build_affine_An(2);
  const auto& G = m.group;
  ASSERT_EQ(m.translations.size(), 2u);
  const auto &t1 = m.translations[0], &t2 = m.translations[1];
  EXPECT_EQ(G.multiply(t1, t2), G.multiply(t2, t1));
  EXPECT_NE(t1.v[0] * t2.v[1] - t1.v[1] * t2.v[0], 0);
  EXPECT_EQ(crysto::element_order(G, m.word({0, 1}), 10), 3u);
  EXPECT_EQ(G.power(m.word({0, 1}), 3), G.identity());
  EXPECT_EQ(m.word({0, 1, 1, 2, 1, 2}), t1);
  EXPECT_EQ(m.word({1, 2, 2, 0, 2, 0}), t2);
}

TEST(AffineModel, CoxeterRelationsForSeveralRanks) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto m = crysto::build_affine_An(n);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) {
        const auto label = m.coxeter(i, j);
        if (label == diagram::kInfinity) continue;
        EXPECT_EQ(crysto::element_order(m.group, m.word({i, j}), 10), i == j ? 1u : label);
      }
  }
}

TEST(VerifyPhi, AllChecksPass) {
  const auto rep = crysto::verify_a2_phi(8);
  EXPECT_TRUE(rep.passed()) << rep.render();
  EXPECT_EQ(rep.count(report::Status::Fail), 0u);
}

PermGroup S3() { return PermGroup::closure({Permutation::parse("(1 2)", 3), Permutation::parse("(1 2 3)", 3)}); }

void expect_automorphism(const crysto::ComplementSwap& sw, const PermGroup& g, const PermGroup& h, const PermGroup& k2,
                         const PermGroup& k) {
  std::set<Permutation> image;
  for (perm::Index i = 0; i < g.order(); ++i) image.insert(sw.apply(g.element(i)));
  EXPECT_EQ(image.size(), g.order());
  for (perm::Index i = 0; i < g.order(); ++i)
    for (perm::Index j = 0; j < g.order(); ++j)
      EXPECT_EQ(sw.apply(g.element(i) * g.element(j)), sw.apply(g.element(i)) * sw.apply(g.element(j)));
  for (perm::Index i = 0; i < h.order(); ++i) EXPECT_EQ(sw.apply(h.element(i)), h.element(i));
  for (perm::Index i = 0; i < k.order(); ++i) EXPECT_TRUE(k2.contains(sw.apply(k.element(i))));
}

TEST(ComplementSwap, S3) {
  const auto g = S3();
  const auto h = PermGroup::closure({Permutation::parse("(1 2 3)", 3)});
  const auto k = PermGroup::closure({Permutation::parse("(1 2)", 3)});
  const auto k2 = PermGroup::closure({Permutation::parse("(1 3)", 3)});
  const auto sw = crysto::complement_swap(g, h, k, k2);
  expect_automorphism(sw, g, h, k2, k);
  EXPECT_EQ(sw.apply(Permutation::parse("(1 2)", 3)), Permutation::parse("(1 3)", 3));
}

TEST(ComplementSwap, SameComplementIsIdentity) {
  const auto g = S3();
  const auto h = PermGroup::closure({Permutation::parse("(1 2 3)", 3)});
  const auto k = PermGroup::closure({Permutation::parse("(1 2)", 3)});
  const auto sw = crysto::complement_swap(g, h, k, k);
  for (perm::Index i = 0; i < g.order(); ++i) EXPECT_EQ(sw.apply(g.element(i)), g.element(i));
}

TEST(ComplementSwap, KleinFour) {
  const auto g = PermGroup::closure({Permutation::parse("(1 2)", 4), Permutation::parse("(3 4)", 4)});
  const auto h = PermGroup::closure({Permutation::parse("(1 2)", 4)});
  const auto k = PermGroup::closure({Permutation::parse("(3 4)", 4)});
  const auto k2 = PermGroup::closure({Permutation::parse("(1 2)(3 4)", 4)});
  const auto sw = crysto::complement_swap(g, h, k, k2);
  expect_automorphism(sw, g, h, k2, k);
  EXPECT_EQ(sw.apply(Permutation::parse("(3 4)", 4)), Permutation::parse("(1 2)(3 4)", 4));
}

TEST(ComplementSwap, Errors) {
  const auto s4 = PermGroup::closure({Permutation::parse("(1 2)", 4), Permutation::parse("(1 2 3 4)", 4)});
  const auto a4 = PermGroup::closure({Permutation::parse("(1 2 3)", 4), Permutation::parse("(2 3 4)", 4)});
  const auto k = PermGroup::closure({Permutation::parse("(1 2)", 4)});
  EXPECT_THROW(crysto::complement_swap(s4, a4, k, k), crysto::HNotAbelian);
  const auto g = S3();
  const auto h = PermGroup::closure({Permutation::parse("(1 2 3)", 3)});
  EXPECT_THROW(crysto::complement_swap(g, h, h, h), crysto::NotAComplement);
}

TEST(ComplementSwap, RandomInstances) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const auto inst = crysto::random_split_instance(rng, 200);
    const auto sw = crysto::complement_swap(inst.g, inst.h, inst.k, inst.k2);
    expect_automorphism(sw, inst.g, inst.h, inst.k2, inst.k);
  }
}

TEST(ComplementSwap, ReportPasses) {
  const auto rep = crysto::verify_complement_swap(3, 10);
  EXPECT_TRUE(rep.passed()) << rep.render();
  EXPECT_EQ(rep.checks.size(), 11u);
}

}  // namespace
