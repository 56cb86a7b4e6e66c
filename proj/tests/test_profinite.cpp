#include <gtest/gtest.h>

#include "coxkit/profinite.hpp"
#include "oracles.hpp"

namespace {

using namespace coxkit;
using namespace coxkit::profinite;
using perm::Permutation;
using perm::PermGroup;

Presentation pres(const char* text) { return perm::parse_presentation(text); }

const FingerprintEntry& entry(const Fingerprint& f, std::string_view key) {
  const auto& id = Catalog::instance().at(key).id;
  for (const auto& e : f.entries)
    if (e.id == id) return e;
  throw std::out_of_range("no entry");
}

TEST(Catalog, MatchesCensus) {
  const auto& cat = Catalog::instance();
  EXPECT_EQ(census(1), 1u);
  EXPECT_EQ(census(8), 5u);
  EXPECT_EQ(census(16), 14u);
  EXPECT_EQ(census(24), 15u);
  EXPECT_EQ(census(31), 1u);
  std::size_t total = 0;
  for (std::size_t n = 1; n <= kMaxBound; ++n) {
    EXPECT_EQ(cat.count_of_order(n), census(n)) << n;
    total += census(n);
  }
  EXPECT_EQ(cat.entries().size(), total);
  for (std::size_t i = 1; i < cat.entries().size(); ++i)
    EXPECT_LE(cat.entries()[i - 1].order, cat.entries()[i].order);
  for (const auto& e : cat.entries()) {
    EXPECT_EQ(e.group.order(), e.order) << e.id;
    EXPECT_EQ(e.table.order(), e.order) << e.id;
  }
}

TEST(Catalog, EntriesOfSmallOrderArePairwiseNonIsomorphic) {
  const auto& es = Catalog::instance().entries();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size() && es[j].order == es[i].order; ++j)
      if (es[i].order <= 12) EXPECT_FALSE(perm::find_isomorphism(es[i].table, es[j].table).has_value()) << es[i].id;
}

TEST(Catalog, Lookup) {
  const auto& cat = Catalog::instance();
  ASSERT_NE(cat.find("S3"), nullptr);
  EXPECT_EQ(cat.find("S3")->order, 6u);
  EXPECT_EQ(cat.find(cat.find("Q8")->id), cat.find("Q8"));
  EXPECT_EQ(cat.find("nope"), nullptr);
  EXPECT_ANY_THROW(cat.at("nope"));
  EXPECT_FALSE(cat.at("Q8").group.is_abelian());
}

TEST(Catalog, ParseRejectsMalformedText) {
  EXPECT_THROW(Catalog::parse("garbage line\n"), std::runtime_error);
}

TEST(Fingerprint, CyclicOfOrderTwo) {
  const auto f = fingerprint(pres("gens s\nrel s^2\n"), 6);
  EXPECT_EQ(f.bound, 6u);
  for (const auto& e : f.entries) {
    EXPECT_EQ(e.counts.epis != 0, e.order <= 2) << e.id;
    if (e.order == 2) EXPECT_EQ(e.counts, (HomCount{2, 1}));
  }
}

TEST(Fingerprint, TrivialPresentation) {
  const auto f = fingerprint(pres("gens\n"), 8);
  for (const auto& e : f.entries) EXPECT_EQ(e.counts, (HomCount{1, e.order == 1 ? 1u : 0u})) << e.id;
}

TEST(Fingerprint, GeneralInvariants) {
  const auto f = fingerprint(pres("gens a b\nrel a^2\nrel b^3\n"), 12);
  ASSERT_FALSE(f.entries.empty());
  EXPECT_EQ(f.entries.front().order, 1u);
  EXPECT_EQ(f.entries.front().counts, (HomCount{1, 1}));
  for (const auto& e : f.entries) EXPECT_LE(e.counts.epis, e.counts.homs);
}

TEST(Fingerprint, AgreesWithBruteForce) {
  const char* texts[] = {"gens a b\nrel a^2\nrel b^2\nrel (a b)^3\n", "gens a b\nrel a b a^-1 b^-1\n",
                         "gens x\nrel x^4\n"};
  for (const char* t : texts) {
    const auto p = pres(t);
    const auto f = fingerprint(p, 8);
    for (const auto& e : f.entries) {
      const auto& c = Catalog::instance().at(e.id);
      const auto want = oracle::hom_count(p, oracle::elements_of(c.generators, c.order), c.order);
      EXPECT_EQ(e.counts.homs, want.homs) << t << e.id;
      EXPECT_EQ(e.counts.epis, want.epis) << t << e.id;
    }
  }
}

TEST(Fingerprint, Budget) {
  EXPECT_THROW(fingerprint(pres("gens a b c\n"), 12, 100), SearchBudgetExceeded);
}

TEST(Compare, CyclicVersusKlein) {
  const auto z4 = fingerprint(pres("gens a\nrel a^4\n"), 4);
  const auto v4 = fingerprint(pres("gens a b\nrel a^2\nrel b^2\nrel a b a^-1 b^-1\n"), 4);
  const auto c = compare(z4, v4);
  EXPECT_FALSE(c.equal);
  EXPECT_EQ(c.order, 2u);
  EXPECT_EQ(c.first, (HomCount{2, 1}));
  EXPECT_EQ(c.second, (HomCount{4, 3}));
  EXPECT_EQ(entry(z4, "C2xC2").counts.epis, 0u);
  EXPECT_EQ(entry(v4, "C2xC2").counts.epis, 6u);
  EXPECT_NE(format_comparison(c).find(c.id), std::string::npos);
  EXPECT_TRUE(compare(z4, z4).equal);
  EXPECT_THROW(compare(z4, fingerprint(pres("gens a\nrel a^4\n"), 5)), BoundMismatch);
}

TEST(Compare, TriangleVersusInfiniteDihedral) {
  const auto tri = fingerprint(presentation_of_coxeter(diagram::affine_diagram('A', 2)), 6);
  const auto dih = fingerprint(presentation_of_coxeter(diagram::affine_diagram('A', 1)), 6);
  EXPECT_FALSE(compare(tri, dih).equal);
  EXPECT_GT(entry(tri, "S3").counts.epis, 0u);
}

TEST(Format, RoundTrip) {
  const auto f = fingerprint(pres("gens a b\nrel a^3\n"), 10);
  EXPECT_EQ(parse_fingerprint(format_fingerprint(f)), f);
  EXPECT_EQ(format_fingerprint(f).rfind("bound 10", 0), 0u);
  EXPECT_THROW(parse_fingerprint("bound x\n"), std::runtime_error);
  EXPECT_THROW(parse_fingerprint("2 2.1 1\n"), std::runtime_error);
}

TEST(Presentations, Coxeter) {
  const auto p = presentation_of_coxeter(diagram::affine_diagram('A', 2));
  EXPECT_EQ(p.generator_count(), 3u);
  EXPECT_EQ(p.relators.size(), 6u);
  // infinite labels give no relator
  EXPECT_EQ(presentation_of_coxeter(diagram::affine_diagram('A', 1)).relators.size(), 2u);
}

TEST(Presentations, CrystallographicGroups) {
  const auto z2 = PermGroup::closure({Permutation::parse("(1 2)", 2)});
  const crysto::CrystGroup dinf(1, z2, {crysto::IMat{{-1}}});
  const auto a = fingerprint(presentation_of_cryst(dinf), 8);
  const auto b = fingerprint(pres("gens a b\nrel a^2\nrel b^2\n"), 8);
  EXPECT_TRUE(compare(a, b).equal) << format_comparison(compare(a, b));

  const crysto::CrystGroup z2lattice(2, PermGroup::closure({}, 1), {});
  const auto lat = fingerprint(presentation_of_cryst(z2lattice), 4);
  EXPECT_EQ(entry(lat, "C2").counts.homs, 4u);
  EXPECT_EQ(entry(lat, "C2xC2").counts.epis, 6u);

  const auto a2 = fingerprint(presentation_of_cryst(crysto::build_affine_An(2).group), 6);
  EXPECT_GT(entry(a2, "S3").counts.epis, 0u);
}

}  // namespace
