#include "coxkit/amalgam.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <random>

namespace coxkit::amalgam {

char side_name(Side s) { return s == Side::A ? 'A' : 'B'; }

FinAmalgam::Factor FinAmalgam::make_factor(PermGroup g, const PermGroup& c, const std::vector<Permutation>& gens,
                                           const char* name) {
  Factor f;
  f.group = std::move(g);
  const PermGroup& x = f.group;
  std::vector<Index> images;
  for (const auto& p : gens) {
    auto i = x.index_of(p);
    if (!i) throw NotHomomorphism(std::string("image ") + p.to_string() + " of a generator of C is not in " + name);
    images.push_back(*i);
  }
  auto bad = perm::extend_along_tree(
      c, images, Index{0}, [&](Index a, Index b) { return x.multiply(a, b); }, [](Index a, Index b) { return a == b; },
      f.embed);
  if (bad) throw NotHomomorphism(std::string("embedding of C into ") + name + " is not a homomorphism");
  std::vector<Index> preimage(x.order(), ~Index{0});
  for (Index i = 0; i < c.order(); ++i) {
    if (preimage[f.embed[i]] != ~Index{0}) throw NotInjective(std::string("embedding of C into ") + name + " is not injective");
    preimage[f.embed[i]] = i;
  }

  constexpr Index kUnset = ~Index{0};
  f.split_c.assign(x.order(), kUnset);
  f.split_t.assign(x.order(), kUnset);
  for (Index a = 0; a < x.order(); ++a) {
    if (f.split_t[a] != kUnset) continue;
    Index best = a;
    for (Index ci = 0; ci < c.order(); ++ci) {
      const Index m = x.multiply(f.embed[ci], a);
      const auto pm = x.points(m), pb = x.points(best);
      if (std::lexicographical_compare(pm.begin(), pm.end(), pb.begin(), pb.end())) best = m;
    }
    f.transversal.push_back(best);
    for (Index ci = 0; ci < c.order(); ++ci) {
      const Index m = x.multiply(f.embed[ci], best);
      f.split_c[m] = ci;
      f.split_t[m] = best;
    }
  }
  return f;
}

FinAmalgam::FinAmalgam(PermGroup a, PermGroup b, PermGroup c, const std::vector<Permutation>& embed_a_gens,
                       const std::vector<Permutation>& embed_b_gens)
    : c_(std::move(c)) {
  if (embed_a_gens.size() != c_.generators().size() || embed_b_gens.size() != c_.generators().size())
    throw std::invalid_argument("need one image per generator of C");
  f_[0] = make_factor(std::move(a), c_, embed_a_gens, "A");
  f_[1] = make_factor(std::move(b), c_, embed_b_gens, "B");
}

void FinAmalgam::prepend(Side s, Index a, AmalgamElement& x) const {
  const Factor& f = f_[static_cast<int>(s)];
  const Index ac = f.group.multiply(a, f.embed[x.c]);
  if (!x.syllables.empty() && x.syllables.front().side == s) {
    const auto [c, t] = split(s, f.group.multiply(ac, x.syllables.front().t));
    x.c = c;
    if (t == 0)
      x.syllables.erase(x.syllables.begin());
    else
      x.syllables.front().t = t;
  } else {
    const auto [c, t] = split(s, ac);
    x.c = c;
    if (t != 0) x.syllables.insert(x.syllables.begin(), Syllable{s, t});
  }
}

AmalgamElement FinAmalgam::from_factor(Side s, Index a) const {
  AmalgamElement x;
  prepend(s, a, x);
  return x;
}

AmalgamElement FinAmalgam::from_factor(Side s, const Permutation& p) const { return from_factor(s, factor(s).require_index(p)); }

AmalgamElement FinAmalgam::normalize(std::span<const RawElement> seq) const {
  AmalgamElement x;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) prepend(it->side, it->a, x);
  return x;
}

std::vector<RawElement> FinAmalgam::raw(const AmalgamElement& x) const {
  std::vector<RawElement> out;
  out.reserve(x.syllables.size() + 1);
  out.push_back({Side::A, embed(Side::A, x.c)});
  for (const auto& s : x.syllables) out.push_back({s.side, s.t});
  return out;
}

AmalgamElement FinAmalgam::multiply(const AmalgamElement& x, const AmalgamElement& y) const {
  AmalgamElement out = y;
  for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it) prepend(it->side, it->t, out);
  prepend(Side::A, embed(Side::A, x.c), out);
  return out;
}

AmalgamElement FinAmalgam::inverse(const AmalgamElement& x) const {
  AmalgamElement out;
  // (c t1 ... tk)^-1 = tk^-1 ... t1^-1 c^-1
  prepend(Side::A, factor(Side::A).inverse(embed(Side::A, x.c)), out);
  for (const auto& s : x.syllables) prepend(s.side, factor(s.side).inverse(s.t), out);
  return out;
}

AmalgamElement FinAmalgam::power(const AmalgamElement& x, long long k) const {
  const AmalgamElement base = k < 0 ? inverse(x) : x;
  AmalgamElement acc;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) acc = multiply(acc, base);
  return acc;
}

AmalgamElement FinAmalgam::conjugate(const AmalgamElement& x, const AmalgamElement& y) const {
  return multiply(multiply(x, y), inverse(x));
}

std::string FinAmalgam::to_string(const AmalgamElement& x) const {
  std::string s = "[c=" + c_.element(x.c).to_string() + "]";
  for (const auto& syl : x.syllables) s += std::string(" ") + side_name(syl.side) + ":" + factor(syl.side).element(syl.t).to_string();
  return s;
}

std::string FinAmalgam::pattern(const AmalgamElement& x) const {
  std::string s;
  for (const auto& syl : x.syllables) s += side_name(syl.side);
  return s.empty() ? "C" : s;
}

// ---------------------------------------------------------------------------
// Endomorphisms

AmalgamElement AmalgamEndo::apply(const AmalgamElement& x) const {
  AmalgamElement out = table_[0][g_->embed(Side::A, x.c)];
  for (const auto& s : x.syllables) out = g_->multiply(out, table_[static_cast<int>(s.side)][s.t]);
  return out;
}

AmalgamEndo define_endo(const FinAmalgam& g, const std::vector<AmalgamElement>& images_a,
                        const std::vector<AmalgamElement>& images_b) {
  AmalgamEndo e;
  e.g_ = &g;
  const std::vector<AmalgamElement>* images[2] = {&images_a, &images_b};
  for (Side s : {Side::A, Side::B}) {
    const PermGroup& x = g.factor(s);
    const auto& imgs = *images[static_cast<int>(s)];
    if (imgs.size() != x.generators().size())
      throw std::invalid_argument(std::string("need one image per generator of ") + side_name(s));
    auto bad = perm::extend_along_tree(
        x, imgs, g.identity(), [&](const AmalgamElement& a, const AmalgamElement& b) { return g.multiply(a, b); },
        [](const AmalgamElement& a, const AmalgamElement& b) { return a == b; }, e.table_[static_cast<int>(s)]);
    if (bad) {
      const auto [elem, gen] = *bad;
      std::vector<std::string> names;
      for (std::size_t k = 0; k < x.generators().size(); ++k) names.push_back(x.generators()[k].to_string());
      perm::GroupWord w = perm::group_word_of(x, elem);
      w.push_back(static_cast<perm::Letter>(gen) + 1);
      const perm::GroupWord back = perm::inverse(perm::group_word_of(x, x.right_multiply(elem, gen)));
      w.insert(w.end(), back.begin(), back.end());
      throw RelatorViolated(perm::format_group_word(w, names), s);
    }
  }
  for (std::size_t k = 0; k < g.c().generators().size(); ++k) {
    const Index ck = g.c().require_index(g.c().generators()[k]);
    if (!(e.table_[0][g.embed(Side::A, ck)] == e.table_[1][g.embed(Side::B, ck)])) throw DisagreeOnC(k);
  }
  return e;
}

// ---------------------------------------------------------------------------
// The 12-point example

namespace {

std::vector<Permutation> simple_transpositions(std::size_t degree, std::size_t first, std::size_t last) {
  std::vector<Permutation> out;
  for (std::size_t i = first; i < last; ++i) out.push_back(Permutation::cycle(degree, {i, i + 1}));
  return out;
}

Permutation p12(const char* text) { return Permutation::parse(text, 12); }

}  // namespace

CounterexampleAmalgam build_counterexample_amalgam() {
  auto a_gens = simple_transpositions(12, 1, 6);
  for (auto& g : simple_transpositions(12, 7, 12)) a_gens.push_back(g);
  auto b_gens = simple_transpositions(12, 1, 4);
  for (auto& g : simple_transpositions(12, 5, 7)) b_gens.push_back(g);
  for (auto& g : simple_transpositions(12, 8, 12)) b_gens.push_back(g);

  const Permutation e_a[4] = {p12("(1 2)"), p12("(3 4)"), p12("(7 8)"), p12("(9 10)")};
  const Permutation e_b[4] = {p12("(5 6)"), p12("(1 2)"), p12("(3 4)"), p12("(8 9)")};
  PermGroup c = PermGroup::closure({e_a[0], e_a[1], e_a[2], e_a[3]}, 12);

  FinAmalgam g(PermGroup::closure(a_gens, 12), PermGroup::closure(b_gens, 12), c, {e_a[0], e_a[1], e_a[2], e_a[3]},
               {e_b[0], e_b[1], e_b[2], e_b[3]});
  CounterexampleAmalgam out{std::move(g),
                            {e_a[0], e_a[1], e_a[2], e_a[3]},
                            {e_b[0], e_b[1], e_b[2], e_b[3]},
                            p12("(1 3)(2 4)(5 6)"),
                            p12("(7 9)(8 10)(11 12)"),
                            p12("(1 3)(2 4)"),
                            p12("(1 7)(2 8)(3 9)(4 10)(5 11)(6 12)"),
                            {},
                            {},
                            {},
                            {},
                            {}};
  const FinAmalgam& G = out.g;
  for (int i = 0; i < 4; ++i) out.e[i] = G.from_factor(Side::A, out.e_a[i]);
  out.ex = G.from_factor(Side::A, out.x);
  out.ey = G.from_factor(Side::A, out.y);
  out.eb = G.from_factor(Side::B, out.b);
  const RawElement seq[] = {{Side::B, G.factor(Side::B).require_index(out.b)},
                            {Side::A, G.factor(Side::A).require_index(out.x)},
                            {Side::A, G.factor(Side::A).require_index(out.y)},
                            {Side::B, G.factor(Side::B).require_index(out.b)}};
  out.u = G.normalize(seq);
  return out;
}

namespace {

// Action by conjugation on {e1..e4}: result[i] = j with w e_i w^-1 = e_j, or
// -1 if the conjugate is not one of them.
std::vector<int> action_on_e(const CounterexampleAmalgam& ex, const AmalgamElement& w) {
  std::vector<int> out(4, -1);
  for (int i = 0; i < 4; ++i) {
    const AmalgamElement c = ex.g.conjugate(w, ex.e[i]);
    for (int j = 0; j < 4; ++j)
      if (c == ex.e[j]) out[i] = j;
  }
  return out;
}

std::string action_string(const std::vector<int>& a) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (i) s += ", ";
    s += "e" + std::to_string(i + 1) + "->" + (a[i] < 0 ? std::string("?") : "e" + std::to_string(a[i] + 1));
  }
  return s;
}

std::string types_string(const std::vector<std::size_t>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + "]";
}

}  // namespace

report::VerificationReport verify_amalgam_counterexample(std::uint64_t seed, std::size_t corpus) {
  report::VerificationReport rep;
  rep.section = "amalgam";
  const CounterexampleAmalgam ex = build_counterexample_amalgam();
  const FinAmalgam& G = ex.g;
  const auto& e = ex.e;
  auto conj = [&](const AmalgamElement& w, const AmalgamElement& x) { return G.conjugate(w, x); };
  auto fmt = [&](const AmalgamElement& x) { return G.to_string(x); };

  // check 1
  {
    const auto a = conj(ex.eb, e[1]), b = conj(ex.eb, e[2]);
    rep.add("b e2 b^-1 = e3 and b e3 b^-1 = e2", a == e[2] && b == e[1], fmt(a) + "; " + fmt(b));
  }
  // check 2
  {
    const bool ok = G.multiply(ex.eb, e[0]) == G.multiply(e[0], ex.eb) && G.multiply(ex.eb, e[3]) == G.multiply(e[3], ex.eb);
    rep.add("b commutes with e1 and e4", ok);
  }
  // check 3
  {
    const bool xs = conj(ex.ex, e[0]) == e[1] && conj(ex.ex, e[1]) == e[0];
    const bool ys = conj(ex.ey, e[2]) == e[3] && conj(ex.ey, e[3]) == e[2];
    rep.add("x swaps e1, e2 and y swaps e3, e4 by conjugation", xs && ys,
            "x: " + action_string(action_on_e(ex, ex.ex)) + "; y: " + action_string(action_on_e(ex, ex.ey)));
  }
  // check 4
  const Permutation swap_inv = ex.swap.inverse();
  auto sigma = [&](const Permutation& p) { return ex.swap * p * swap_inv; };
  std::vector<int> sigma_c(4, -1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (sigma(ex.e_a[i]) == ex.e_a[j]) sigma_c[i] = j;
  rep.add("sigma restricted to C is (e1 e3)(e2 e4)", sigma_c == std::vector<int>{2, 3, 0, 1}, action_string(sigma_c));

  // check 5
  const auto ad_u = action_on_e(ex, ex.u);
  std::vector<AmalgamElement> images_a, images_b;
  for (const auto& gen : G.factor(Side::A).generators()) images_a.push_back(G.from_factor(Side::A, sigma(gen)));
  for (const auto& gen : G.factor(Side::B).generators()) images_b.push_back(conj(ex.u, G.from_factor(Side::B, gen)));
  std::optional<AmalgamEndo> sigma_bar;
  std::string endo_detail;
  try {
    sigma_bar = define_endo(G, images_a, images_b);
    endo_detail = "accepted";
  } catch (const std::exception& err) {
    endo_detail = err.what();
  }
  rep.add("ad(u) restricted to C equals sigma restricted to C; sigma-bar is well defined",
          ad_u == sigma_c && sigma_bar.has_value(),
          "ad(u): " + action_string(ad_u) + "; define_endo: " + endo_detail + "; u = b x y b has reduced length " +
              std::to_string(ex.u.length()) + " (" + G.pattern(ex.u) + ")");

  // check 6
  const AmalgamElement bxy = G.multiply(G.multiply(ex.eb, ex.ex), ex.ey);
  const auto act = action_on_e(ex, bxy);
  const auto act5 = action_on_e(ex, G.power(bxy, 5));
  // 4-cycle e3 -> e4 -> e2 -> e1 -> e3
  rep.add("bxy acts on E as the 4-cycle (e3 e4 e2 e1) and (bxy)^5 acts as bxy",
          act == std::vector<int>{2, 0, 3, 1} && act5 == act, "bxy: " + action_string(act) + "; (bxy)^5: " + action_string(act5));

  // check 7
  {
    bool ok = sigma_bar.has_value();
    std::string detail;
    std::size_t tested = 0;
    if (ok) {
      ok = sigma_bar->apply(ex.ex) == ex.ey && sigma_bar->apply(ex.ey) == ex.ex;
      if (!ok) detail = "sigma-bar does not swap x and y; ";
      std::mt19937_64 rng(seed);
      for (std::size_t n = 0; n < corpus && ok; ++n) {
        AmalgamElement w;
        w.c = static_cast<Index>(rng() % G.c().order());
        const std::size_t len = rng() % 5;
        Side s = rng() % 2 ? Side::A : Side::B;
        for (std::size_t k = 0; k < len; ++k, s = other(s)) {
          const auto& reps = G.transversal(s);
          w.syllables.push_back({s, reps[1 + rng() % (reps.size() - 1)]});
        }
        if (w == G.identity()) continue;
        ++tested;
        if (sigma_bar->apply(w) == G.identity()) {
          ok = false;
          detail += "nontrivial " + fmt(w) + " maps to the identity; ";
        }
      }
    }
    rep.add("sigma-bar swaps x and y and keeps reduced words of length <= 4 nontrivial", ok,
            detail + std::to_string(tested) + " random nontrivial normal forms (evidence, not a proof of injectivity)");
  }

  // check 8
  {
    const std::size_t a2_points[] = {6, 7, 8, 9, 10, 11};
    const auto y_type = ex.y.restricted(a2_points).cycle_type();
    const PermGroup c2 = PermGroup::closure({ex.e_a[2], ex.e_a[3]}, 12);
    std::set<std::vector<std::size_t>> c_types;
    for (Index i = 0; i < c2.order(); ++i) c_types.insert(c2.element(i).restricted(a2_points).cycle_type());
    const std::set<std::vector<std::size_t>> allowed = {{1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, {2, 2, 1, 1}};
    std::string detail = "y: " + types_string(y_type) + "; <e3,e4>:";
    for (const auto& t : c_types) detail += " " + types_string(t);
    rep.add("y has cycle type [2,2,2] in A2, unlike every element of <e3,e4>",
            y_type == std::vector<std::size_t>{2, 2, 2} && c_types == allowed && !c_types.count(y_type), detail);
  }

  // check 9
  {
    const std::vector<std::size_t> pts1 = {0, 1, 2, 3}, pts2 = {4, 5, 6}, pts3 = {7, 8, 9, 10, 11};
    auto restrict_group = [&](const std::vector<std::size_t>& pts) {
      std::vector<Permutation> gens;
      for (const auto& gen : G.factor(Side::B).generators()) {
        const auto r = gen.restricted(std::vector<std::size_t>(pts));
        if (!r.is_identity()) gens.push_back(r);
      }
      return PermGroup::closure(gens, pts.size());
    };
    const PermGroup bs[3] = {restrict_group(pts1), restrict_group(pts2), restrict_group(pts3)};
    bool ok = true;
    std::string detail = "orders";
    for (const auto& bi : bs) {
      detail += " " + std::to_string(bi.order());
      ok = ok && center(bi).order() == 1;
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) ok = ok && !perm::is_isomorphic_small(bs[i], bs[j]);
    rep.add("B1, B2, B3 are pairwise non-isomorphic with trivial centers", ok, detail);
  }

  // check 10
  {
    const AmalgamElement ubu = conj(ex.u, ex.eb);
    const AmalgamElement lhs = G.multiply(G.multiply(G.multiply(ubu, ex.ey), ex.ex), ubu);
    const AmalgamElement rhs = G.multiply(G.power(bxy, 5), ex.eb);
    const auto al = action_on_e(ex, lhs), ar = action_on_e(ex, rhs);
    rep.add("u b u^-1 y x u b u^-1 acts on E as (bxy)^5 b", al == ar && std::find(al.begin(), al.end(), -1) == al.end(),
            action_string(al) + " vs " + action_string(ar));
  }

  rep.skip("B is not contained in the image of sigma-bar",
           "image membership in the amalgam needs machinery not implemented here");
  return rep;
}

}  // namespace coxkit::amalgam
