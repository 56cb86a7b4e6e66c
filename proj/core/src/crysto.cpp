#include "coxkit/crysto.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace coxkit::crysto {

using exact::Rational;
using perm::Index;
using perm::Permutation;
using perm::PermGroup;

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in crystallographic arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in crystallographic arithmetic");
  return r;
}

IMat mat_mul(const IMat& a, const IMat& b) {
  IMat out(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = checked_add(out(i, j), checked_mul(a(i, k), b(k, j)));
    }
  return out;
}

Vec mat_vec(const IMat& a, const Vec& v) {
  Vec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] = checked_add(out[i], checked_mul(a(i, j), v[j]));
  return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

exact::RatMatrix to_rat(const IMat& m) { return exact::to_rat_matrix(exact::to_int_matrix(m)); }

std::string vec_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

CrystGroup::CrystGroup(std::size_t rank, PermGroup point_group, std::vector<IMat> rho_generators)
    : n_(rank), g0_(std::move(point_group)), rho_gens_(std::move(rho_generators)) {
  if (rho_gens_.size() != g0_.generators().size())
    throw std::invalid_argument("need one matrix per point-group generator");
  for (const auto& m : rho_gens_) {
    if (m.rows() != n_ || m.cols() != n_) throw std::invalid_argument("rho matrix has the wrong shape");
    const auto det = exact::determinant(exact::to_int_matrix(m));
    if (det != 1 && det != -1) throw std::invalid_argument("rho matrix is not invertible over the integers");
  }
  auto bad = perm::extend_along_tree(
      g0_, rho_gens_, IMat::identity(n_, 1, 0), mat_mul, [](const IMat& a, const IMat& b) { return a == b; }, rho_);
  if (bad)
    throw std::invalid_argument("rho does not define a homomorphism: edge at element " + g0_.element(bad->first).to_string() +
                                ", generator " + std::to_string(bad->second + 1));
}

CrystElement CrystGroup::translation(Vec v) const {
  if (v.size() != n_) throw std::invalid_argument("translation vector has the wrong length");
  return {std::move(v), 0};
}

CrystElement CrystGroup::point_generator(std::size_t k) const {
  return {Vec(n_, 0), g0_.require_index(g0_.generators().at(k))};
}

CrystElement CrystGroup::multiply(const CrystElement& a, const CrystElement& b) const {
  return {vec_add(a.v, mat_vec(rho_[a.g], b.v)), g0_.multiply(a.g, b.g)};
}

CrystElement CrystGroup::inverse(const CrystElement& a) const {
  const Index gi = g0_.inverse(a.g);
  Vec v = mat_vec(rho_[gi], a.v);
  for (auto& x : v) x = checked_mul(x, -1);
  return {std::move(v), gi};
}

CrystElement CrystGroup::power(const CrystElement& a, long long k) const {
  CrystElement base = k < 0 ? inverse(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  CrystElement acc = identity();
  while (e) {
    if (e & 1) acc = multiply(acc, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return acc;
}

std::string CrystGroup::to_string(const CrystElement& a) const {
  return "(" + vec_string(a.v) + ", " + g0_.element(a.g).to_string() + ")";
}

CrystElement cryst_multiply(const CrystGroup& g, const CrystElement& a, const CrystElement& b) { return g.multiply(a, b); }

std::optional<std::size_t> element_order(const CrystGroup& g, const CrystElement& a, std::size_t bound) {
  CrystElement acc = a;
  const CrystElement id = g.identity();
  for (std::size_t k = 1; k <= bound; ++k) {
    if (acc == id) return k;
    if (k < bound) acc = g.multiply(acc, a);
  }
  return std::nullopt;
}

bool is_faithful(const CrystGroup& g) {
  const IMat id = IMat::identity(g.rank(), 1, 0);
  for (Index i = 1; i < g.point_group().order(); ++i)
    if (g.rho(i) == id) return false;
  return true;
}

std::string_view to_string(Irreducibility s) {
  switch (s) {
    case Irreducibility::Irreducible:
      return "Irreducible";
    case Irreducibility::Reducible:
      return "Reducible";
    case Irreducibility::Undetermined:
      return "Undetermined";
  }
  return "?";
}

namespace {

using RatVec = std::vector<Rational>;

// Reduced row echelon basis of the span of `rows`.
std::vector<RatVec> rref_basis(std::vector<RatVec> rows, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<RatVec> spin(const std::vector<exact::RatMatrix>& gens, const RatVec& v, std::size_t n) {
  std::vector<RatVec> basis = rref_basis({v}, n);
  std::vector<RatVec> queue{v};
  for (std::size_t head = 0; head < queue.size() && basis.size() < n; ++head)
    for (const auto& m : gens) {
      RatVec w(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i] += m(i, j) * queue[head][j];
      auto grown = basis;
      grown.push_back(w);
      grown = rref_basis(std::move(grown), n);
      if (grown.size() > basis.size()) {
        basis = std::move(grown);
        queue.push_back(std::move(w));
      }
    }
  return basis;
}

std::vector<RatVec> probe_vectors(std::size_t n, std::size_t max_probes) {
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n, 0);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  // Remaining {-1,0,1} vectors, first nonzero +1, by support size.
  std::vector<std::vector<int>> extra;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n && total <= 1'000'000; ++i) total *= 3;
  for (std::size_t code = 0; code < total && extra.size() < 4096; ++code) {
    std::vector<int> digits(n, 0);
    std::size_t c = code;
    for (std::size_t i = n; i-- > 0; c /= 3) digits[i] = c % 3 == 0 ? 0 : (c % 3 == 1 ? 1 : -1);
    const auto first = std::find_if(digits.begin(), digits.end(), [](int x) { return x != 0; });
    const auto support = std::count_if(digits.begin(), digits.end(), [](int x) { return x != 0; });
    if (first != digits.end() && *first == 1 && support >= 2) extra.push_back(std::move(digits));
  }
  std::stable_sort(extra.begin(), extra.end(), [](const auto& a, const auto& b) {
    return std::count_if(a.begin(), a.end(), [](int x) { return x != 0; }) <
           std::count_if(b.begin(), b.end(), [](int x) { return x != 0; });
  });
  for (const auto& d : extra) {
    if (out.size() >= n + max_probes) break;
    out.emplace_back(d.begin(), d.end());
  }
  return out;
}

}  // namespace

IrreducibilityResult irreducibility_status(const CrystGroup& g, std::size_t max_probes) {
  const std::size_t n = g.rank();
  std::vector<exact::RatMatrix> gens;
  for (const auto& m : g.rho_generators()) gens.push_back(to_rat(m));
  IrreducibilityResult out;
  if (n == 0) return out;
  if (exact::commutant_dimension(gens, n) == 1) {
    out.status = Irreducibility::Irreducible;
    return out;
  }
  for (const auto& v : probe_vectors(n, max_probes)) {
    auto basis = spin(gens, v, n);
    if (basis.size() < n) {
      out.status = Irreducibility::Reducible;
      out.witness = std::move(basis);
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ~A_n

CrystElement AffineCoxeterModel::word(const titsrep::Word& w) const {
  CrystElement acc = group.identity();
  for (std::size_t i : w) acc = group.multiply(acc, s.at(i));
  return acc;
}

namespace {

// Action of a permutation of {0..n} on the A_n root lattice, simple-root basis.
IMat root_lattice_matrix(const Permutation& p) {
  const std::size_t n = p.degree() - 1;
  IMat m(n, n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<long long> x(n + 1, 0);
    x[p(j)] += 1;
    x[p(j + 1)] -= 1;
    long long partial = 0;
    for (std::size_t i = 0; i < n; ++i) {
      partial += x[i];
      m(i, j) = partial;
    }
  }
  return m;
}

}  // namespace

AffineCoxeterModel build_affine_An(std::size_t n) {
  if (n < 1) throw std::invalid_argument("~A_n needs n >= 1");
  std::vector<Permutation> gens;
  std::vector<IMat> rho;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(Permutation::cycle(n + 1, {i + 1, i + 2}));
    rho.push_back(root_lattice_matrix(gens.back()));
  }
  PermGroup s_n1 = PermGroup::closure(gens, n + 1);
  CrystGroup group(n, s_n1, std::move(rho));

  AffineCoxeterModel model{std::move(group), diagram::affine_diagram('A', n), {}, {}};
  for (std::size_t i = 0; i < n; ++i) model.s.push_back(model.group.point_generator(i));
  const Permutation reflect = Permutation::cycle(n + 1, {1, n + 1});
  model.s.push_back({Vec(n, 1), model.group.point_group().require_index(reflect)});

  const auto& G = model.group;
  const auto& m = model.coxeter;
  for (std::size_t i = 0; i <= n; ++i) {
    if (!(G.multiply(model.s[i], model.s[i]) == G.identity()))
      throw std::logic_error("s_" + std::to_string(i + 1) + " is not an involution");
    for (std::size_t j = i + 1; j <= n; ++j) {
      const CrystElement st = G.multiply(model.s[i], model.s[j]);
      if (m(i, j) == diagram::kInfinity) {
        if (!G.is_translation(st) || st == G.identity())
          throw std::logic_error("s_" + std::to_string(i + 1) + " s_" + std::to_string(j + 1) + " is not a nonzero translation");
        continue;
      }
      if (element_order(G, st, m(i, j)) != std::optional<std::size_t>(m(i, j)))
        throw std::logic_error("s_" + std::to_string(i + 1) + " s_" + std::to_string(j + 1) + " does not have order " +
                               std::to_string(m(i, j)));
    }
  }
  if (n == 2) {
    model.translations.push_back(model.word({0, 1, 1, 2, 1, 2}));  // (s1 s2)(s2 s3)^2
    model.translations.push_back(model.word({1, 2, 2, 0, 2, 0}));  // (s2 s3)(s3 s1)^2
  }
  return model;
}

report::VerificationReport verify_a2_phi(std::size_t search_length) {
  report::VerificationReport rep;
  rep.section = "a2tilde";
  const AffineCoxeterModel model = build_affine_An(2);
  const CrystGroup& G = model.group;
  const auto& s = model.s;
  auto str = [&](const CrystElement& x) { return G.to_string(x); };

  const CrystElement g = model.word({2, 0, 1, 2, 0, 1});  // (s3 s1 s2)^2
  const CrystElement h = model.word({2, 1, 0, 2, 1, 0});  // (s3 s2 s1)^2
  const std::vector<CrystElement> phi = {s[0], s[1], G.multiply(G.multiply(g, s[2]), G.inverse(g))};
  auto apply = [&](const titsrep::Word& w) {
    CrystElement acc = G.identity();
    for (std::size_t i : w) acc = G.multiply(acc, phi[i]);
    return acc;
  };

  for (std::size_t i = 0; i < 3; ++i)
    rep.add("phi(s" + std::to_string(i + 1) + ") is an involution", G.multiply(phi[i], phi[i]) == G.identity(),
            str(phi[i]));
  for (auto [a, b] : {std::pair{0, 2}, std::pair{1, 2}, std::pair{0, 1}}) {
    const auto ord = element_order(G, apply({static_cast<std::size_t>(a), static_cast<std::size_t>(b)}), 100);
    rep.add("phi(s" + std::to_string(a + 1) + " s" + std::to_string(b + 1) + ") has order 3", ord == std::optional<std::size_t>(3),
            ord ? "order " + std::to_string(*ord) : "order > 100");
  }

  // Cross-check the centralizer claims in the reflection representation too.
  const auto tits = titsrep::ReflectionRep::build(diagram::parse_diagram("verts 3\nedge 1 2 3\nedge 2 3 3\nedge 1 3 3"));
  const bool g_model = G.multiply(g, s[0]) == G.multiply(s[0], g);
  const bool g_tits = titsrep::words_equal(tits, titsrep::Word{2, 0, 1, 2, 0, 1, 0}, titsrep::Word{0, 2, 0, 1, 2, 0, 1});
  rep.add("g = (s3 s1 s2)^2 commutes with s1", g_model && g_tits, "g = " + str(g));
  const bool h_model = G.multiply(h, s[1]) == G.multiply(s[1], h);
  const bool h_tits = titsrep::words_equal(tits, titsrep::Word{2, 1, 0, 2, 1, 0, 1}, titsrep::Word{1, 2, 1, 0, 2, 1, 0});
  rep.add("h = (s3 s2 s1)^2 commutes with s2", h_model && h_tits, "h = " + str(h));

  const CrystElement& t1 = model.translations[0];
  const CrystElement& t2 = model.translations[1];
  const bool commute = G.multiply(t1, t2) == G.multiply(t2, t1);
  const bool rank2 = G.is_translation(t1) && G.is_translation(t2) && t1.v[0] * t2.v[1] - t1.v[1] * t2.v[0] != 0;
  rep.add("t1, t2 are commuting translations spanning a rank-2 lattice", commute && rank2,
          "t1 = " + str(t1) + ", t2 = " + str(t2));

  const CrystElement pt1 = apply({0, 1, 1, 2, 1, 2});
  const CrystElement pt2 = apply({1, 2, 2, 0, 2, 0});
  const CrystElement t1_4 = G.power(t1, 4), t2_4 = G.power(t2, 4);
  rep.add("phi(t1) = t1^4", pt1 == t1_4, str(pt1) + " vs " + str(t1_4));
  rep.add("phi(t2) = t2^4", pt2 == t2_4, str(pt2) + " vs " + str(t2_4));

  // Ball of radius search_length, carrying x and phi(x) together.
  std::map<std::pair<Index, Vec>, CrystElement> seen;
  std::vector<std::pair<CrystElement, CrystElement>> frontier{{G.identity(), G.identity()}};
  seen.emplace(std::pair{Index{0}, G.identity().v}, G.identity());
  bool hit = false;
  for (std::size_t len = 0; len < search_length && !hit; ++len) {
    std::vector<std::pair<CrystElement, CrystElement>> next;
    for (const auto& [x, px] : frontier)
      for (std::size_t i = 0; i < 3; ++i) {
        CrystElement y = G.multiply(x, s[i]);
        if (!seen.emplace(std::pair{y.g, y.v}, y).second) continue;
        CrystElement py = G.multiply(px, phi[i]);
        if (py == s[2]) hit = true;
        next.emplace_back(std::move(y), std::move(py));
      }
    frontier = std::move(next);
  }
  rep.add("s3 is not phi of any element of word length <= " + std::to_string(search_length), !hit,
          "bounded search over " + std::to_string(seen.size()) + " elements; evidence, not a proof");
  return rep;
}

// ---------------------------------------------------------------------------
// Complement swap

Permutation ComplementSwap::apply(const Permutation& x) const { return group.element(map[group.require_index(x)]); }

ComplementSwap complement_swap(const PermGroup& g, const PermGroup& h, const PermGroup& k, const PermGroup& k2) {
  for (const auto* sub : {&h, &k, &k2})
    for (const auto& x : sub->generators())
      if (!g.contains(x)) throw NotAComplement("subgroup generator " + x.to_string() + " is not in G");
  if (!h.is_abelian()) throw HNotAbelian("H is not abelian");
  for (const auto& x : g.generators()) {
    const Permutation xi = x.inverse();
    for (const auto& y : h.generators())
      if (!h.contains(x * y * xi)) throw NotAComplement("H is not normal in G");
  }
  // decomposition[x] = (h, kappa) with x = h kappa, as G indices.
  auto decompose = [&](const PermGroup& kk, const char* name) {
    if (h.order() * kk.order() != g.order())
      throw NotAComplement(std::string(name) + ": |H| |K| != |G|");
    for (Index i = 1; i < kk.order(); ++i)
      if (h.contains(kk.element(i))) throw NotAComplement(std::string(name) + " meets H nontrivially");
    std::vector<std::pair<Index, Index>> out(g.order(), {~Index{0}, ~Index{0}});
    for (Index a = 0; a < h.order(); ++a) {
      const Permutation ha = h.element(a);
      const Index hg = g.require_index(ha);
      for (Index b = 0; b < kk.order(); ++b) {
        const Index x = g.require_index(ha * kk.element(b));
        out[x] = {hg, g.require_index(kk.element(b))};
      }
    }
    return out;
  };
  const auto dk = decompose(k, "K");
  const auto dk2 = decompose(k2, "K2");

  ComplementSwap out{g, std::vector<Index>(g.order())};
  for (Index x = 0; x < g.order(); ++x) {
    const auto [hx, kappa] = dk[x];
    const Index kappa2 = dk2[kappa].second;
    out.map[x] = g.multiply(hx, kappa2);
  }

  std::vector<bool> hit(g.order(), false);
  for (Index x = 0; x < g.order(); ++x) {
    if (hit[out.map[x]]) throw std::logic_error("complement swap is not injective");
    hit[out.map[x]] = true;
  }
  std::vector<Index> gen_images;
  for (const auto& s : g.generators()) gen_images.push_back(out.map[g.require_index(s)]);
  for (Index x = 0; x < g.order(); ++x)
    for (std::size_t j = 0; j < gen_images.size(); ++j)
      if (out.map[g.right_multiply(x, j)] != g.multiply(out.map[x], gen_images[j]))
        throw std::logic_error("complement swap is not multiplicative at " + g.element(x).to_string());
  for (Index a = 0; a < h.order(); ++a) {
    const Index x = g.require_index(h.element(a));
    if (out.map[x] != x) throw std::logic_error("complement swap moves an element of H");
  }
  return out;
}

namespace {

struct AffineSpace {
  std::size_t p, d, size;

  std::vector<std::size_t> digits(std::size_t x) const {
    std::vector<std::size_t> v(d);
    for (std::size_t i = 0; i < d; ++i, x /= p) v[i] = x % p;
    return v;
  }
  std::size_t index(const std::vector<std::size_t>& v) const {
    std::size_t x = 0;
    for (std::size_t i = d; i-- > 0;) x = x * p + v[i];
    return x;
  }
  // x -> A x + b
  Permutation affine(const std::vector<std::vector<std::size_t>>& a, const std::vector<std::size_t>& b) const {
    std::vector<perm::Point> img(size);
    for (std::size_t x = 0; x < size; ++x) {
      const auto v = digits(x);
      std::vector<std::size_t> w(d);
      for (std::size_t i = 0; i < d; ++i) {
        std::size_t acc = b[i];
        for (std::size_t j = 0; j < d; ++j) acc += a[i][j] * v[j];
        w[i] = acc % p;
      }
      img[x] = static_cast<perm::Point>(index(w));
    }
    return Permutation::from_images(std::move(img));
  }
};

}  // namespace

SplitInstance random_split_instance(std::mt19937_64& rng, std::size_t max_order) {
  static const std::pair<std::size_t, std::size_t> shapes[] = {{2, 2}, {3, 1}, {3, 2}, {5, 1}, {7, 1}, {2, 3}, {5, 2}};
  for (;;) {
    const auto [p, d] = shapes[rng() % std::size(shapes)];
    AffineSpace sp{p, d, 1};
    for (std::size_t i = 0; i < d; ++i) sp.size *= p;
    const std::vector<std::vector<std::size_t>> one = [&] {
      std::vector<std::vector<std::size_t>> m(d, std::vector<std::size_t>(d, 0));
      for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
      return m;
    }();
    const std::vector<std::size_t> zero(d, 0);

    std::vector<Permutation> translations;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::size_t> e(d, 0);
      e[i] = 1;
      translations.push_back(sp.affine(one, e));
    }
    std::vector<std::vector<std::vector<std::size_t>>> mats;
    const std::size_t count = 1 + rng() % 2;
    for (std::size_t c = 0; c < count; ++c) {
      std::vector<std::vector<std::size_t>> a(d, std::vector<std::size_t>(d));
      for (auto& row : a)
        for (auto& x : row) x = rng() % p;
      mats.push_back(std::move(a));
    }
    std::vector<Permutation> kgens;
    bool invertible = true;
    for (const auto& a : mats) {
      std::vector<perm::Point> img(sp.size);
      std::vector<bool> hit(sp.size, false);
      for (std::size_t x = 0; x < sp.size; ++x) {
        const auto v = sp.digits(x);
        std::vector<std::size_t> w(d);
        for (std::size_t i = 0; i < d; ++i) {
          std::size_t acc = 0;
          for (std::size_t j = 0; j < d; ++j) acc += a[i][j] * v[j];
          w[i] = acc % p;
        }
        const std::size_t y = sp.index(w);
        if (hit[y]) invertible = false;
        hit[y] = true;
      }
      if (!invertible) break;
      kgens.push_back(sp.affine(a, zero));
    }
    if (!invertible) continue;

    PermGroup k;
    try {
      k = PermGroup::closure(kgens, sp.size, max_order / sp.size);
    } catch (const perm::BoundExceeded&) {
      continue;
    }
    if (k.order() < 2) continue;
    std::vector<Permutation> ggens = translations;
    ggens.insert(ggens.end(), kgens.begin(), kgens.end());
    PermGroup g = PermGroup::closure(ggens, sp.size);
    PermGroup h = PermGroup::closure(translations, sp.size);

    auto random_vec = [&] {
      std::vector<std::size_t> v(d);
      for (auto& x : v) x = rng() % p;
      return v;
    };
    std::optional<PermGroup> k2;
    for (int attempt = 0; attempt < 40 && !k2; ++attempt) {
      std::vector<Permutation> twisted;
      for (const auto& a : mats) twisted.push_back(sp.affine(a, random_vec()));
      PermGroup cand;
      try {
        cand = PermGroup::closure(twisted, sp.size, k.order());
      } catch (const perm::BoundExceeded&) {
        continue;
      }
      if (cand.order() != k.order()) continue;
      bool meets = false;
      for (Index i = 1; i < cand.order() && !meets; ++i) meets = h.contains(cand.element(i));
      if (meets) continue;
      bool same = true;
      for (const auto& x : cand.generators()) same = same && k.contains(x);
      if (same && attempt < 39) continue;
      k2 = std::move(cand);
    }
    if (!k2) {
      const Permutation t = sp.affine(one, random_vec());
      std::vector<Permutation> conj;
      for (const auto& x : kgens) conj.push_back(t * x * t.inverse());
      k2 = PermGroup::closure(conj, sp.size);
    }
    std::ostringstream desc;
    desc << "F_" << p << "^" << d << " x| K, |K| = " << k.order() << ", |G| = " << g.order();
    return SplitInstance{std::move(g), std::move(h), std::move(k), std::move(*k2), desc.str()};
  }
}

report::VerificationReport verify_complement_swap(std::uint64_t seed, std::size_t instances) {
  report::VerificationReport rep;
  rep.section = "wlog";
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < instances; ++n) {
    const SplitInstance inst = random_split_instance(rng);
    const PermGroup& g = inst.g;
    std::string detail = inst.description;
    bool ok = true;
    try {
      const ComplementSwap sw = complement_swap(g, inst.h, inst.k, inst.k2);
      auto check_pair = [&](Index x, Index y) {
        return sw.map[g.multiply(x, y)] == g.multiply(sw.map[x], sw.map[y]);
      };
      if (g.order() <= 200) {
        for (Index x = 0; x < g.order() && ok; ++x)
          for (Index y = 0; y < g.order() && ok; ++y) ok = check_pair(x, y);
      } else {
        for (int i = 0; i < 4000 && ok; ++i)
          ok = check_pair(static_cast<Index>(rng() % g.order()), static_cast<Index>(rng() % g.order()));
      }
      if (!ok) detail += "; not multiplicative";
      for (Index a = 0; a < inst.h.order() && ok; ++a) {
        const Index x = g.require_index(inst.h.element(a));
        ok = sw.map[x] == x;
        if (!ok) detail += "; moves H";
      }
      for (Index b = 0; b < inst.k.order() && ok; ++b) {
        ok = inst.k2.contains(g.element(sw.map[g.require_index(inst.k.element(b))]));
        if (!ok) detail += "; K not mapped into K2";
      }
    } catch (const std::exception& e) {
      ok = false;
      detail += std::string("; ") + e.what();
    }
    rep.add("complement swap on random instance " + std::to_string(n + 1), ok, detail);
  }

  const PermGroup s4 = PermGroup::closure({Permutation::parse("(1 2)", 4), Permutation::parse("(1 2 3 4)", 4)}, 4);
  const PermGroup a4 = PermGroup::closure({Permutation::parse("(1 2 3)", 4), Permutation::parse("(2 3 4)", 4)}, 4);
  const PermGroup k = PermGroup::closure({Permutation::parse("(1 2)", 4)}, 4);
  const PermGroup k2 = PermGroup::closure({Permutation::parse("(1 3)", 4)}, 4);
  std::string outcome = "accepted";
  bool rejected = false;
  try {
    complement_swap(s4, a4, k, k2);
  } catch (const HNotAbelian& e) {
    rejected = true;
    outcome = std::string("HNotAbelian: ") + e.what();
  } catch (const std::exception& e) {
    outcome = e.what();
  }
  rep.add("S4 with H = A4 is rejected as non-abelian", rejected, outcome);
  return rep;
}

}  // namespace coxkit::crysto
