#include "coxkit/permgrp.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace coxkit::perm {

// ---------------------------------------------------------------------------
// PermGroup

std::optional<Index> PermGroup::lookup(const Data& d, std::span<const Point> pts) {
  std::size_t h = hash_points(pts) & d.mask;
  for (;;) {
    const Index idx = d.slots[h];
    if (idx == kEmpty) return std::nullopt;
    const Point* p = d.points.data() + static_cast<std::size_t>(idx) * d.degree;
    if (std::equal(pts.begin(), pts.end(), p)) return idx;
    h = (h + 1) & d.mask;
  }
}

void PermGroup::insert(Data& d, Index i) {
  const std::span<const Point> pts(d.points.data() + static_cast<std::size_t>(i) * d.degree, d.degree);
  std::size_t h = hash_points(pts) & d.mask;
  while (d.slots[h] != kEmpty) h = (h + 1) & d.mask;
  d.slots[h] = i;
}

void PermGroup::rehash(Data& d, std::size_t capacity) {
  d.slots.assign(capacity, kEmpty);
  d.mask = capacity - 1;
  for (Index i = 0; i < d.order; ++i) insert(d, i);
}

PermGroup PermGroup::closure(std::vector<Permutation> generators, std::size_t degree, std::size_t bound) {
  auto d = std::make_shared<Data>();
  d->degree = degree;
  for (const auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("generator degree does not match group degree");
  d->gens = std::move(generators);
  const std::size_t ngen = d->gens.size();

  d->points.resize(degree);
  std::iota(d->points.begin(), d->points.end(), Point{0});
  d->order = 1;
  d->parent.push_back(0);
  d->parent_gen.push_back(0);
  rehash(*d, 16);

  std::vector<Point> scratch(degree);
  for (Index i = 0; i < d->order; ++i) {
    for (std::size_t k = 0; k < ngen; ++k) {
      const Point* x = d->points.data() + static_cast<std::size_t>(i) * degree;
      const auto gk = d->gens[k].images();
      for (std::size_t j = 0; j < degree; ++j) scratch[j] = x[gk[j]];
      auto found = lookup(*d, scratch);
      if (!found) {
        if (d->order >= bound)
          throw BoundExceeded("group order exceeds bound " + std::to_string(bound), d->order);
        const Index idx = static_cast<Index>(d->order);
        d->points.insert(d->points.end(), scratch.begin(), scratch.end());
        d->parent.push_back(i);
        d->parent_gen.push_back(static_cast<std::uint32_t>(k));
        ++d->order;
        if (2 * d->order > d->slots.size())
          rehash(*d, d->slots.size() * 2);
        else
          insert(*d, idx);
        found = idx;
      }
      d->right.push_back(*found);
    }
  }
  return PermGroup(std::shared_ptr<const Data>(std::move(d)));
}

PermGroup PermGroup::closure(std::vector<Permutation> generators) {
  std::size_t degree = 0;
  for (const auto& g : generators) degree = std::max(degree, g.degree());
  for (auto& g : generators)
    if (g.degree() < degree) g = g.shifted(0, degree);
  return closure(std::move(generators), degree);
}

Permutation PermGroup::element(Index i) const {
  const auto pts = points(i);
  return Permutation::from_images(std::vector<Point>(pts.begin(), pts.end()));
}

std::optional<Index> PermGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree()) return std::nullopt;
  return lookup(*d_, p.images());
}

std::optional<Index> PermGroup::index_of(std::span<const Point> pts) const {
  if (pts.size() != degree()) return std::nullopt;
  return lookup(*d_, pts);
}

Index PermGroup::require_index(const Permutation& p) const {
  auto i = index_of(p);
  if (!i) throw ElementNotInGroup("permutation " + p.to_string() + " is not in the group");
  return *i;
}

Index PermGroup::multiply(Index a, Index b) const {
  const auto pa = points(a);
  const auto pb = points(b);
  std::vector<Point> out(degree());
  for (std::size_t j = 0; j < degree(); ++j) out[j] = pa[pb[j]];
  return *lookup(*d_, out);
}

Index PermGroup::inverse(Index a) const {
  const auto pa = points(a);
  std::vector<Point> out(degree());
  for (std::size_t j = 0; j < degree(); ++j) out[pa[j]] = static_cast<Point>(j);
  return *lookup(*d_, out);
}

std::vector<std::size_t> PermGroup::word_of(Index i) const {
  std::vector<std::size_t> w;
  while (i != 0) {
    w.push_back(parent_generator(i));
    i = parent(i);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

bool PermGroup::is_abelian() const {
  const auto& gens = generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!(gens[a] * gens[b] == gens[b] * gens[a])) return false;
  return true;
}

std::vector<std::vector<std::size_t>> PermGroup::cycle_type_multiset() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(order());
  for (Index i = 0; i < order(); ++i) out.push_back(element(i).cycle_type());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups

PermGroup subgroup(const PermGroup& g, const std::vector<Permutation>& gens) {
  for (const auto& x : gens)
    if (!g.contains(x)) throw ElementNotInGroup("generator " + x.to_string() + " is not in the group");
  return PermGroup::closure(gens, g.degree(), g.order());
}

PermGroup subgroup_from_elements(const PermGroup& g, const std::vector<Index>& elements) {
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::closure({}, g.degree());
  for (Index e : elements) {
    const Permutation p = g.element(e);
    if (current.contains(p)) continue;
    gens.push_back(p);
    current = PermGroup::closure(gens, g.degree(), g.order());
  }
  if (current.order() != elements.size()) throw std::invalid_argument("element list is not a subgroup");
  return current;
}

PermGroup center(const PermGroup& g) {
  std::vector<Index> z;
  const auto& gens = g.generators();
  for (Index i = 0; i < g.order(); ++i) {
    const Permutation x = g.element(i);
    bool central = true;
    for (const auto& s : gens)
      if (!(x * s == s * x)) {
        central = false;
        break;
      }
    if (central) z.push_back(i);
  }
  return subgroup_from_elements(g, z);
}

PermGroup centralizer_element(const PermGroup& g, const Permutation& x) {
  g.require_index(x);
  std::vector<Index> c;
  for (Index i = 0; i < g.order(); ++i) {
    const Permutation h = g.element(i);
    if (h * x == x * h) c.push_back(i);
  }
  return subgroup_from_elements(g, c);
}

bool are_conjugate_subgroups(const PermGroup& g, const PermGroup& h1, const PermGroup& h2) {
  if (h1.order() != h2.order() || h1.degree() != g.degree() || h2.degree() != g.degree()) return false;
  if (h1.cycle_type_multiset() != h2.cycle_type_multiset()) return false;
  for (Index i = 0; i < g.order(); ++i) {
    const Permutation x = g.element(i);
    const Permutation xi = x.inverse();
    bool inside = true;
    for (const auto& s : h1.generators())
      if (!h2.contains(x * s * xi)) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

Permutation DirectProduct::embed1(const Permutation& p) const { return p.shifted(offset1, group.degree()); }
Permutation DirectProduct::embed2(const Permutation& p) const { return p.shifted(offset2, group.degree()); }

DirectProduct direct_product(const PermGroup& g1, const PermGroup& g2) {
  const std::size_t d = g1.degree() + g2.degree();
  std::vector<Permutation> gens;
  for (const auto& s : g1.generators()) gens.push_back(s.shifted(0, d));
  for (const auto& s : g2.generators()) gens.push_back(s.shifted(g1.degree(), d));
  return DirectProduct{PermGroup::closure(std::move(gens), d, g1.order() * g2.order()), 0, g1.degree()};
}

// ---------------------------------------------------------------------------
// CayleyTable

CayleyTable::CayleyTable(const PermGroup& g) {
  if (g.order() > kMaxOrder)
    throw BoundExceeded("group of order " + std::to_string(g.order()) + " is too large for a multiplication table", g.order());
  n_ = g.order();
  mul_.resize(n_ * n_);
  for (Index a = 0; a < n_; ++a)
    for (Index b = 0; b < n_; ++b) mul_[static_cast<std::size_t>(a) * n_ + b] = g.multiply(a, b);
  finish();
}

CayleyTable CayleyTable::from_table(std::size_t n, std::vector<Index> mul, bool check) {
  if (mul.size() != n * n) throw std::invalid_argument("multiplication table has the wrong size");
  CayleyTable t;
  t.n_ = n;
  t.mul_ = std::move(mul);
  for (Index a = 0; a < n; ++a)
    if (t.mul(0, a) != a || t.mul(a, 0) != a) throw std::invalid_argument("element 0 is not the identity");
  if (check)
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c))) throw std::invalid_argument("table is not associative");
  t.finish();
  return t;
}

void CayleyTable::finish() {
  inv_.assign(n_, 0);
  ord_.assign(n_, 0);
  for (Index a = 0; a < n_; ++a) {
    for (Index b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
    std::size_t k = 1;
    for (Index x = a; x != 0; x = mul(x, a)) ++k;
    ord_[a] = k;
  }
}

std::vector<Index> CayleyTable::generated(std::span<const Index> gens) const {
  std::vector<bool> seen(n_, false);
  std::vector<Index> out{0};
  seen[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (Index s : gens) {
      const Index y = mul(out[head], s);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool CayleyTable::generates(std::span<const Index> gens) const {
  std::vector<bool> seen(n_, false);
  std::vector<Index> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Index s : gens) {
      const Index y = mul(queue[head], s);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
        if (queue.size() == n_) return true;
      }
    }
  return queue.size() == n_;
}

bool CayleyTable::is_abelian() const {
  for (Index a = 0; a < n_; ++a)
    for (Index b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Permutation CayleyTable::regular(Index a) const {
  std::vector<Point> img(n_);
  for (Index x = 0; x < n_; ++x) img[x] = static_cast<Point>(mul(a, x));
  return Permutation::from_images(std::move(img));
}

// ---------------------------------------------------------------------------
// Homomorphism counting

Index evaluate(const CayleyTable& q, const GroupWord& w, std::span<const Index> images) {
  Index x = 0;
  for (Letter l : w) {
    const Index img = images[static_cast<std::size_t>(l > 0 ? l : -l) - 1];
    x = q.mul(x, l > 0 ? img : q.inv(img));
  }
  return x;
}

namespace {

class HomSearch {
 public:
  HomSearch(const Presentation& p, const CayleyTable& q) : p_(p), q_(q), n_(p.generator_count()) {
    p.validate();
    // Most-constrained generators first: by number of relator occurrences.
    std::vector<std::size_t> occurrences(n_, 0);
    for (const auto& r : p.relators)
      for (Letter l : r) ++occurrences[static_cast<std::size_t>(l > 0 ? l : -l) - 1];
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return occurrences[a] > occurrences[b]; });
    std::vector<std::size_t> depth_of(n_);
    for (std::size_t d = 0; d < n_; ++d) depth_of[order_[d]] = d;

    // Relators are checked as soon as their last generator is assigned.
    checks_.resize(n_);
    std::vector<std::size_t> exponent(n_, 0);
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      const auto& rel = p.relators[r];
      if (rel.empty()) continue;
      std::size_t last = 0;
      bool single = true;
      long long sum = 0;
      for (Letter l : rel) {
        const std::size_t gen = static_cast<std::size_t>(l > 0 ? l : -l) - 1;
        last = std::max(last, depth_of[gen]);
        if (gen != static_cast<std::size_t>(std::abs(rel.front())) - 1) single = false;
        sum += l > 0 ? 1 : -1;
      }
      checks_[last].push_back(r);
      if (single) {
        const std::size_t gen = static_cast<std::size_t>(std::abs(rel.front())) - 1;
        exponent[gen] = std::gcd(exponent[gen], static_cast<std::size_t>(sum < 0 ? -sum : sum));
      }
    }
    candidates_.resize(n_);
    for (std::size_t g = 0; g < n_; ++g)
      for (Index x = 0; x < q.order(); ++x)
        if (exponent[g] == 0 || exponent[g] % q.element_order(x) == 0) candidates_[g].push_back(x);
    images_.assign(n_, 0);
  }

  HomCount run() {
    HomCount c;
    descend(0, c);
    return c;
  }

 private:
  void descend(std::size_t depth, HomCount& c) {
    if (depth == n_) {
      ++c.homs;
      if (q_.generates(images_)) ++c.epis;
      return;
    }
    const std::size_t gen = order_[depth];
    for (Index x : candidates_[gen]) {
      images_[gen] = x;
      bool ok = true;
      for (std::size_t r : checks_[depth])
        if (evaluate(q_, p_.relators[r], images_) != 0) {
          ok = false;
          break;
        }
      if (ok) descend(depth + 1, c);
    }
  }

  const Presentation& p_;
  const CayleyTable& q_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> checks_;
  std::vector<std::vector<Index>> candidates_;
  std::vector<Index> images_;
};

}  // namespace

HomCount hom_count(const Presentation& p, const CayleyTable& q) {
  return HomSearch(p, q).run();
}

HomCount hom_count(const Presentation& p, const PermGroup& q) { return hom_count(p, CayleyTable(q)); }

// ---------------------------------------------------------------------------
// Isomorphism

std::vector<Index> small_generating_set(const CayleyTable& t) {
  std::vector<Index> by_order(t.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Index a, Index b) { return t.element_order(a) > t.element_order(b); });
  std::vector<Index> gens;
  std::vector<bool> inside(t.order(), false);
  inside[0] = true;
  for (Index x : by_order) {
    if (inside[x]) continue;
    gens.push_back(x);
    for (Index y : t.generated(gens)) inside[y] = true;
  }
  return gens;
}

std::vector<Index> minimum_generating_set(const CayleyTable& t) {
  if (t.order() == 1) return {};
  const auto greedy = small_generating_set(t);
  // Exhaustive over increasing sizes, with the first element ranging over
  // representatives only up to the greedy bound.
  std::vector<Index> chosen;
  std::function<bool(std::size_t, Index)> pick = [&](std::size_t remaining, Index from) -> bool {
    if (remaining == 0) return t.generates(chosen);
    for (Index x = from; x < t.order(); ++x) {
      chosen.push_back(x);
      if (pick(remaining - 1, x + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size < greedy.size(); ++size) {
    chosen.clear();
    if (pick(size, 1)) return chosen;
  }
  return greedy;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const CayleyTable& a, const CayleyTable& b) : a_(a), b_(b), gens_(small_generating_set(a)) {}

  // Calls `found` with each isomorphism; stops when it returns false.
  template <typename F>
  void run(F found) {
    if (a_.order() != b_.order()) return;
    auto oa = a_.element_orders(), ob = b_.element_orders();
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) return;
    // BFS layout of a along the generating set.
    order_.assign(1, 0);
    parent_.assign(a_.order(), 0);
    pgen_.assign(a_.order(), 0);
    std::vector<bool> seen(a_.order(), false);
    seen[0] = true;
    for (std::size_t head = 0; head < order_.size(); ++head)
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        const Index y = a_.mul(order_[head], gens_[k]);
        if (!seen[y]) {
          seen[y] = true;
          parent_[y] = order_[head];
          pgen_[y] = k;
          order_.push_back(y);
        }
      }
    images_.assign(gens_.size(), 0);
    bool keep_going = true;
    descend(0, found, keep_going);
  }

 private:
  template <typename F>
  void descend(std::size_t depth, F& found, bool& keep_going) {
    if (!keep_going) return;
    if (depth == gens_.size()) {
      std::vector<Index> map(a_.order(), 0);
      std::vector<bool> used(b_.order(), false);
      used[0] = true;
      for (std::size_t i = 1; i < order_.size(); ++i) {
        const Index x = order_[i];
        const Index y = b_.mul(map[parent_[x]], images_[pgen_[x]]);
        if (used[y]) return;
        used[y] = true;
        map[x] = y;
      }
      for (Index x = 0; x < a_.order(); ++x)
        for (std::size_t k = 0; k < gens_.size(); ++k)
          if (map[a_.mul(x, gens_[k])] != b_.mul(map[x], images_[k])) return;
      keep_going = found(std::move(map));
      return;
    }
    const std::size_t want = a_.element_order(gens_[depth]);
    for (Index y = 0; y < b_.order() && keep_going; ++y) {
      if (b_.element_order(y) != want) continue;
      // Pairwise commutation must be preserved among assigned generators.
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const bool ca = a_.mul(gens_[k], gens_[depth]) == a_.mul(gens_[depth], gens_[k]);
        const bool cb = b_.mul(images_[k], y) == b_.mul(y, images_[k]);
        ok = ca == cb && a_.element_order(a_.mul(gens_[k], gens_[depth])) == b_.element_order(b_.mul(images_[k], y));
      }
      if (!ok) continue;
      images_[depth] = y;
      descend(depth + 1, found, keep_going);
    }
  }

  const CayleyTable& a_;
  const CayleyTable& b_;
  std::vector<Index> gens_;
  std::vector<Index> order_;
  std::vector<Index> parent_;
  std::vector<std::size_t> pgen_;
  std::vector<Index> images_;
};

}  // namespace

std::optional<std::vector<Index>> find_isomorphism(const CayleyTable& a, const CayleyTable& b) {
  std::optional<std::vector<Index>> out;
  IsoSearch(a, b).run([&](std::vector<Index> map) {
    out = std::move(map);
    return false;
  });
  return out;
}

std::vector<std::vector<Index>> automorphisms(const CayleyTable& t) {
  std::vector<std::vector<Index>> out;
  IsoSearch(t, t).run([&](std::vector<Index> map) {
    out.push_back(std::move(map));
    return true;
  });
  return out;
}

bool is_isomorphic_small(const PermGroup& g1, const PermGroup& g2, std::size_t bound) {
  for (const auto* g : {&g1, &g2})
    if (g->order() > bound || g->order() > CayleyTable::kMaxOrder)
      throw BoundExceeded("group of order " + std::to_string(g->order()) + " exceeds the isomorphism bound", g->order());
  if (g1.order() != g2.order()) return false;
  return find_isomorphism(CayleyTable(g1), CayleyTable(g2)).has_value();
}

std::vector<std::vector<Index>> subgroup_class_representatives(const CayleyTable& t) {
  const std::size_t n = t.order();
  if (n > 64) throw BoundExceeded("subgroup enumeration is limited to order 64", n);
  using Mask = std::uint64_t;
  auto to_mask = [](const std::vector<Index>& els) {
    Mask m = 0;
    for (Index e : els) m |= Mask{1} << e;
    return m;
  };
  auto elements = [&](Mask m) {
    std::vector<Index> out;
    for (Index i = 0; i < n; ++i)
      if (m >> i & 1) out.push_back(i);
    return out;
  };
  std::set<Mask> all;
  std::vector<Mask> frontier;
  for (Index x = 0; x < n; ++x) {
    const Index g[] = {x};
    const Mask m = to_mask(t.generated(g));
    if (all.insert(m).second) frontier.push_back(m);
  }
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask h : frontier) {
      const auto els = elements(h);
      for (Index x = 0; x < n; ++x) {
        if (h >> x & 1) continue;
        auto gens = els;
        gens.push_back(x);
        const Mask m = to_mask(t.generated(gens));
        if (all.insert(m).second) next.push_back(m);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Mask> reps;
  std::set<Mask> covered;
  std::vector<Mask> sorted(all.begin(), all.end());
  std::sort(sorted.begin(), sorted.end(), [&](Mask a, Mask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return elements(a) < elements(b);
  });
  for (Mask h : sorted) {
    if (covered.count(h)) continue;
    reps.push_back(h);
    const auto els = elements(h);
    for (Index g = 0; g < n; ++g) {
      Mask c = 0;
      for (Index e : els) c |= Mask{1} << t.conjugate(g, e);
      covered.insert(c);
    }
  }
  std::vector<std::vector<Index>> out;
  for (Mask h : reps) out.push_back(elements(h));
  return out;
}

GroupWord group_word_of(const PermGroup& g, Index i) {
  GroupWord w;
  for (std::size_t k : g.word_of(i)) w.push_back(static_cast<Letter>(k) + 1);
  return w;
}

Presentation cayley_presentation(const PermGroup& g) {
  Presentation p = Presentation::with_generators(g.generators().size());
  std::vector<GroupWord> words(g.order());
  for (Index i = 1; i < g.order(); ++i) {
    words[i] = words[g.parent(i)];
    words[i].push_back(static_cast<Letter>(g.parent_generator(i)) + 1);
  }
  for (Index i = 0; i < g.order(); ++i)
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      const Index j = g.right_multiply(i, k);
      if (j != 0 && g.parent(j) == i && g.parent_generator(j) == k) continue;
      GroupWord r = words[i];
      r.push_back(static_cast<Letter>(k) + 1);
      const GroupWord back = inverse(words[j]);
      r.insert(r.end(), back.begin(), back.end());
      p.relators.push_back(std::move(r));
    }
  return p;
}

}  // namespace coxkit::perm
