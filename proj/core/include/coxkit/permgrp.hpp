#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxkit/permutation.hpp"
#include "coxkit/presentation.hpp"

namespace coxkit::perm {

using Index = std::uint32_t;

inline constexpr std::size_t kDefaultClosureBound = 2'000'000;

class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what, std::size_t partial) : std::runtime_error(what), partial_(partial) {}
  /// Number of elements (or candidates) seen before giving up.
  std::size_t partial() const { return partial_; }

 private:
  std::size_t partial_;
};

class ElementNotInGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite permutation group with every element stored. Elements are numbered
/// in breadth-first order from the identity (index 0) along right
/// multiplication by generators, which gives a spanning tree of the Cayley
/// graph: element(i) = element(parent(i)) * generator(parent_generator(i)).
/// Copies share storage.
class PermGroup {
 public:
  PermGroup() : PermGroup(closure({}, 0)) {}

  /// Throws BoundExceeded if the group has more than `bound` elements.
  static PermGroup closure(std::vector<Permutation> generators, std::size_t degree,
                           std::size_t bound = kDefaultClosureBound);
  static PermGroup closure(std::vector<Permutation> generators);

  std::size_t degree() const { return d_->degree; }
  std::size_t order() const { return d_->order; }
  const std::vector<Permutation>& generators() const { return d_->gens; }

  Permutation element(Index i) const;
  std::span<const Point> points(Index i) const {
    return {d_->points.data() + static_cast<std::size_t>(i) * d_->degree, d_->degree};
  }
  std::optional<Index> index_of(const Permutation& p) const;
  std::optional<Index> index_of(std::span<const Point> pts) const;
  /// Throws ElementNotInGroup.
  Index require_index(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  /// element(i) * generator(k)
  Index right_multiply(Index i, std::size_t k) const { return d_->right[static_cast<std::size_t>(i) * d_->gens.size() + k]; }
  Index multiply(Index a, Index b) const;
  Index inverse(Index a) const;

  Index parent(Index i) const { return d_->parent[i]; }
  std::size_t parent_generator(Index i) const { return d_->parent_gen[i]; }
  /// Generator indices whose product (left to right) is element(i).
  std::vector<std::size_t> word_of(Index i) const;

  bool is_abelian() const;
  /// Sorted multiset of element cycle types.
  std::vector<std::vector<std::size_t>> cycle_type_multiset() const;

 private:
  struct Data {
    std::size_t degree = 0;
    std::size_t order = 0;
    std::vector<Permutation> gens;
    std::vector<Point> points;
    std::vector<Index> right;
    std::vector<Index> parent;
    std::vector<std::uint32_t> parent_gen;
    std::vector<Index> slots;  // open addressing, kEmpty when free
    std::size_t mask = 0;
  };
  static constexpr Index kEmpty = ~Index{0};

  explicit PermGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  static std::optional<Index> lookup(const Data& d, std::span<const Point> pts);
  static void insert(Data& d, Index i);
  static void rehash(Data& d, std::size_t capacity);

  std::shared_ptr<const Data> d_;
};

/// Subgroup of G generated by the given elements (closure is computed afresh).
PermGroup subgroup(const PermGroup& g, const std::vector<Permutation>& gens);
/// Subgroup whose element set is the given list; a small generating set is
/// chosen greedily.
PermGroup subgroup_from_elements(const PermGroup& g, const std::vector<Index>& elements);

PermGroup center(const PermGroup& g);
/// Throws ElementNotInGroup if x is not in G.
PermGroup centralizer_element(const PermGroup& g, const Permutation& x);
/// True iff some element of G conjugates H1 onto H2.
bool are_conjugate_subgroups(const PermGroup& g, const PermGroup& h1, const PermGroup& h2);

struct DirectProduct {
  PermGroup group;
  std::size_t offset1 = 0;  // points of the first factor start here
  std::size_t offset2 = 0;  // points of the second factor start here
  Permutation embed1(const Permutation& p) const;
  Permutation embed2(const Permutation& p) const;
};

/// G1 x G2 on disjoint point sets (G1 first).
DirectProduct direct_product(const PermGroup& g1, const PermGroup& g2);

/// Full multiplication table of a small group; identity is 0.
class CayleyTable {
 public:
  static constexpr std::size_t kMaxOrder = 4096;

  /// Throws BoundExceeded above kMaxOrder.
  explicit CayleyTable(const PermGroup& g);
  /// From a raw table mul[a * n + b] with identity 0. Validates associativity
  /// only if `check` is set.
  static CayleyTable from_table(std::size_t n, std::vector<Index> mul, bool check = false);

  std::size_t order() const { return n_; }
  Index mul(Index a, Index b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Index inv(Index a) const { return inv_[a]; }
  std::size_t element_order(Index a) const { return ord_[a]; }
  const std::vector<std::size_t>& element_orders() const { return ord_; }

  /// Elements of the subgroup generated by `gens`, sorted.
  std::vector<Index> generated(std::span<const Index> gens) const;
  bool generates(std::span<const Index> gens) const;
  bool is_abelian() const;
  Index conjugate(Index g, Index x) const { return mul(mul(g, x), inv(g)); }

  /// Left-regular permutation representation of element a on n points.
  Permutation regular(Index a) const;

 private:
  CayleyTable() = default;
  void finish();

  std::size_t n_ = 0;
  std::vector<Index> mul_;
  std::vector<Index> inv_;
  std::vector<std::size_t> ord_;
};

struct HomCount {
  std::uint64_t homs = 0;
  std::uint64_t epis = 0;
  friend bool operator==(const HomCount&, const HomCount&) = default;
};

/// Counts generator-image tuples satisfying every relator, and those whose
/// images generate the target.
HomCount hom_count(const Presentation& p, const CayleyTable& q);
HomCount hom_count(const Presentation& p, const PermGroup& q);

/// Evaluates a word at the given generator images.
Index evaluate(const CayleyTable& q, const GroupWord& w, std::span<const Index> images);

/// Greedy small generating set (elements of large order first).
std::vector<Index> small_generating_set(const CayleyTable& t);
/// A generating set of minimum size (exhaustive by size; small groups only).
std::vector<Index> minimum_generating_set(const CayleyTable& t);

/// Isomorphism a -> b as an element map, if one exists.
std::optional<std::vector<Index>> find_isomorphism(const CayleyTable& a, const CayleyTable& b);
/// All automorphisms, each as an element map.
std::vector<std::vector<Index>> automorphisms(const CayleyTable& t);

/// Throws BoundExceeded if either order exceeds `bound`.
bool is_isomorphic_small(const PermGroup& g1, const PermGroup& g2, std::size_t bound = CayleyTable::kMaxOrder);

/// Representatives of the conjugacy classes of subgroups (each sorted), ordered
/// by size then lexicographically. Order at most 64.
std::vector<std::vector<Index>> subgroup_class_representatives(const CayleyTable& t);

/// Presentation on G's generators whose relators are w_x g w_{xg}^-1 for the
/// non-tree edges of the Cayley graph; these define G.
Presentation cayley_presentation(const PermGroup& g);
GroupWord group_word_of(const PermGroup& g, Index i);

/// Extends generator images along the Cayley spanning tree and checks every
/// Cayley edge. `out[i]` is the image of element i. Returns the first
/// inconsistent edge (element, generator), if any.
template <typename T, typename Mul, typename Eq>
std::optional<std::pair<Index, std::size_t>> extend_along_tree(const PermGroup& g, const std::vector<T>& gen_images,
                                                                const T& identity, Mul mul, Eq eq, std::vector<T>& out) {
  if (gen_images.size() != g.generators().size()) throw std::invalid_argument("wrong number of generator images");
  out.assign(g.order(), identity);
  for (Index i = 1; i < g.order(); ++i) out[i] = mul(out[g.parent(i)], gen_images[g.parent_generator(i)]);
  for (Index i = 0; i < g.order(); ++i)
    for (std::size_t k = 0; k < gen_images.size(); ++k)
      if (!eq(out[g.right_multiply(i, k)], mul(out[i], gen_images[k]))) return std::pair{i, k};
  return std::nullopt;
}

}  // namespace coxkit::perm
