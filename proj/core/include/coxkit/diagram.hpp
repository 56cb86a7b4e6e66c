#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coxkit::diagram {

/// Coxeter label m_ij. Infinity is a distinguished value ordered above all
/// integers.
using Label = std::uint32_t;
inline constexpr Label kInfinity = std::numeric_limits<Label>::max();

std::string label_to_string(Label m);

class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  /// n generators, all pairs commuting (label 2).
  explicit CoxeterMatrix(std::size_t n);
  /// Validates symmetry, unit diagonal and off-diagonal labels >= 2.
  static CoxeterMatrix from_rows(const std::vector<std::vector<Label>>& rows);

  std::size_t size() const { return n_; }
  Label operator()(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }
  /// Sets m_ij = m_ji = label, for i != j.
  void set(std::size_t i, std::size_t j, Label label);

  /// Restriction to the given vertices, in the given order.
  CoxeterMatrix induced(const std::vector<std::size_t>& vertices) const;
  /// Relabels vertex i as perm[i].
  CoxeterMatrix relabeled(const std::vector<std::size_t>& perm) const;

  /// Edges of the Coxeter graph are pairs with m_ij != 2.
  bool adjacent(std::size_t i, std::size_t j) const { return i != j && (*this)(i, j) != 2; }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Label> m_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the diagram DSL:
///   verts N
///   edge i j L      (1-based, L in {2,3,...} or "inf")
///   # comment
/// Unlisted pairs default to 2.
CoxeterMatrix parse_diagram(std::string_view text);
std::string format_diagram(const CoxeterMatrix& m);

enum class Kind { Spherical, Affine, Other };
std::string_view to_string(Kind kind);

/// Name of an irreducible Coxeter diagram family member, e.g. A_3, ~B_4, I_2(7).
struct Family {
  char letter = '?';
  std::size_t rank = 0;
  bool affine = false;
  Label parameter = 0;  // only for I_2(m)

  /// Plain ASCII form: "A3", "~A2", "I2(7)".
  std::string ascii() const;
  /// Display form with a tilde (precomposed where Unicode has one) and
  /// subscript rank: "Ã₂".
  std::string pretty() const;
  friend bool operator==(const Family&, const Family&) = default;
};

struct ComponentType {
  std::vector<std::size_t> vertices;  // sorted
  Kind kind = Kind::Other;
  Family family;  // meaningful unless kind == Other
};

struct ClassificationResult {
  std::vector<ComponentType> components;  // ordered by smallest vertex
  Kind global = Kind::Spherical;

  /// e.g. "Affine(Ã₂)" or "Spherical(A₁ × A₂)".
  std::string summary() const;
};

/// Connected components of the Coxeter graph, each sorted, ordered by first vertex.
std::vector<std::vector<std::size_t>> connected_components(const CoxeterMatrix& m);

ClassificationResult classify(const CoxeterMatrix& m);

/// Triangle group trichotomy by the exact sign of 1/p + 1/q + 1/r - 1.
/// Throws std::invalid_argument for infinite or < 2 labels.
Kind classify_triangle(Label p, Label q, Label r);

/// Subsets T (including the empty set) whose induced diagram is spherical,
/// sorted by size, then lexicographically. Exponential in n.
std::vector<std::vector<std::size_t>> special_spherical_subgroups(const CoxeterMatrix& m);

/// Free-rank data from the odd subgraph. Implements exactly k = e - v + 1 for
/// the component of s in the graph of odd finite labels.
struct CentralizerRank {
  std::size_t generator = 0;
  std::vector<std::size_t> commuting;      // {s} and every t with m_st = 2
  std::vector<std::size_t> odd_component;  // sorted
  std::size_t edges = 0;
  std::size_t vertices = 0;
  std::size_t free_rank = 0;
};

CentralizerRank centralizer_rank(const CoxeterMatrix& m, std::size_t s);

bool is_even(const CoxeterMatrix& m);
bool is_right_angled(const CoxeterMatrix& m);

/// Catalog diagrams with a fixed vertex numbering. Throws for ranks outside
/// the family's range.
CoxeterMatrix finite_diagram(char letter, std::size_t rank, Label parameter = 0);
CoxeterMatrix affine_diagram(char letter, std::size_t rank);

/// Labeled-graph isomorphism (backtracking).
bool diagrams_isomorphic(const CoxeterMatrix& a, const CoxeterMatrix& b);

}  // namespace coxkit::diagram
