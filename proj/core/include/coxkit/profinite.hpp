#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coxkit/crysto.hpp"
#include "coxkit/diagram.hpp"
#include "coxkit/permgrp.hpp"
#include "coxkit/presentation.hpp"

namespace coxkit::profinite {

using perm::CayleyTable;
using perm::HomCount;
using perm::Presentation;

inline constexpr std::size_t kMaxBound = 31;

struct CatalogEntry {
  std::string id;  // "order.k"
  std::size_t order = 0;
  std::string name;
  std::vector<perm::Permutation> generators;
  perm::PermGroup group;
  CayleyTable table;
};

/// Every group of order <= 31 up to isomorphism, loaded from the embedded
/// data file. Loading checks each entry's order and the per-order census.
class Catalog {
 public:
  /// Throws std::runtime_error on malformed text or a census mismatch when
  /// `check_census` is set.
  static Catalog parse(std::string_view text, bool check_census = true);
  static const Catalog& instance();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  /// By id ("8.5") or name ("D8").
  const CatalogEntry* find(std::string_view key) const;
  const CatalogEntry& at(std::string_view key) const;
  std::size_t count_of_order(std::size_t order) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// Known number of groups of each order 1..31.
std::size_t census(std::size_t order);

struct FingerprintEntry {
  std::string id;
  std::size_t order = 0;
  HomCount counts;
  friend bool operator==(const FingerprintEntry&, const FingerprintEntry&) = default;
};

struct Fingerprint {
  std::size_t bound = 0;
  std::vector<FingerprintEntry> entries;  // catalog order: by order, then id
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hom and epi counts into every catalog group of order <= bound (at most 31).
/// Throws SearchBudgetExceeded when |Q|^(generator count) exceeds `budget`
/// for some target Q.
Fingerprint fingerprint(const Presentation& p, std::size_t bound, std::uint64_t budget = 1'000'000'000);

class BoundMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Comparison {
  std::size_t bound = 0;
  bool equal = true;
  /// First differing entry when not equal.
  std::string id;
  std::size_t order = 0;
  HomCount first, second;
};

/// Throws BoundMismatch for different bounds.
Comparison compare(const Fingerprint& f1, const Fingerprint& f2);

/// "bound N" then one "order id hom epi" line per entry.
std::string format_fingerprint(const Fingerprint& f);
/// Throws std::runtime_error on malformed input.
Fingerprint parse_fingerprint(std::string_view text);
std::string format_comparison(const Comparison& c);

/// Generators a1..an (lattice basis) then p1..pk (point-group generators);
/// relators: lattice commutators, p a_i p^-1 = rho(p) e_i, and the Cayley
/// relators of the point group, each corrected by the translation it
/// evaluates to.
Presentation presentation_of_cryst(const crysto::CrystGroup& g);

/// Coxeter presentation on s1..sn: s_i^2 and (s_i s_j)^m for finite m.
Presentation presentation_of_coxeter(const diagram::CoxeterMatrix& m);

}  // namespace coxkit::profinite
