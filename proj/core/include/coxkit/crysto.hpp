#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxkit/diagram.hpp"
#include "coxkit/exact.hpp"
#include "coxkit/permgrp.hpp"
#include "coxkit/report.hpp"
#include "coxkit/titsrep.hpp"

namespace coxkit::crysto {

using Vec = std::vector<std::int64_t>;
using IMat = exact::Matrix<long long>;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// (v, g) in Z^n x| G0, g an index into the point group.
struct CrystElement {
  Vec v;
  perm::Index g = 0;
  friend bool operator==(const CrystElement&, const CrystElement&) = default;
};

/// Split crystallographic group Z^n x|_rho G0 with G0 a permutation group and
/// rho given on G0's generators. Products use (v, g)(w, h) = (v + rho(g)w, gh).
class CrystGroup {
 public:
  /// Validates that rho extends to a homomorphism into GL_n(Z).
  CrystGroup(std::size_t rank, perm::PermGroup point_group, std::vector<IMat> rho_generators);

  std::size_t rank() const { return n_; }
  const perm::PermGroup& point_group() const { return g0_; }
  const std::vector<IMat>& rho_generators() const { return rho_gens_; }
  const IMat& rho(perm::Index g) const { return rho_[g]; }

  CrystElement identity() const { return {Vec(n_, 0), 0}; }
  CrystElement translation(Vec v) const;
  /// (0, g) for the k-th point-group generator.
  CrystElement point_generator(std::size_t k) const;
  CrystElement point(perm::Index g) const { return {Vec(n_, 0), g}; }

  CrystElement multiply(const CrystElement& a, const CrystElement& b) const;
  CrystElement inverse(const CrystElement& a) const;
  CrystElement power(const CrystElement& a, long long k) const;
  bool is_translation(const CrystElement& a) const { return a.g == 0; }

  std::string to_string(const CrystElement& a) const;

 private:
  std::size_t n_;
  perm::PermGroup g0_;
  std::vector<IMat> rho_gens_;
  std::vector<IMat> rho_;
};

CrystElement cryst_multiply(const CrystGroup& g, const CrystElement& a, const CrystElement& b);

/// Smallest k in 1..bound with a^k = 1.
std::optional<std::size_t> element_order(const CrystGroup& g, const CrystElement& a, std::size_t bound);

/// Only the identity of G0 acts trivially.
bool is_faithful(const CrystGroup& g);

enum class Irreducibility { Irreducible, Reducible, Undetermined };
std::string_view to_string(Irreducibility s);

struct IrreducibilityResult {
  Irreducibility status = Irreducibility::Undetermined;
  /// Basis (reduced row echelon) of a proper invariant subspace when Reducible.
  std::vector<std::vector<exact::Rational>> witness;
};

/// Irreducible when the commutant has dimension 1 (absolute irreducibility).
/// Otherwise spins the standard basis, then {-1,0,1}-probe vectors with first
/// nonzero entry +1 (fewest nonzeros first, then lexicographic with 1 before
/// -1), at most `max_probes` of them, looking for a proper invariant subspace.
IrreducibilityResult irreducibility_status(const CrystGroup& g, std::size_t max_probes = 64);

/// Affine Coxeter group ~A_n realised on the A_n root lattice (simple-root
/// coordinates). s_1..s_n are the simple transpositions; s_{n+1} is the
/// reflection in the highest root composed with the translation by it.
struct AffineCoxeterModel {
  CrystGroup group;
  diagram::CoxeterMatrix coxeter;
  std::vector<CrystElement> s;             // s_1..s_{n+1}
  std::vector<CrystElement> translations;  // t_1, t_2 when n == 2

  /// Product of the generators named by a 0-based word.
  CrystElement word(const titsrep::Word& w) const;
};

/// Verifies every Coxeter relation on construction (std::logic_error otherwise).
AffineCoxeterModel build_affine_An(std::size_t n);

/// Checks on the endomorphism s1 -> s1, s2 -> s2, s3 -> g s3 g^-1 of ~A_2
/// with g = (s3 s1 s2)^2. The non-membership of s3 in the image is tested on
/// all elements of word length <= search_length (evidence only).
report::VerificationReport verify_a2_phi(std::size_t search_length = 12);

// ---------------------------------------------------------------------------
// Complement swap on finite split extensions H x| K.

class HNotAbelian : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAComplement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ComplementSwap {
  perm::PermGroup group;
  std::vector<perm::Index> map;  // element index -> image index
  perm::Permutation apply(const perm::Permutation& x) const;
};

/// For G = H x| K = H x| K2 with H abelian and normal, the map h k -> h k'
/// where k = h' k' with h' in H, k' in K2. Verified to be an automorphism
/// fixing H pointwise (Cayley-edge homomorphism check plus bijectivity).
ComplementSwap complement_swap(const perm::PermGroup& g, const perm::PermGroup& h, const perm::PermGroup& k,
                               const perm::PermGroup& k2);

struct SplitInstance {
  perm::PermGroup g, h, k, k2;
  std::string description;
};

/// Random affine group F_p^d x| K on p^d points, H the translations, K a
/// random nontrivial linear group, K2 a second complement found by searching
/// random translation twists of K's generators.
SplitInstance random_split_instance(std::mt19937_64& rng, std::size_t max_order = 600);

/// Runs complement_swap on `instances` random split instances, re-checking
/// each result independently (products of all pairs, or of 4000 random pairs
/// for large groups; H fixed; K mapped onto K2), then checks that S4 with
/// H = A4 is rejected with HNotAbelian.
report::VerificationReport verify_complement_swap(std::uint64_t seed = 1, std::size_t instances = 50);

}  // namespace coxkit::crysto
