#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxkit/permgrp.hpp"
#include "coxkit/report.hpp"

namespace coxkit::amalgam {

using perm::Index;
using perm::Permutation;
using perm::PermGroup;

enum class Side : std::uint8_t { A = 0, B = 1 };
inline Side other(Side s) { return s == Side::A ? Side::B : Side::A; }
char side_name(Side s);

/// Non-identity transversal representative of one factor.
struct Syllable {
  Side side;
  Index t;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Reduced normal form c t_1 t_2 ... t_k: c in C, factors of consecutive
/// syllables alternate.
struct AmalgamElement {
  Index c = 0;
  std::vector<Syllable> syllables;
  std::size_t length() const { return syllables.size(); }
  bool in_c() const { return syllables.empty(); }
  friend bool operator==(const AmalgamElement&, const AmalgamElement&) = default;
};

/// An element of A or B by index, before normalization.
struct RawElement {
  Side side;
  Index a;
};

class NotInjective : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHomomorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A *_C B for finite permutation groups. The embeddings are given by the
/// images of C's generators. Transversal of C in each factor: the
/// lexicographically smallest image array in each coset C a, so the trivial
/// coset is represented by the identity.
class FinAmalgam {
 public:
  FinAmalgam(PermGroup a, PermGroup b, PermGroup c, const std::vector<Permutation>& embed_a_gens,
             const std::vector<Permutation>& embed_b_gens);

  const PermGroup& factor(Side s) const { return f_[static_cast<int>(s)].group; }
  const PermGroup& c() const { return c_; }
  Index embed(Side s, Index c) const { return f_[static_cast<int>(s)].embed[c]; }
  /// a = embed(c) * t with t the coset representative; returns (c, t).
  std::pair<Index, Index> split(Side s, Index a) const {
    const auto& f = f_[static_cast<int>(s)];
    return {f.split_c[a], f.split_t[a]};
  }
  std::size_t coset_count(Side s) const { return f_[static_cast<int>(s)].transversal.size(); }
  const std::vector<Index>& transversal(Side s) const { return f_[static_cast<int>(s)].transversal; }

  AmalgamElement identity() const { return {}; }
  AmalgamElement from_factor(Side s, Index a) const;
  AmalgamElement from_factor(Side s, const Permutation& p) const;
  AmalgamElement from_c(Index c) const { return {c, {}}; }

  /// Unique reduced normal form of the product of the sequence.
  AmalgamElement normalize(std::span<const RawElement> seq) const;
  AmalgamElement multiply(const AmalgamElement& x, const AmalgamElement& y) const;
  AmalgamElement inverse(const AmalgamElement& x) const;
  AmalgamElement power(const AmalgamElement& x, long long k) const;
  /// x y x^-1
  AmalgamElement conjugate(const AmalgamElement& x, const AmalgamElement& y) const;
  /// Raw sequence whose product is x: embed_A(c), t_1, ..., t_k.
  std::vector<RawElement> raw(const AmalgamElement& x) const;

  /// e.g. "[c=(1 2)] B:(1 3)(2 4) A:(1 3)(2 4)(5 6)..."
  std::string to_string(const AmalgamElement& x) const;
  /// Factor pattern such as "BAB".
  std::string pattern(const AmalgamElement& x) const;

 private:
  struct Factor {
    PermGroup group;
    std::vector<Index> embed;        // C index -> factor index
    std::vector<Index> split_c;      // factor index -> C index
    std::vector<Index> split_t;      // factor index -> representative index
    std::vector<Index> transversal;  // representatives, identity first
  };

  void prepend(Side s, Index a, AmalgamElement& x) const;
  static Factor make_factor(PermGroup g, const PermGroup& c, const std::vector<Permutation>& gens, const char* name);

  PermGroup c_;
  Factor f_[2];
};

class RelatorViolated : public std::runtime_error {
 public:
  RelatorViolated(const std::string& relator, Side side)
      : std::runtime_error(std::string("relator of ") + side_name(side) + " not preserved: " + relator), relator_(relator), side_(side) {}
  const std::string& relator() const { return relator_; }
  Side side() const { return side_; }

 private:
  std::string relator_;
  Side side_;
};

class DisagreeOnC : public std::runtime_error {
 public:
  explicit DisagreeOnC(std::size_t generator)
      : std::runtime_error("images from A and B disagree on generator " + std::to_string(generator + 1) + " of C"),
        generator_(generator) {}
  std::size_t generator() const { return generator_; }

 private:
  std::size_t generator_;
};

/// Endomorphism given by images of A's and B's generators. Construction
/// checks every Cayley-graph relator of A and B and agreement on C.
class AmalgamEndo {
 public:
  const FinAmalgam& group() const { return *g_; }
  AmalgamElement apply(Side s, Index a) const { return table_[static_cast<int>(s)][a]; }
  AmalgamElement apply(const AmalgamElement& x) const;

 private:
  friend AmalgamEndo define_endo(const FinAmalgam&, const std::vector<AmalgamElement>&, const std::vector<AmalgamElement>&);
  const FinAmalgam* g_ = nullptr;
  std::vector<AmalgamElement> table_[2];
};

/// Throws RelatorViolated or DisagreeOnC. The amalgam must outlive the result.
AmalgamEndo define_endo(const FinAmalgam& g, const std::vector<AmalgamElement>& images_a,
                        const std::vector<AmalgamElement>& images_b);

/// A = S6 x S6 and B = S4 x S3 x S5 on 12 points each, amalgamated along
/// C = (Z/2)^4 = <e1, e2, e3, e4>.
struct CounterexampleAmalgam {
  FinAmalgam g;
  Permutation e_a[4];     // e1..e4 inside A
  Permutation e_b[4];     // e1..e4 inside B
  Permutation x, y;       // in A
  Permutation b;          // in B
  Permutation swap;       // i <-> i+6, normalizes A; sigma = conjugation by it
  AmalgamElement e[4], ex, ey, eb, u;
};

CounterexampleAmalgam build_counterexample_amalgam();

/// The numbered identity checks for the amalgam, plus a skipped entry for the
/// image-membership claim that is not verified. Fuzz corpora come from `seed`.
report::VerificationReport verify_amalgam_counterexample(std::uint64_t seed = 1, std::size_t corpus = 2000);

}  // namespace coxkit::amalgam
