#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxkit/diagram.hpp"
#include "coxkit/exact.hpp"

namespace coxkit::titsrep {

/// Word in the Coxeter generators, 0-based indices.
using Word = std::vector<std::size_t>;

/// Parses space-separated 1-based generator indices ("1 2 1"). Empty text is
/// the empty word. Throws std::invalid_argument on bad tokens or indices.
Word parse_word(std::string_view text, std::size_t generators);
std::string format_word(const Word& w);

/// Concatenation of `count` copies.
Word power(const Word& w, std::size_t count);

/// Tits reflection representation over Z[2cos(pi/L)].
///   sigma_s(e_t) = e_t + 2cos(pi/m_st) e_s  (t != s),  sigma_s(e_s) = -e_s
/// with 2cos(pi/inf) = 2. The conductor is the lcm of the finite labels
/// above 2 (labels 2 contribute the entry 0).
class ReflectionRep {
 public:
  /// Builds the matrices and verifies sigma_s^2 = I and that sigma_s sigma_t
  /// has order exactly m_st for every finite label. Throws std::logic_error
  /// naming the failing pair if a check fails.
  static ReflectionRep build(const diagram::CoxeterMatrix& m);

  const diagram::CoxeterMatrix& source() const { return m_; }
  unsigned conductor() const { return conductor_; }
  std::size_t rank() const { return m_.size(); }
  const exact::ExactMatrix& generator(std::size_t s) const { return sigma_.at(s); }
  exact::ExactMatrix identity() const;

  /// Matrix of the word, letters applied left to right as a product.
  exact::ExactMatrix evaluate(const Word& w) const;

 private:
  void right_multiply(exact::ExactMatrix& acc, std::size_t s) const;

  diagram::CoxeterMatrix m_;
  unsigned conductor_ = 1;
  std::vector<exact::ExactMatrix> sigma_;
};

bool words_equal(const ReflectionRep& rep, const Word& w1, const Word& w2);

/// First k in 1..bound with w^k = 1, or nullopt if none.
std::optional<std::size_t> element_order(const ReflectionRep& rep, const Word& w, std::size_t bound);

}  // namespace coxkit::titsrep
