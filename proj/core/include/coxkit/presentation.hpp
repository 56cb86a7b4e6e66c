#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace coxkit::perm {

/// Letter of a group word: +k is generator k-1, -k its inverse (k >= 1).
using Letter = int;
using GroupWord = std::vector<Letter>;

GroupWord inverse(const GroupWord& w);
GroupWord concat(const GroupWord& a, const GroupWord& b);
GroupWord power(const GroupWord& w, long long k);

/// Finitely presented group <generators | relators>.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;

  std::size_t generator_count() const { return generators.size(); }
  /// Throws std::invalid_argument if a letter is out of range.
  void validate() const;

  /// Generators named g1, g2, ...
  static Presentation with_generators(std::size_t count);
};

/// Word syntax: space-separated factors; a factor is a generator name or a
/// parenthesized word, optionally followed by ^k (k may be negative). The
/// literal 1 is the empty word.
///   "a b^-1", "(a b)^3", "1"
GroupWord parse_group_word(std::string_view text, const std::vector<std::string>& names);
std::string format_group_word(const GroupWord& w, const std::vector<std::string>& names);

/// Presentation file format:
///   gens a b        # generator names
///   rel a^2         # one relator per line
///   rel (a b)^3
/// `#` starts a comment. "gens" with no names gives the trivial presentation.
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);

}  // namespace coxkit::perm
