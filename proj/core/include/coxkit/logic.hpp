#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coxkit/permgrp.hpp"
#include "coxkit/presentation.hpp"

namespace coxkit::logic {

using perm::Index;

/// A variable or a named constant ($name), possibly inverted.
struct Atom {
  std::string name;
  bool constant = false;
  bool inverse = false;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Group word in variables and constants; empty is the identity.
using Term = std::vector<Atom>;

Term var(std::string name);
Term constant(std::string name);
Term inverse(const Term& t);
Term concat(const Term& a, const Term& b);
Term power(const Term& t, long long k);
/// [a, b] = a b a^-1 b^-1
Term commutator(const Term& a, const Term& b);
/// Group word over generator variables: letter k becomes vars[k-1].
Term term_of(const perm::GroupWord& w, const std::vector<std::string>& vars);

enum class Kind { True, False, Eq, Neq, Not, And, Or, Forall, Exists };

struct Formula {
  Kind kind = Kind::True;
  Term lhs, rhs;                    // Eq, Neq
  std::vector<std::string> vars;    // Forall, Exists
  std::vector<Formula> children;    // Not (one), And, Or, quantifiers (one)
  friend bool operator==(const Formula&, const Formula&) = default;
};

Formula truth(bool value);
Formula eq(Term a, Term b);
Formula neq(Term a, Term b);
Formula negate(Formula f);
/// No children gives true (false for or_of); one child is returned as is.
Formula and_of(std::vector<Formula> fs);
Formula or_of(std::vector<Formula> fs);
Formula forall(std::vector<std::string> vars, Formula body);
Formula exists(std::vector<std::string> vars, Formula body);

/// Text grammar:
///   formula := ("forall" | "exists") ident+ "." formula | disj
///   disj    := conj ("|" conj)*
///   conj    := unary ("&" unary)*
///   unary   := "~" unary | "(" formula ")" | "true" | "false" | term ("=" | "!=") term
///   term    := factor+ | "1"
///   factor  := (ident | "$" ident) ["^" ["-"] digits]
/// `#` starts a comment running to the end of the line. Exponents are
/// expanded into repeated letters. Rendering prints x^-1 for
/// inverse letters and parenthesizes nested connectives, so parse(render(f))
/// == f for every formula built from the constructors above.
std::string render(const Formula& f);
std::string render(const Term& t);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);

std::set<std::string> free_variables(const Formula& f);
std::set<std::string> variables(const Term& t);

/// Quantifier prefix of a prenex form, as alternating blocks ("", "A", "EA",
/// ...). Quantifiers under negation are flipped; the prefixes of conjuncts and
/// disjuncts are interleaved into the shortest alternating prefix containing
/// each, preferring an existential first block on ties.
std::string quantifier_prefix(const Formula& f);
bool is_prenex(const Formula& f);

enum class PrefixClass { QuantifierFree, Universal, Existential, AE, EA, EAE, Other };
std::string_view to_string(PrefixClass c);
PrefixClass classify_prefix(const Formula& f);

/// Replaces free occurrences of `variable` by `t`, renaming bound variables
/// that would capture a variable of `t`.
Formula substitute(const Formula& f, const std::string& variable, const Term& t);

/// Variable standing for generator k (0-based) in emitted formulas: x1, x2, ...
std::string generator_variable(std::size_t k);

/// chi(x) = forall y. [x, y^m] = 1. Requires m >= 1.
Formula emit_chi(std::size_t m);

/// Finite_G(x1..xn): relators = 1, non-identity w_ij != 1, and
/// forall g. /\_{i != i', |F_i| = |F_i'|} \/_j /\_j' g w_ij g^-1 != w_i'j'.
/// `subgroups[i]` lists the elements of F_i as words in P's generators.
/// Identity words get no "!= 1" conjunct; the forall block is omitted when no
/// same-order pair exists.
Formula emit_finite_g(const perm::Presentation& p, const std::vector<std::vector<perm::GroupWord>>& subgroups);

/// gamma(z): exists x1..xn forall g. z = w(x) /\ relators /\ theta(h_i(x))
/// /\ the pairwise non-conjugacy block. `theta` has exactly one free variable.
/// The forall g is omitted when no same-order pair exists.
Formula emit_gamma(const perm::Presentation& p, const std::vector<std::string>& z, const std::vector<perm::GroupWord>& w,
                   const Formula& theta, const std::vector<std::vector<perm::GroupWord>>& subgroups,
                   const std::vector<perm::GroupWord>& hom_gen_words);

/// A finite group with named constants.
struct FiniteGroupModel {
  perm::PermGroup group;
  perm::CayleyTable table;
  std::map<std::string, Index> constants;

  /// Throws std::invalid_argument if a constant is not in the group.
  static FiniteGroupModel make(const perm::PermGroup& g, const std::map<std::string, perm::Permutation>& constants = {});
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("evaluation budget of " + std::to_string(budget) + " quantifier visits exceeded"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
/// COXKIT_BUDGET if set to a positive integer, else kDefaultBudget.
std::uint64_t budget_from_env();

using Assignment = std::map<std::string, Index>;

/// Tarskian evaluation by exhausting each quantifier over the model. Every
/// value tried for a bound variable counts one visit against `budget`.
/// Throws std::invalid_argument for an unassigned free variable or an unknown
/// constant, BudgetExceeded when the budget runs out.
bool evaluate(const Formula& f, const FiniteGroupModel& m, const Assignment& a = {}, std::uint64_t budget = kDefaultBudget);

}  // namespace coxkit::logic
