#include "coxkit/logic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>

namespace coxkit::logic {

// ---------------------------------------------------------------------------
// Terms

Term var(std::string name) { return {Atom{std::move(name), false, false}}; }
Term constant(std::string name) { return {Atom{std::move(name), true, false}}; }

Term inverse(const Term& t) {
  Term out(t.rbegin(), t.rend());
  for (auto& a : out) a.inverse = !a.inverse;
  return out;
}

Term concat(const Term& a, const Term& b) {
  Term out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Term power(const Term& t, long long k) {
  const Term base = k < 0 ? inverse(t) : t;
  Term out;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Term commutator(const Term& a, const Term& b) { return concat(concat(a, b), concat(inverse(a), inverse(b))); }

Term term_of(const perm::GroupWord& w, const std::vector<std::string>& vars) {
  Term out;
  for (perm::Letter l : w) {
    const std::size_t k = static_cast<std::size_t>(l < 0 ? -l : l);
    if (k == 0 || k > vars.size()) throw std::invalid_argument("letter " + std::to_string(l) + " out of range");
    out.push_back(Atom{vars[k - 1], false, l < 0});
  }
  return out;
}

std::set<std::string> variables(const Term& t) {
  std::set<std::string> out;
  for (const auto& a : t)
    if (!a.constant) out.insert(a.name);
  return out;
}

// ---------------------------------------------------------------------------
// Formula constructors

Formula truth(bool value) { return Formula{value ? Kind::True : Kind::False, {}, {}, {}, {}}; }
Formula eq(Term a, Term b) { return Formula{Kind::Eq, std::move(a), std::move(b), {}, {}}; }
Formula neq(Term a, Term b) { return Formula{Kind::Neq, std::move(a), std::move(b), {}, {}}; }
Formula negate(Formula f) { return Formula{Kind::Not, {}, {}, {}, {std::move(f)}}; }

Formula and_of(std::vector<Formula> fs) {
  if (fs.empty()) return truth(true);
  if (fs.size() == 1) return std::move(fs.front());
  return Formula{Kind::And, {}, {}, {}, std::move(fs)};
}

Formula or_of(std::vector<Formula> fs) {
  if (fs.empty()) return truth(false);
  if (fs.size() == 1) return std::move(fs.front());
  return Formula{Kind::Or, {}, {}, {}, std::move(fs)};
}

Formula forall(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) throw std::invalid_argument("quantifier without variables");
  return Formula{Kind::Forall, {}, {}, std::move(vars), {std::move(body)}};
}

Formula exists(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) throw std::invalid_argument("quantifier without variables");
  return Formula{Kind::Exists, {}, {}, std::move(vars), {std::move(body)}};
}

// ---------------------------------------------------------------------------
// Rendering

std::string render(const Term& t) {
  if (t.empty()) return "1";
  std::string s;
  for (const auto& a : t) {
    if (!s.empty()) s += ' ';
    if (a.constant) s += '$';
    s += a.name;
    if (a.inverse) s += "^-1";
  }
  return s;
}

namespace {

bool is_quantifier(Kind k) { return k == Kind::Forall || k == Kind::Exists; }

void render_into(const Formula& f, std::string& out);

void render_child(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(f, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  switch (f.kind) {
    case Kind::True:
      out += "true";
      return;
    case Kind::False:
      out += "false";
      return;
    case Kind::Eq:
    case Kind::Neq:
      out += render(f.lhs);
      out += f.kind == Kind::Eq ? " = " : " != ";
      out += render(f.rhs);
      return;
    case Kind::Not: {
      const Kind k = f.children[0].kind;
      out += '~';
      render_child(f.children[0], !(k == Kind::True || k == Kind::False || k == Kind::Eq || k == Kind::Neq || k == Kind::Not),
                   out);
      return;
    }
    case Kind::And:
    case Kind::Or:
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) out += f.kind == Kind::And ? " & " : " | ";
        const Kind k = f.children[i].kind;
        const bool parens = is_quantifier(k) || k == Kind::Or || (f.kind == Kind::And && k == Kind::And) ||
                            ((k == Kind::And || k == Kind::Or) && f.children[i].children.size() < 2);
        render_child(f.children[i], parens, out);
      }
      return;
    case Kind::Forall:
    case Kind::Exists:
      out += f.kind == Kind::Forall ? "forall" : "exists";
      for (const auto& v : f.vars) out += ' ' + v;
      out += ". ";
      render_into(f.children[0], out);
      return;
  }
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_keyword(std::string_view s) { return s == "forall" || s == "exists" || s == "true" || s == "false"; }

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Formula formula() {
    skip();
    const std::string_view w = peek_ident();
    if (w == "forall" || w == "exists") {
      pos_ += w.size();
      std::vector<std::string> vars;
      for (;;) {
        skip();
        const std::string_view v = peek_ident();
        if (v.empty()) break;
        if (is_keyword(v)) fail("keyword used as a variable");
        vars.emplace_back(v);
        pos_ += v.size();
      }
      if (vars.empty()) fail("expected a variable");
      expect('.');
      Formula body = formula();
      return w == "forall" ? forall(std::move(vars), std::move(body)) : exists(std::move(vars), std::move(body));
    }
    return disjunction();
  }

  Term term() {
    Term t;
    bool any = false;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      const char c = s_[pos_];
      if (c == '1' && (pos_ + 1 >= s_.size() || !ident_char(s_[pos_ + 1]))) {
        ++pos_;
        any = true;
        continue;
      }
      bool is_const = false;
      if (c == '$') {
        is_const = true;
        ++pos_;
      } else if (!ident_start(c)) {
        break;
      }
      const std::string_view name = peek_ident();
      if (name.empty()) fail("expected a name");
      if (!is_const && is_keyword(name)) break;
      pos_ += name.size();
      long long k = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip();
        k = integer();
      }
      const Term base{Atom{std::string(name), is_const, false}};
      const Term p = power(base, k);
      t.insert(t.end(), p.begin(), p.end());
      any = true;
    }
    if (!any) fail("expected a word");
    return t;
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
  }

 private:
  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (accept('|')) parts.push_back(conjunction());
    return parts.size() == 1 ? std::move(parts[0]) : Formula{Kind::Or, {}, {}, {}, std::move(parts)};
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (accept('&')) parts.push_back(unary());
    return parts.size() == 1 ? std::move(parts[0]) : Formula{Kind::And, {}, {}, {}, std::move(parts)};
  }

  Formula unary() {
    skip();
    if (accept('~')) return negate(unary());
    if (accept('(')) {
      Formula f = formula();
      expect(')');
      return f;
    }
    const std::string_view w = peek_ident();
    if (w == "forall" || w == "exists") return formula();
    if (w == "true" || w == "false") {
      pos_ += w.size();
      return truth(w == "true");
    }
    Term lhs = term();
    skip();
    if (s_.substr(pos_, 2) == "!=") {
      pos_ += 2;
      return neq(std::move(lhs), term());
    }
    if (accept('=')) return eq(std::move(lhs), term());
    fail("expected = or !=");
  }

  long long integer() {
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    long long v = 0;
    const auto r = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (r.ec != std::errc()) {
      pos_ = start;
      fail("expected an exponent");
    }
    pos_ = static_cast<std::size_t>(r.ptr - s_.data());
    if (v > 1000) fail("exponent too large");
    return s_[start] == '-' ? -v : v;
  }

  std::string_view peek_ident() const {
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) return {};
    std::size_t e = pos_;
    while (e < s_.size() && ident_char(s_[e])) ++e;
    return s_.substr(pos_, e - pos_);
  }

  void skip() {
    while (pos_ < s_.size()) {
      if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.finish();
  return f;
}

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  p.finish();
  return t;
}

// ---------------------------------------------------------------------------
// Variables, prefixes, substitution

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind) {
    case Kind::Eq:
    case Kind::Neq:
      for (const Term* t : {&f.lhs, &f.rhs})
        for (const auto& a : *t)
          if (!a.constant && !bound.count(a.name)) out.insert(a.name);
      return;
    case Kind::Forall:
    case Kind::Exists: {
      std::vector<std::string> added;
      for (const auto& v : f.vars)
        if (bound.insert(v).second) added.push_back(v);
      collect_free(f.children[0], bound, out);
      for (const auto& v : added) bound.erase(v);
      return;
    }
    default:
      for (const auto& c : f.children) collect_free(c, bound, out);
  }
}

void collect_all(const Formula& f, std::set<std::string>& out) {
  for (const Term* t : {&f.lhs, &f.rhs})
    for (const auto& a : *t)
      if (!a.constant) out.insert(a.name);
  out.insert(f.vars.begin(), f.vars.end());
  for (const auto& c : f.children) collect_all(c, out);
}

std::string alternating(char first, std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += (i % 2 == 0) ? first : (first == 'E' ? 'A' : 'E');
  return s;
}

bool has_quantifier(const Formula& f) {
  if (is_quantifier(f.kind)) return true;
  return std::any_of(f.children.begin(), f.children.end(), has_quantifier);
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::string quantifier_prefix(const Formula& f) {
  switch (f.kind) {
    case Kind::True:
    case Kind::False:
    case Kind::Eq:
    case Kind::Neq:
      return "";
    case Kind::Not: {
      std::string p = quantifier_prefix(f.children[0]);
      for (char& c : p) c = c == 'E' ? 'A' : 'E';
      return p;
    }
    case Kind::Forall:
    case Kind::Exists: {
      const char q = f.kind == Kind::Forall ? 'A' : 'E';
      const std::string body = quantifier_prefix(f.children[0]);
      if (!body.empty() && body[0] == q) return body;
      return q + body;
    }
    case Kind::And:
    case Kind::Or: {
      std::size_t best_len = 0;
      char best = 'E';
      bool any = false;
      for (char first : {'E', 'A'}) {
        std::size_t len = 0;
        for (const auto& c : f.children) {
          const std::string p = quantifier_prefix(c);
          if (p.empty()) continue;
          any = true;
          len = std::max(len, p.size() + (p[0] == first ? 0 : 1));
        }
        if (first == 'E' || len < best_len) {
          best_len = len;
          best = first;
        }
      }
      return any ? alternating(best, best_len) : "";
    }
  }
  return "";
}

bool is_prenex(const Formula& f) {
  const Formula* g = &f;
  while (is_quantifier(g->kind)) g = &g->children[0];
  return !has_quantifier(*g);
}

std::string_view to_string(PrefixClass c) {
  switch (c) {
    case PrefixClass::QuantifierFree:
      return "quantifier-free";
    case PrefixClass::Universal:
      return "universal";
    case PrefixClass::Existential:
      return "existential";
    case PrefixClass::AE:
      return "AE";
    case PrefixClass::EA:
      return "EA";
    case PrefixClass::EAE:
      return "EAE";
    case PrefixClass::Other:
      return "other";
  }
  return "?";
}

PrefixClass classify_prefix(const Formula& f) {
  const std::string p = quantifier_prefix(f);
  if (p.empty()) return PrefixClass::QuantifierFree;
  if (p == "A") return PrefixClass::Universal;
  if (p == "E") return PrefixClass::Existential;
  if (p == "AE") return PrefixClass::AE;
  if (p == "EA") return PrefixClass::EA;
  if (p == "EAE") return PrefixClass::EAE;
  return PrefixClass::Other;
}

namespace {

Term substitute_term(const Term& t, const std::string& v, const Term& by) {
  Term out;
  for (const auto& a : t) {
    if (!a.constant && a.name == v) {
      const Term r = a.inverse ? inverse(by) : by;
      out.insert(out.end(), r.begin(), r.end());
    } else {
      out.push_back(a);
    }
  }
  return out;
}

Formula rename_free(const Formula& f, const std::string& from, const std::string& to) { return substitute(f, from, var(to)); }

}  // namespace

Formula substitute(const Formula& f, const std::string& variable, const Term& t) {
  switch (f.kind) {
    case Kind::Eq:
    case Kind::Neq:
      return Formula{f.kind, substitute_term(f.lhs, variable, t), substitute_term(f.rhs, variable, t), {}, {}};
    case Kind::Forall:
    case Kind::Exists: {
      if (std::find(f.vars.begin(), f.vars.end(), variable) != f.vars.end()) return f;
      if (!free_variables(f).count(variable)) return f;
      const std::set<std::string> tv = variables(t);
      Formula g = f;
      std::set<std::string> taken;
      collect_all(f, taken);
      taken.insert(tv.begin(), tv.end());
      taken.insert(variable);
      for (auto& v : g.vars) {
        if (!tv.count(v)) continue;
        std::string fresh;
        for (std::size_t k = 1;; ++k) {
          fresh = v + "_" + std::to_string(k);
          if (!taken.count(fresh)) break;
        }
        taken.insert(fresh);
        g.children[0] = rename_free(g.children[0], v, fresh);
        v = fresh;
      }
      g.children[0] = substitute(g.children[0], variable, t);
      return g;
    }
    default: {
      Formula g = f;
      for (auto& c : g.children) c = substitute(c, variable, t);
      return g;
    }
  }
}

// ---------------------------------------------------------------------------
// Emitters

std::string generator_variable(std::size_t k) { return "x" + std::to_string(k + 1); }

Formula emit_chi(std::size_t m) {
  if (m == 0) throw std::invalid_argument("chi needs m >= 1");
  const Term x = var("x");
  const Term ym = power(var("y"), static_cast<long long>(m));
  return forall({"y"}, eq(commutator(x, ym), {}));
}

namespace {

std::vector<std::string> generator_variables(const perm::Presentation& p) {
  std::vector<std::string> v;
  for (std::size_t k = 0; k < p.generator_count(); ++k) v.push_back(generator_variable(k));
  return v;
}

std::vector<std::vector<Term>> subgroup_terms(const std::vector<std::vector<perm::GroupWord>>& subgroups,
                                              const std::vector<std::string>& vars) {
  std::vector<std::vector<Term>> out;
  for (const auto& s : subgroups) {
    if (s.empty()) throw std::invalid_argument("a subgroup needs at least one element word");
    std::vector<Term> ts;
    for (const auto& w : s) ts.push_back(term_of(w, vars));
    out.push_back(std::move(ts));
  }
  return out;
}

// /\_{i != i', |F_i| = |F_i'|} \/_j /\_j' g w_ij g^-1 != w_i'j', or nothing.
std::optional<Formula> non_conjugacy_block(const std::vector<std::vector<Term>>& f) {
  const Term g = var("g"), gi = inverse(g);
  std::vector<Formula> pairs;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t i2 = 0; i2 < f.size(); ++i2) {
      if (i == i2 || f[i].size() != f[i2].size()) continue;
      std::vector<Formula> ors;
      for (const auto& wij : f[i]) {
        const Term conj = concat(concat(g, wij), gi);
        std::vector<Formula> ands;
        for (const auto& w2 : f[i2]) ands.push_back(neq(conj, w2));
        ors.push_back(and_of(std::move(ands)));
      }
      pairs.push_back(or_of(std::move(ors)));
    }
  if (pairs.empty()) return std::nullopt;
  return and_of(std::move(pairs));
}

}  // namespace

Formula emit_finite_g(const perm::Presentation& p, const std::vector<std::vector<perm::GroupWord>>& subgroups) {
  if (subgroups.empty()) throw std::invalid_argument("Finite_G needs at least one finite subgroup");
  const auto vars = generator_variables(p);
  const auto f = subgroup_terms(subgroups, vars);
  std::vector<Formula> parts;
  for (const auto& r : p.relators) parts.push_back(eq(term_of(r, vars), {}));
  for (const auto& s : f)
    for (const auto& w : s)
      if (!w.empty()) parts.push_back(neq(w, {}));
  if (auto block = non_conjugacy_block(f)) parts.push_back(forall({"g"}, std::move(*block)));
  return and_of(std::move(parts));
}

Formula emit_gamma(const perm::Presentation& p, const std::vector<std::string>& z, const std::vector<perm::GroupWord>& w,
                   const Formula& theta, const std::vector<std::vector<perm::GroupWord>>& subgroups,
                   const std::vector<perm::GroupWord>& hom_gen_words) {
  if (z.size() != w.size())
    throw std::invalid_argument("arity mismatch: " + std::to_string(z.size()) + " variables for " + std::to_string(w.size()) +
                                " words");
  const auto vars = generator_variables(p);
  for (const auto& name : z)
    if (name == "g" || std::find(vars.begin(), vars.end(), name) != vars.end())
      throw std::invalid_argument("free variable " + name + " clashes with a bound variable");
  const auto theta_free = free_variables(theta);
  if (theta_free.size() != 1) throw std::invalid_argument("theta must have exactly one free variable");
  const std::string tv = *theta_free.begin();

  std::vector<Formula> parts;
  for (std::size_t i = 0; i < z.size(); ++i) parts.push_back(eq(var(z[i]), term_of(w[i], vars)));
  for (const auto& r : p.relators) parts.push_back(eq(term_of(r, vars), {}));
  for (const auto& h : hom_gen_words) parts.push_back(substitute(theta, tv, term_of(h, vars)));
  const auto block = non_conjugacy_block(subgroup_terms(subgroups, vars));
  if (block) parts.push_back(*block);
  Formula body = and_of(std::move(parts));
  if (block) body = forall({"g"}, std::move(body));
  return vars.empty() ? body : exists(vars, std::move(body));
}

// ---------------------------------------------------------------------------
// Evaluation

FiniteGroupModel FiniteGroupModel::make(const perm::PermGroup& g, const std::map<std::string, perm::Permutation>& constants) {
  FiniteGroupModel m{g, perm::CayleyTable(g), {}};
  for (const auto& [name, p] : constants) {
    const auto i = g.index_of(p);
    if (!i) throw std::invalid_argument("constant $" + name + " = " + p.to_string() + " is not in the group");
    m.constants[name] = *i;
  }
  return m;
}

std::uint64_t budget_from_env() {
  const char* s = std::getenv("COXKIT_BUDGET");
  if (!s) return kDefaultBudget;
  std::uint64_t v = 0;
  const std::string_view sv(s);
  const auto r = std::from_chars(sv.data(), sv.data() + sv.size(), v);
  if (r.ec != std::errc() || r.ptr != sv.data() + sv.size() || v == 0) return kDefaultBudget;
  return v;
}

namespace {

struct Letter {
  bool is_const;
  bool inverse;
  std::uint32_t v;  // constant value or slot
};

struct Node {
  Kind kind;
  std::vector<Letter> lhs, rhs;
  std::vector<std::uint32_t> slots;
  std::vector<Node> kids;
};

class Evaluator {
 public:
  Evaluator(const FiniteGroupModel& m, std::uint64_t budget) : m_(m), budget_(budget) {}

  Node compile(const Formula& f, std::map<std::string, std::uint32_t>& scope) {
    Node n{f.kind, {}, {}, {}, {}};
    switch (f.kind) {
      case Kind::Eq:
      case Kind::Neq:
        n.lhs = letters(f.lhs, scope);
        n.rhs = letters(f.rhs, scope);
        break;
      case Kind::Forall:
      case Kind::Exists: {
        std::map<std::string, std::uint32_t> inner = scope;
        for (const auto& v : f.vars) {
          const auto s = static_cast<std::uint32_t>(values_.size());
          values_.push_back(0);
          inner[v] = s;
          n.slots.push_back(s);
        }
        n.kids.push_back(compile(f.children[0], inner));
        break;
      }
      default:
        for (const auto& c : f.children) n.kids.push_back(compile(c, scope));
    }
    return n;
  }

  std::uint32_t bind(Index value) {
    values_.push_back(value);
    return static_cast<std::uint32_t>(values_.size() - 1);
  }

  bool eval(const Node& n) {
    switch (n.kind) {
      case Kind::True:
        return true;
      case Kind::False:
        return false;
      case Kind::Eq:
        return value(n.lhs) == value(n.rhs);
      case Kind::Neq:
        return value(n.lhs) != value(n.rhs);
      case Kind::Not:
        return !eval(n.kids[0]);
      case Kind::And:
        for (const auto& k : n.kids)
          if (!eval(k)) return false;
        return true;
      case Kind::Or:
        for (const auto& k : n.kids)
          if (eval(k)) return true;
        return false;
      case Kind::Forall:
      case Kind::Exists:
        return quantify(n, 0, n.kind == Kind::Exists);
    }
    return false;
  }

 private:
  std::vector<Letter> letters(const Term& t, const std::map<std::string, std::uint32_t>& scope) const {
    std::vector<Letter> out;
    for (const auto& a : t) {
      if (a.constant) {
        const auto it = m_.constants.find(a.name);
        if (it == m_.constants.end()) throw std::invalid_argument("unknown constant $" + a.name);
        out.push_back({true, a.inverse, it->second});
      } else {
        const auto it = scope.find(a.name);
        if (it == scope.end()) throw std::invalid_argument("unassigned free variable " + a.name);
        out.push_back({false, a.inverse, it->second});
      }
    }
    return out;
  }

  Index value(const std::vector<Letter>& w) const {
    const auto& t = m_.table;
    Index acc = 0;
    for (const auto& l : w) {
      Index x = l.is_const ? l.v : values_[l.v];
      if (l.inverse) x = t.inv(x);
      acc = t.mul(acc, x);
    }
    return acc;
  }

  bool quantify(const Node& n, std::size_t k, bool existential) {
    if (k == n.slots.size()) return eval(n.kids[0]);
    const auto order = static_cast<Index>(m_.table.order());
    for (Index x = 0; x < order; ++x) {
      if (++visits_ > budget_) throw BudgetExceeded(budget_);
      values_[n.slots[k]] = x;
      if (quantify(n, k + 1, existential) == existential) return existential;
    }
    return !existential;
  }

  const FiniteGroupModel& m_;
  std::uint64_t budget_;
  std::uint64_t visits_ = 0;
  std::vector<Index> values_;
};

}  // namespace

bool evaluate(const Formula& f, const FiniteGroupModel& m, const Assignment& a, std::uint64_t budget) {
  Evaluator ev(m, budget);
  std::map<std::string, std::uint32_t> scope;
  for (const auto& [name, value] : a) {
    if (value >= m.table.order()) throw std::invalid_argument("value of " + name + " is not an element of the model");
    scope[name] = ev.bind(value);
  }
  const Node root = ev.compile(f, scope);
  return ev.eval(root);
}

}  // namespace coxkit::logic
