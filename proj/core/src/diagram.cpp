#include "coxkit/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include <gmpxx.h>

namespace coxkit::diagram {

std::string label_to_string(Label m) { return m == kInfinity ? "inf" : std::to_string(m); }

CoxeterMatrix::CoxeterMatrix(std::size_t n) : n_(n), m_(n * n, 2) {
  for (std::size_t i = 0; i < n; ++i) m_[i * n + i] = 1;
}

CoxeterMatrix CoxeterMatrix::from_rows(const std::vector<std::vector<Label>>& rows) {
  CoxeterMatrix out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("Coxeter matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const Label l = rows[i][j];
      if (i == j && l != 1) throw std::invalid_argument("Coxeter matrix diagonal must be 1");
      if (i != j && l < 2) throw std::invalid_argument("off-diagonal Coxeter labels must be >= 2");
      if (l != rows[j][i]) throw std::invalid_argument("Coxeter matrix must be symmetric");
      out.m_[i * out.n_ + j] = l;
    }
  }
  return out;
}

void CoxeterMatrix::set(std::size_t i, std::size_t j, Label label) {
  if (i >= n_ || j >= n_) throw std::out_of_range("Coxeter generator index out of range");
  if (i == j) throw std::invalid_argument("diagonal Coxeter labels are fixed at 1");
  if (label < 2) throw std::invalid_argument("off-diagonal Coxeter labels must be >= 2");
  m_[i * n_ + j] = label;
  m_[j * n_ + i] = label;
}

CoxeterMatrix CoxeterMatrix::induced(const std::vector<std::size_t>& vertices) const {
  CoxeterMatrix out(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b) out.set(a, b, (*this)(vertices[a], vertices[b]));
  return out;
}

CoxeterMatrix CoxeterMatrix::relabeled(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_) throw std::invalid_argument("relabeling has the wrong size");
  CoxeterMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) out.set(perm[i], perm[j], (*this)(i, j));
  return out;
}

// ---------------------------------------------------------------------------
// DSL

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_count(const Token& tok, std::size_t line) {
  std::size_t value = 0;
  const auto* end = tok.text.data() + tok.text.size();
  auto [ptr, ec] = std::from_chars(tok.text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, tok.column, "expected a non-negative integer, got '" + std::string(tok.text) + "'");
  return value;
}

}  // namespace

CoxeterMatrix parse_diagram(std::string_view text) {
  std::optional<CoxeterMatrix> m;
  std::map<std::pair<std::size_t, std::size_t>, Label> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto toks = tokenize_line(line);
    if (toks.empty()) continue;
    if (toks[0].text == "verts") {
      if (m) throw ParseError(line_no, toks[0].column, "duplicate 'verts' statement");
      if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "expected 'verts N'");
      m.emplace(parse_count(toks[1], line_no));
    } else if (toks[0].text == "edge") {
      if (!m) throw ParseError(line_no, toks[0].column, "'edge' before 'verts'");
      if (toks.size() != 4) throw ParseError(line_no, toks[0].column, "expected 'edge i j L'");
      const std::size_t i = parse_count(toks[1], line_no);
      const std::size_t j = parse_count(toks[2], line_no);
      for (auto [v, tok] : {std::pair{i, toks[1]}, std::pair{j, toks[2]}})
        if (v < 1 || v > m->size()) throw ParseError(line_no, tok.column, "vertex index out of range 1.." + std::to_string(m->size()));
      if (i == j) throw ParseError(line_no, toks[2].column, "edge endpoints must differ");
      Label label = 0;
      if (toks[3].text == "inf") {
        label = kInfinity;
      } else {
        const std::size_t raw = parse_count(toks[3], line_no);
        if (raw < 2) throw ParseError(line_no, toks[3].column, "edge label must be >= 2 or 'inf'");
        if (raw >= kInfinity) throw ParseError(line_no, toks[3].column, "edge label too large");
        label = static_cast<Label>(raw);
      }
      const std::pair<std::size_t, std::size_t> key{std::min(i, j) - 1, std::max(i, j) - 1};
      if (auto it = seen.find(key); it != seen.end() && it->second != label)
        throw ParseError(line_no, toks[0].column, "conflicting labels for edge " + std::to_string(i) + " " + std::to_string(j));
      seen[key] = label;
      m->set(i - 1, j - 1, label);
    } else {
      throw ParseError(line_no, toks[0].column, "unknown statement '" + std::string(toks[0].text) + "'");
    }
  }
  if (!m) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'verts N' statement");
  return *m;
}

std::string format_diagram(const CoxeterMatrix& m) {
  std::ostringstream os;
  os << "verts " << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m(i, j) != 2) os << "edge " << i + 1 << ' ' << j + 1 << ' ' << label_to_string(m(i, j)) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Families

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Spherical:
      return "Spherical";
    case Kind::Affine:
      return "Affine";
    case Kind::Other:
      return "Other";
  }
  return "?";
}

std::string Family::ascii() const {
  std::string s = affine ? "~" : "";
  s += letter;
  s += std::to_string(rank);
  if (letter == 'I') s += "(" + label_to_string(parameter) + ")";
  return s;
}

std::string Family::pretty() const {
  static const char* const kSub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s(1, letter);
  if (affine && letter == 'A')
    s = "Ã";
  else if (affine && letter == 'E')
    s = "Ẽ";
  else if (affine)
    s += "̃";
  for (char c : std::to_string(rank)) s += kSub[c - '0'];
  if (letter == 'I') s += "(" + label_to_string(parameter) + ")";
  return s;
}

std::string ClassificationResult::summary() const {
  if (global == Kind::Other) return "Other";
  std::string s(to_string(global));
  s += '(';
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += " × ";
    s += components[i].family.pretty();
  }
  s += ')';
  return s;
}

namespace {

void path(CoxeterMatrix& m, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) m.set(i, i + 1, 3);
}

// Star-shaped tree: centre 0 and three arms of the given lengths.
CoxeterMatrix arms(std::size_t a, std::size_t b, std::size_t c) {
  CoxeterMatrix m(1 + a + b + c);
  std::size_t next = 1;
  for (std::size_t len : {a, b, c}) {
    std::size_t prev = 0;
    for (std::size_t k = 0; k < len; ++k, ++next) {
      m.set(prev, next, 3);
      prev = next;
    }
  }
  return m;
}

}  // namespace

CoxeterMatrix finite_diagram(char letter, std::size_t n, Label parameter) {
  auto bad = [&] { return std::invalid_argument(std::string("no finite diagram ") + letter + std::to_string(n)); };
  switch (letter) {
    case 'A': {
      if (n < 1) throw bad();
      CoxeterMatrix m(n);
      path(m, 0, n - 1);
      return m;
    }
    case 'B':
    case 'C': {
      if (n < 2) throw bad();
      CoxeterMatrix m(n);
      path(m, 0, n - 1);
      m.set(n - 2, n - 1, 4);
      return m;
    }
    case 'D': {
      if (n < 4) throw bad();
      CoxeterMatrix m(n);
      path(m, 0, n - 2);
      m.set(n - 3, n - 1, 3);
      return m;
    }
    case 'E':
      if (n < 6 || n > 8) throw bad();
      return arms(1, 2, n - 4);
    case 'F': {
      if (n != 4) throw bad();
      CoxeterMatrix m(4);
      path(m, 0, 3);
      m.set(1, 2, 4);
      return m;
    }
    case 'G': {
      if (n != 2) throw bad();
      CoxeterMatrix m(2);
      m.set(0, 1, 6);
      return m;
    }
    case 'H': {
      if (n != 3 && n != 4) throw bad();
      CoxeterMatrix m(n);
      path(m, 0, n - 1);
      m.set(0, 1, 5);
      return m;
    }
    case 'I': {
      if (n != 2 || parameter < 3 || parameter == kInfinity) throw bad();
      CoxeterMatrix m(2);
      m.set(0, 1, parameter);
      return m;
    }
    default:
      throw bad();
  }
}

CoxeterMatrix affine_diagram(char letter, std::size_t n) {
  auto bad = [&] { return std::invalid_argument(std::string("no affine diagram ~") + letter + std::to_string(n)); };
  CoxeterMatrix m(n + 1);
  switch (letter) {
    case 'A':
      if (n < 1) throw bad();
      if (n == 1) {
        m.set(0, 1, kInfinity);
        return m;
      }
      path(m, 0, n);
      m.set(0, n, 3);
      return m;
    case 'B':
      if (n < 3) throw bad();
      m.set(0, 2, 3);
      path(m, 1, n - 1);
      m.set(n - 1, n, 4);
      return m;
    case 'C':
      if (n < 2) throw bad();
      path(m, 0, n);
      m.set(0, 1, 4);
      m.set(n - 1, n, 4);
      return m;
    case 'D':
      if (n < 4) throw bad();
      m.set(0, 2, 3);
      path(m, 1, n - 2);
      m.set(n - 2, n - 1, 3);
      m.set(n - 2, n, 3);
      return m;
    case 'E':
      if (n == 6) return arms(2, 2, 2);
      if (n == 7) return arms(1, 3, 3);
      if (n == 8) return arms(1, 2, 5);
      throw bad();
    case 'F':
      if (n != 4) throw bad();
      path(m, 0, 4);
      m.set(2, 3, 4);
      return m;
    case 'G':
      if (n != 2) throw bad();
      m.set(0, 1, 3);
      m.set(1, 2, 6);
      return m;
    default:
      throw bad();
  }
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

struct VertexSignature {
  std::vector<Label> incident;  // sorted labels of incident edges
  friend bool operator==(const VertexSignature&, const VertexSignature&) = default;
};

std::vector<VertexSignature> signatures(const CoxeterMatrix& m) {
  std::vector<VertexSignature> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m.adjacent(i, j)) out[i].incident.push_back(m(i, j));
    std::sort(out[i].incident.begin(), out[i].incident.end());
  }
  return out;
}

}  // namespace

bool diagrams_isomorphic(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  const auto sa = signatures(a);
  const auto sb = signatures(b);
  {
    auto ka = sa, kb = sb;
    auto cmp = [](const VertexSignature& x, const VertexSignature& y) { return x.incident < y.incident; };
    std::sort(ka.begin(), ka.end(), cmp);
    std::sort(kb.begin(), kb.end(), cmp);
    if (!(ka == kb)) return false;
  }
  // Map a's vertices in BFS order so that each new vertex has mapped neighbours.
  std::vector<std::size_t> order;
  std::vector<bool> queued(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (queued[root]) continue;
    queued[root] = true;
    order.push_back(root);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head)
      for (std::size_t j = 0; j < n; ++j)
        if (!queued[j] && a.adjacent(order[head], j)) {
          queued[j] = true;
          order.push_back(j);
        }
  }
  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) return true;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || !(sa[v] == sb[w])) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t u = order[d];
        ok = a(v, u) == b(w, image[u]);
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(0);
}

// ---------------------------------------------------------------------------
// Classification

std::vector<std::vector<std::size_t>> connected_components(const CoxeterMatrix& m) {
  std::vector<std::vector<std::size_t>> comps;
  std::vector<bool> seen(m.size(), false);
  for (std::size_t root = 0; root < m.size(); ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp{root};
    seen[root] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (std::size_t j = 0; j < m.size(); ++j)
        if (!seen[j] && m.adjacent(comp[head], j)) {
          seen[j] = true;
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

struct Candidate {
  Family family;
  Kind kind;
  CoxeterMatrix diagram;
};

std::vector<Candidate> candidates_for(const CoxeterMatrix& comp) {
  const std::size_t k = comp.size();
  std::vector<Candidate> out;
  auto fin = [&](char letter, std::size_t n, Label p = 0) {
    out.push_back({Family{letter, n, false, p}, Kind::Spherical, finite_diagram(letter, n, p)});
  };
  auto aff = [&](char letter, std::size_t n) {
    out.push_back({Family{letter, n, true, 0}, Kind::Affine, affine_diagram(letter, n)});
  };
  fin('A', k);
  if (k >= 2) fin('B', k);
  if (k >= 4) fin('D', k);
  if (k >= 6 && k <= 8) fin('E', k);
  if (k == 4) fin('F', 4);
  if (k == 3 || k == 4) fin('H', k);
  if (k == 2) {
    const Label m = comp(0, 1);
    if (m == 6)
      fin('G', 2);
    else if (m >= 5 && m != kInfinity)
      fin('I', 2, m);
  }
  if (k >= 2) aff('A', k - 1);
  if (k >= 4) aff('B', k - 1);
  if (k >= 3) aff('C', k - 1);
  if (k >= 5) aff('D', k - 1);
  if (k == 7) aff('E', 6);
  if (k == 8) aff('E', 7);
  if (k == 9) aff('E', 8);
  if (k == 5) aff('F', 4);
  if (k == 3) aff('G', 2);
  return out;
}

ComponentType classify_component(const CoxeterMatrix& m, std::vector<std::size_t> vertices) {
  const CoxeterMatrix sub = m.induced(vertices);
  ComponentType out{std::move(vertices), Kind::Other, {}};
  for (auto& cand : candidates_for(sub)) {
    if (diagrams_isomorphic(sub, cand.diagram)) {
      out.kind = cand.kind;
      out.family = cand.family;
      break;
    }
  }
  return out;
}

Kind combine(const std::vector<Kind>& kinds) {
  bool any_affine = false;
  for (Kind k : kinds) {
    if (k == Kind::Other) return Kind::Other;
    if (k == Kind::Affine) any_affine = true;
  }
  return any_affine ? Kind::Affine : Kind::Spherical;
}

}  // namespace

ClassificationResult classify(const CoxeterMatrix& m) {
  ClassificationResult out;
  std::vector<Kind> kinds;
  for (auto& comp : connected_components(m)) {
    out.components.push_back(classify_component(m, std::move(comp)));
    kinds.push_back(out.components.back().kind);
  }
  out.global = combine(kinds);
  return out;
}

Kind classify_triangle(Label p, Label q, Label r) {
  for (Label l : {p, q, r}) {
    if (l == kInfinity) throw std::invalid_argument("triangle groups need finite labels");
    if (l < 2) throw std::invalid_argument("triangle group labels must be >= 2");
  }
  // sign(1/p + 1/q + 1/r - 1) = sign(qr + pr + pq - pqr)
  const mpz_class P(static_cast<unsigned long>(p)), Q(static_cast<unsigned long>(q)), R(static_cast<unsigned long>(r));
  const mpz_class lhs = Q * R + P * R + P * Q;
  const mpz_class rhs = P * Q * R;
  if (lhs > rhs) return Kind::Spherical;
  if (lhs == rhs) return Kind::Affine;
  return Kind::Other;
}

std::vector<std::vector<std::size_t>> special_spherical_subgroups(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  if (n > 30) throw std::invalid_argument("special subgroup enumeration is limited to 30 generators");
  using Mask = std::uint64_t;
  std::vector<Mask> adjacency(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.adjacent(i, j)) adjacency[i] |= Mask{1} << j;

  std::unordered_map<Mask, bool> spherical_component;
  auto component_is_spherical = [&](Mask comp) {
    auto it = spherical_component.find(comp);
    if (it != spherical_component.end()) return it->second;
    std::vector<std::size_t> verts;
    for (std::size_t i = 0; i < n; ++i)
      if (comp >> i & 1) verts.push_back(i);
    const bool sph = classify_component(m, verts).kind == Kind::Spherical;
    spherical_component.emplace(comp, sph);
    return sph;
  };

  std::vector<std::vector<std::size_t>> out;
  for (Mask mask = 0; mask < (Mask{1} << n); ++mask) {
    Mask rest = mask;
    bool ok = true;
    while (rest && ok) {
      Mask comp = rest & (~rest + 1);
      for (Mask frontier = comp; frontier;) {
        Mask grow = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (frontier >> i & 1) grow |= adjacency[i];
        grow &= mask & ~comp;
        comp |= grow;
        frontier = grow;
      }
      rest &= ~comp;
      ok = component_is_spherical(comp);
    }
    if (!ok) continue;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) subset.push_back(i);
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

CentralizerRank centralizer_rank(const CoxeterMatrix& m, std::size_t s) {
  if (s >= m.size()) throw std::out_of_range("generator index out of range");
  CentralizerRank out;
  out.generator = s;
  for (std::size_t t = 0; t < m.size(); ++t)
    if (t == s || m(s, t) == 2) out.commuting.push_back(t);

  auto odd = [&](std::size_t i, std::size_t j) {
    const Label l = m(i, j);
    return i != j && l != kInfinity && l % 2 == 1;
  };
  std::vector<bool> seen(m.size(), false);
  std::vector<std::size_t> comp{s};
  seen[s] = true;
  for (std::size_t head = 0; head < comp.size(); ++head)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!seen[j] && odd(comp[head], j)) {
        seen[j] = true;
        comp.push_back(j);
      }
  std::sort(comp.begin(), comp.end());
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t b = a + 1; b < comp.size(); ++b)
      if (odd(comp[a], comp[b])) ++out.edges;
  out.vertices = comp.size();
  out.odd_component = std::move(comp);
  out.free_rank = out.edges + 1 - out.vertices;
  return out;
}

bool is_even(const CoxeterMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m(i, j) != kInfinity && m(i, j) % 2 == 1) return false;
  return true;
}

bool is_right_angled(const CoxeterMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m(i, j) != 2 && m(i, j) != kInfinity) return false;
  return true;
}

}  // namespace coxkit::diagram
