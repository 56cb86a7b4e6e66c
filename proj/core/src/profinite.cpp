#include "coxkit/profinite.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace coxkit::profinite {

namespace detail {
extern const std::string_view kCatalogText;
}

namespace {

constexpr std::size_t kCensus[kMaxBound + 1] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1,
                                                14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto p = s.find(sep);
    out.push_back(s.substr(0, p));
    if (p == std::string_view::npos) return out;
    s.remove_prefix(p + 1);
  }
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  const auto r = std::from_chars(s.data(), s.data() + s.size(), out);
  return r.ec == std::errc() && r.ptr == s.data() + s.size();
}

}  // namespace

std::size_t census(std::size_t order) {
  if (order == 0 || order > kMaxBound) throw std::out_of_range("census is known for orders 1..31");
  return kCensus[order];
}

Catalog Catalog::parse(std::string_view text, bool check_census) {
  Catalog c;
  std::size_t lineno = 0;
  for (std::string_view line : split(text, '\n')) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    const auto parts = split(line, '|');
    const auto head = words(parts[0]);
    std::size_t order = 0;
    if (head.size() != 3 || !parse_number(head[1], order) || order == 0)
      throw std::runtime_error("catalog line " + std::to_string(lineno) + ": expected 'id order name'");
    std::vector<perm::Permutation> gens;
    for (std::size_t i = 1; i < parts.size(); ++i) gens.push_back(perm::Permutation::parse(trim(parts[i]), order));
    perm::PermGroup g = perm::PermGroup::closure(gens, order);
    if (g.order() != order)
      throw std::runtime_error("catalog line " + std::to_string(lineno) + ": generators give order " +
                               std::to_string(g.order()) + ", expected " + std::to_string(order));
    perm::CayleyTable t(g);
    c.entries_.push_back(CatalogEntry{std::string(head[0]), order, std::string(head[2]), std::move(gens), g, std::move(t)});
  }
  if (check_census)
    for (std::size_t n = 1; n <= kMaxBound; ++n)
      if (c.count_of_order(n) != kCensus[n])
        throw std::runtime_error("catalog has " + std::to_string(c.count_of_order(n)) + " groups of order " +
                                 std::to_string(n) + ", expected " + std::to_string(kCensus[n]));
  return c;
}

const Catalog& Catalog::instance() {
  static const Catalog c = parse(detail::kCatalogText);
  return c;
}

const CatalogEntry* Catalog::find(std::string_view key) const {
  for (const auto& e : entries_)
    if (e.id == key) return &e;
  for (const auto& e : entries_)
    if (e.name == key) return &e;
  return nullptr;
}

const CatalogEntry& Catalog::at(std::string_view key) const {
  const auto* e = find(key);
  if (!e) throw std::invalid_argument("no catalog group '" + std::string(key) + "'");
  return *e;
}

std::size_t Catalog::count_of_order(std::size_t order) const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.order == order;
  return n;
}

Fingerprint fingerprint(const Presentation& p, std::size_t bound, std::uint64_t budget) {
  if (bound == 0 || bound > kMaxBound) throw std::invalid_argument("fingerprint bound must be in 1..31");
  p.validate();
  Fingerprint f;
  f.bound = bound;
  for (const auto& e : Catalog::instance().entries()) {
    if (e.order > bound) continue;
    std::uint64_t leaves = 1;
    for (std::size_t k = 0; k < p.generator_count(); ++k) {
      if (leaves > budget / e.order)
        throw SearchBudgetExceeded("hom search into " + e.id + " exceeds the budget of " + std::to_string(budget) +
                                   " generator-image tuples");
      leaves *= e.order;
    }
    f.entries.push_back({e.id, e.order, perm::hom_count(p, e.table)});
  }
  return f;
}

Comparison compare(const Fingerprint& f1, const Fingerprint& f2) {
  if (f1.bound != f2.bound)
    throw BoundMismatch("fingerprint bounds differ: " + std::to_string(f1.bound) + " vs " + std::to_string(f2.bound));
  if (f1.entries.size() != f2.entries.size()) throw std::invalid_argument("fingerprints cover different catalogs");
  Comparison c;
  c.bound = f1.bound;
  for (std::size_t i = 0; i < f1.entries.size(); ++i) {
    const auto& a = f1.entries[i];
    const auto& b = f2.entries[i];
    if (a.id != b.id) throw std::invalid_argument("fingerprints cover different catalogs");
    if (a.counts != b.counts) {
      c.equal = false;
      c.id = a.id;
      c.order = a.order;
      c.first = a.counts;
      c.second = b.counts;
      return c;
    }
  }
  return c;
}

std::string format_fingerprint(const Fingerprint& f) {
  std::ostringstream os;
  os << "bound " << f.bound << '\n';
  for (const auto& e : f.entries) os << e.order << ' ' << e.id << ' ' << e.counts.homs << ' ' << e.counts.epis << '\n';
  return os.str();
}

Fingerprint parse_fingerprint(std::string_view text) {
  Fingerprint f;
  bool have_bound = false;
  std::size_t lineno = 0;
  for (std::string_view line : split(text, '\n')) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    const auto w = words(line);
    if (w.empty()) continue;
    const std::string where = "fingerprint line " + std::to_string(lineno);
    if (!have_bound) {
      if (w.size() != 2 || w[0] != "bound" || !parse_number(w[1], f.bound))
        throw std::runtime_error(where + ": expected 'bound N'");
      have_bound = true;
      continue;
    }
    FingerprintEntry e;
    if (w.size() != 4 || !parse_number(w[0], e.order) || !parse_number(w[2], e.counts.homs) ||
        !parse_number(w[3], e.counts.epis))
      throw std::runtime_error(where + ": expected 'order id hom epi'");
    e.id = std::string(w[1]);
    if (e.order > f.bound) throw std::runtime_error(where + ": order exceeds the bound");
    f.entries.push_back(std::move(e));
  }
  if (!have_bound) throw std::runtime_error("fingerprint has no 'bound N' header");
  return f;
}

std::string format_comparison(const Comparison& c) {
  if (c.equal) return "Equal (hom and epi counts agree for every catalog group of order <= " + std::to_string(c.bound) + ")";
  std::string name;
  if (const auto* e = Catalog::instance().find(c.id)) name = " (" + e->name + ")";
  return "FirstDifference at " + c.id + name + ": homs " + std::to_string(c.first.homs) + " vs " +
         std::to_string(c.second.homs) + ", epis " + std::to_string(c.first.epis) + " vs " + std::to_string(c.second.epis);
}

Presentation presentation_of_cryst(const crysto::CrystGroup& g) {
  const std::size_t n = g.rank();
  const auto& g0 = g.point_group();
  const std::size_t k = g0.generators().size();
  Presentation p;
  for (std::size_t i = 0; i < n; ++i) p.generators.push_back("a" + std::to_string(i + 1));
  for (std::size_t j = 0; j < k; ++j) p.generators.push_back("p" + std::to_string(j + 1));
  auto a = [](std::size_t i) { return static_cast<perm::Letter>(i + 1); };
  auto pt = [&](std::size_t j) { return static_cast<perm::Letter>(n + j + 1); };
  auto translation_word = [&](const crysto::Vec& v) {
    perm::GroupWord w;
    for (std::size_t i = 0; i < n; ++i) {
      const auto part = perm::power({a(i)}, v[i]);
      w.insert(w.end(), part.begin(), part.end());
    }
    return w;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p.relators.push_back({a(i), a(j), -a(i), -a(j)});
  for (std::size_t j = 0; j < k; ++j) {
    const auto& m = g.rho_generators()[j];
    for (std::size_t i = 0; i < n; ++i) {
      crysto::Vec col(n);
      for (std::size_t r = 0; r < n; ++r) col[r] = m(r, i);
      perm::GroupWord w{pt(j), a(i), -pt(j)};
      const auto back = perm::inverse(translation_word(col));
      w.insert(w.end(), back.begin(), back.end());
      p.relators.push_back(std::move(w));
    }
  }
  for (const auto& r : perm::cayley_presentation(g0).relators) {
    crysto::CrystElement x = g.identity();
    perm::GroupWord w;
    for (perm::Letter l : r) {
      const std::size_t j = static_cast<std::size_t>(l < 0 ? -l : l) - 1;
      const auto gen = g.point_generator(j);
      x = g.multiply(x, l < 0 ? g.inverse(gen) : gen);
      w.push_back(l < 0 ? -pt(j) : pt(j));
    }
    if (!g.is_translation(x)) throw std::logic_error("point-group relator does not evaluate to a translation");
    const auto back = perm::inverse(translation_word(x.v));
    w.insert(w.end(), back.begin(), back.end());
    p.relators.push_back(std::move(w));
  }
  return p;
}

Presentation presentation_of_coxeter(const diagram::CoxeterMatrix& m) {
  Presentation p;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) p.generators.push_back("s" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = static_cast<perm::Letter>(i + 1);
    p.relators.push_back({s, s});
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m(i, j) == diagram::kInfinity) continue;
      p.relators.push_back(perm::power({s, static_cast<perm::Letter>(j + 1)}, m(i, j)));
    }
  }
  return p;
}

}  // namespace coxkit::profinite
