#include "coxkit/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace coxkit::perm {

GroupWord inverse(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (Letter& l : out) l = -l;
  return out;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

GroupWord power(const GroupWord& w, long long k) {
  const GroupWord base = k < 0 ? inverse(w) : w;
  const long long n = k < 0 ? -k : k;
  GroupWord out;
  out.reserve(base.size() * static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

void Presentation::validate() const {
  const int n = static_cast<int>(generators.size());
  for (const auto& r : relators)
    for (Letter l : r)
      if (l == 0 || l > n || l < -n) throw std::invalid_argument("relator letter out of range");
}

Presentation Presentation::with_generators(std::size_t count) {
  Presentation p;
  for (std::size_t i = 0; i < count; ++i) p.generators.push_back("g" + std::to_string(i + 1));
  return p;
}

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

  GroupWord parse() {
    GroupWord w = sequence();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  GroupWord sequence() {
    GroupWord out;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ')') return out;
      const GroupWord f = factor();
      out.insert(out.end(), f.begin(), f.end());
    }
  }

  GroupWord factor() {
    GroupWord base;
    if (text_[pos_] == '(') {
      ++pos_;
      base = sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      if (start == pos_) fail("expected a generator name");
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "1") {
        base = {};
      } else {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) fail("unknown generator '" + std::string(name) + "'");
        base = {static_cast<Letter>(it - names_.begin()) + 1};
      }
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      long long k = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), k);
      if (ec != std::errc()) fail("bad exponent");
      pos_ = static_cast<std::size_t>(ptr - text_.data());
      base = power(base, k);
    }
    return base;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("word '" + std::string(text_) + "', offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupWord parse_group_word(std::string_view text, const std::vector<std::string>& names) {
  return WordParser(text, names).parse();
}

std::string format_group_word(const GroupWord& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    const Letter l = w[i];
    s += names.at(static_cast<std::size_t>(l < 0 ? -l : l) - 1);
    if (l < 0) s += "^-1";
  }
  return s;
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty()) continue;
    const std::size_t sp = line.find_first_of(" \t");
    const std::string_view kw = line.substr(0, sp);
    const std::string_view rest = sp == std::string_view::npos ? std::string_view{} : line.substr(sp + 1);
    auto where = [&] { return "presentation line " + std::to_string(line_no) + ": "; };
    if (kw == "gens") {
      if (have_gens) throw std::invalid_argument(where() + "duplicate 'gens'");
      have_gens = true;
      std::size_t i = 0;
      while (i < rest.size()) {
        if (std::isspace(static_cast<unsigned char>(rest[i]))) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < rest.size() && !std::isspace(static_cast<unsigned char>(rest[j]))) ++j;
        const std::string name(rest.substr(i, j - i));
        if (name == "1" || !std::all_of(name.begin(), name.end(), ident_char))
          throw std::invalid_argument(where() + "bad generator name '" + name + "'");
        if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end())
          throw std::invalid_argument(where() + "duplicate generator '" + name + "'");
        p.generators.push_back(name);
        i = j;
      }
    } else if (kw == "rel") {
      if (!have_gens) throw std::invalid_argument(where() + "'rel' before 'gens'");
      try {
        p.relators.push_back(parse_group_word(rest, p.generators));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where() + e.what());
      }
    } else {
      throw std::invalid_argument(where() + "unknown statement '" + std::string(kw) + "'");
    }
  }
  if (!have_gens) throw std::invalid_argument("presentation has no 'gens' line");
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string s = "gens";
  for (const auto& g : p.generators) s += " " + g;
  s += '\n';
  for (const auto& r : p.relators) s += "rel " + format_group_word(r, p.generators) + '\n';
  return s;
}

}  // namespace coxkit::perm
