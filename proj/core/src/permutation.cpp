#include "coxkit/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace coxkit::perm {

Permutation::Permutation(std::size_t degree) : img_(degree) {
  if (degree > std::numeric_limits<Point>::max()) throw std::invalid_argument("permutation degree too large");
  std::iota(img_.begin(), img_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> hit(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || hit[p]) throw std::invalid_argument("image array is not a bijection");
    hit[p] = true;
  }
  Permutation out;
  out.img_ = std::move(images);
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> parse_cycles(std::string_view text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation at offset " + std::to_string(i));
    ++i;
    std::vector<std::size_t> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc() || value == 0) throw std::invalid_argument("bad point in cycle notation at offset " + std::to_string(i));
      i = static_cast<std::size_t>(ptr - text.data());
      cyc.push_back(value - 1);
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  const auto cycles = parse_cycles(text);
  Permutation out(degree);
  // Cycles are applied as a product, so "(1 2)(1 3)" is accepted too.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cyc = *it;
    std::vector<Point> c(degree);
    std::iota(c.begin(), c.end(), Point{0});
    std::vector<bool> seen(degree, false);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (cyc[k] >= degree) throw std::invalid_argument("point " + std::to_string(cyc[k] + 1) + " exceeds degree " + std::to_string(degree));
      if (seen[cyc[k]]) throw std::invalid_argument("repeated point in a cycle");
      seen[cyc[k]] = true;
      c[cyc[k]] = static_cast<Point>(cyc[(k + 1) % cyc.size()]);
    }
    out = Permutation::from_images(std::move(c)) * out;
  }
  return out;
}

Permutation Permutation::parse(std::string_view text) {
  std::size_t degree = 0;
  for (const auto& cyc : parse_cycles(text))
    for (std::size_t p : cyc) degree = std::max(degree, p + 1);
  return parse(text, degree);
}

Permutation Permutation::cycle(std::size_t degree, std::initializer_list<std::size_t> points_1based) {
  std::string text = "(";
  for (std::size_t p : points_1based) text += std::to_string(p) + " ";
  text += ")";
  return parse(text, degree);
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in permutation product");
  Permutation out;
  out.img_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) out.img_[i] = p.img_[q.img_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.img_[img_[i]] = static_cast<Point>(i);
  return out;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  Permutation acc(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t ord = 1;
  for (std::size_t len : cycle_type()) ord = std::lcm(ord, len);
  return ord;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Permutation Permutation::shifted(std::size_t offset, std::size_t degree) const {
  if (offset + this->degree() > degree) throw std::invalid_argument("shifted permutation does not fit");
  Permutation out(degree);
  for (std::size_t i = 0; i < this->degree(); ++i) out.img_[offset + i] = static_cast<Point>(offset + img_[i]);
  return out;
}

Permutation Permutation::restricted(std::span<const std::size_t> points) const {
  std::vector<long> position(degree(), -1);
  for (std::size_t k = 0; k < points.size(); ++k) position.at(points[k]) = static_cast<long>(k);
  std::vector<Point> img(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    const long to = position[img_[points[k]]];
    if (to < 0) throw std::invalid_argument("point set is not invariant under the permutation");
    img[k] = static_cast<Point>(to);
  }
  return from_images(std::move(img));
}

std::string Permutation::to_string() const {
  std::string s;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += '(';
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (j != i) s += ' ';
      s += std::to_string(j + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

std::size_t hash_points(std::span<const Point> pts) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point p : pts) {
    h ^= p;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::vector<std::size_t> cycle_type(const Permutation& g) { return g.cycle_type(); }

}  // namespace coxkit::perm
