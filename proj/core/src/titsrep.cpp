#include "coxkit/titsrep.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxkit::titsrep {

using exact::ExactMatrix;
using exact::RealCyclotomic;

Word parse_word(std::string_view text, std::size_t generators) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != ',') ++j;
    const std::string_view tok = text.substr(i, j - i);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad generator token '" + std::string(tok) + "'");
    if (value < 1 || value > generators)
      throw std::invalid_argument("generator index " + std::string(tok) + " out of range 1.." + std::to_string(generators));
    w.push_back(value - 1);
    i = j;
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(w[k] + 1);
  }
  return s;
}

Word power(const Word& w, std::size_t count) {
  Word out;
  out.reserve(w.size() * count);
  for (std::size_t k = 0; k < count; ++k) out.insert(out.end(), w.begin(), w.end());
  return out;
}

ReflectionRep ReflectionRep::build(const diagram::CoxeterMatrix& m) {
  ReflectionRep rep;
  rep.m_ = m;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto l = m(i, j);
      if (l != diagram::kInfinity && l > 2) rep.conductor_ = std::lcm(rep.conductor_, static_cast<unsigned>(l));
    }
  const unsigned L = rep.conductor_;
  const RealCyclotomic zero(L, 0), one(L, 1);
  for (std::size_t s = 0; s < n; ++s) {
    ExactMatrix sigma = ExactMatrix::identity(n, one, zero);
    for (std::size_t t = 0; t < n; ++t) {
      if (t == s) {
        sigma(s, s) = RealCyclotomic(L, -1);
        continue;
      }
      const auto l = m(s, t);
      sigma(s, t) = RealCyclotomic::two_cos_pi_over(l == diagram::kInfinity ? 0 : static_cast<unsigned>(l), L);
    }
    rep.sigma_.push_back(std::move(sigma));
  }

  const ExactMatrix id = rep.identity();
  for (std::size_t s = 0; s < n; ++s)
    if (!(rep.sigma_[s] * rep.sigma_[s] == id))
      throw std::logic_error("reflection " + std::to_string(s + 1) + " does not square to the identity");
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      const auto l = m(s, t);
      if (l == diagram::kInfinity) continue;
      const ExactMatrix st = rep.sigma_[s] * rep.sigma_[t];
      ExactMatrix acc = st;
      for (std::size_t k = 1; k < l; ++k) {
        if (acc == id)
          throw std::logic_error("sigma_" + std::to_string(s + 1) + " sigma_" + std::to_string(t + 1) + " has order " +
                                 std::to_string(k) + ", expected " + std::to_string(l));
        acc = acc * st;
      }
      if (!(acc == id))
        throw std::logic_error("sigma_" + std::to_string(s + 1) + " sigma_" + std::to_string(t + 1) + " does not have order " +
                               std::to_string(l));
    }
  return rep;
}

ExactMatrix ReflectionRep::identity() const {
  return ExactMatrix::identity(rank(), RealCyclotomic(conductor_, 1), RealCyclotomic(conductor_, 0));
}

// sigma_s differs from the identity only in row s, so acc * sigma_s touches
// every row but only through column s.
void ReflectionRep::right_multiply(ExactMatrix& acc, std::size_t s) const {
  const ExactMatrix& sigma = sigma_[s];
  const std::size_t n = rank();
  for (std::size_t i = 0; i < n; ++i) {
    const RealCyclotomic a = acc(i, s);
    if (a.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == s) continue;
      const RealCyclotomic& c = sigma(s, j);
      if (!c.is_zero()) acc(i, j) += a * c;
    }
    acc(i, s) = -a;
  }
}

ExactMatrix ReflectionRep::evaluate(const Word& w) const {
  ExactMatrix acc = identity();
  for (std::size_t s : w) {
    if (s >= rank()) throw std::out_of_range("generator index out of range");
    right_multiply(acc, s);
  }
  return acc;
}

bool words_equal(const ReflectionRep& rep, const Word& w1, const Word& w2) {
  return rep.evaluate(w1) == rep.evaluate(w2);
}

std::optional<std::size_t> element_order(const ReflectionRep& rep, const Word& w, std::size_t bound) {
  const ExactMatrix p = rep.evaluate(w);
  const ExactMatrix id = rep.identity();
  ExactMatrix acc = p;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (acc == id) return k;
    if (k < bound) acc = acc * p;
  }
  return std::nullopt;
}

}  // namespace coxkit::titsrep
