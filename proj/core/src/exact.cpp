#include "coxkit/exact.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace coxkit::exact {

namespace {

using Poly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// Exact division of integer polynomials by a monic divisor.
Poly poly_div_exact(Poly num, const Poly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {};
  Poly q(num.size() - dd, Integer(0));
  for (std::size_t i = num.size(); i-- > dd;) {
    const Integer c = num[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("inexact polynomial division");
  trim(q);
  return q;
}

int moebius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// Reduce p modulo the monic polynomial m, in place.
void reduce_mod(Poly& p, const Poly& m) {
  const std::size_t d = m.size() - 1;
  trim(p);
  for (std::size_t i = p.size(); i-- > d;) {
    const Integer c = p[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= d; ++k) p[i - d + k] -= c * m[k];
  }
  trim(p);
}

RatPoly to_rat(const Poly& p) {
  RatPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

template <typename P>
Rational eval_at(const P& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Rational(p[i]);
  return acc;
}

int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }
int sgn_int(const Integer& z) { return z > 0 ? 1 : (z < 0 ? -1 : 0); }

struct Interval {
  Rational lo;
  Rational hi;
};

Interval imul(const Interval& a, const Interval& b) {
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

// Per-conductor data: minimal polynomial, Sturm chain and an isolating
// interval (lo, hi] for alpha = 2cos(pi/L), the largest root.
struct ConductorData {
  Poly minpoly;
  std::vector<RatPoly> sturm;
  Interval alpha;  // guarded by the table mutex
};

std::size_t sign_changes(const std::vector<RatPoly>& chain, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(eval_at(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t roots_in(const std::vector<RatPoly>& chain, const Rational& lo, const Rational& hi) {
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

Poly fold_minimal_polynomial(unsigned conductor) {
  if (conductor == 1) return {Integer(2), Integer(1)};  // alpha = -2
  const Poly phi = cyclotomic_polynomial(2 * conductor);
  const std::size_t d = (phi.size() - 1) / 2;
  // x^-d * Phi(x) written in y = x + 1/x via x^k + x^-k = P_k(y).
  std::vector<Poly> chebyshev{{Integer(2)}, {Integer(0), Integer(1)}};
  for (std::size_t k = 2; k <= d; ++k) {
    Poly next = poly_mul({Integer(0), Integer(1)}, chebyshev[k - 1]);
    const Poly& prev = chebyshev[k - 2];
    next.resize(std::max(next.size(), prev.size()), Integer(0));
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    trim(next);
    chebyshev.push_back(std::move(next));
  }
  Poly out{phi[d]};
  for (std::size_t k = 1; k <= d; ++k) {
    const Integer& c = phi[d + k];
    const Poly& pk = chebyshev[k];
    out.resize(std::max(out.size(), pk.size()), Integer(0));
    for (std::size_t i = 0; i < pk.size(); ++i) out[i] += c * pk[i];
  }
  trim(out);
  return out;
}

class ConductorTable {
 public:
  const ConductorData& get(unsigned conductor) {
    std::lock_guard lock(mutex_);
    auto it = table_.find(conductor);
    if (it == table_.end()) it = table_.emplace(conductor, build(conductor)).first;
    return *it->second;
  }

  Interval alpha_interval(unsigned conductor) {
    const ConductorData& data = get(conductor);
    std::lock_guard lock(mutex_);
    return data.alpha;
  }

  void offer_interval(unsigned conductor, const Interval& tighter) {
    std::lock_guard lock(mutex_);
    auto& data = *table_.at(conductor);
    if (tighter.hi - tighter.lo < data.alpha.hi - data.alpha.lo) data.alpha = tighter;
  }

 private:
  static std::unique_ptr<ConductorData> build(unsigned conductor) {
    auto data = std::make_unique<ConductorData>();
    data->minpoly = fold_minimal_polynomial(conductor);
    if (data->minpoly.size() == 2) {
      const Rational root = -Rational(data->minpoly[0]);
      data->alpha = {root, root};
      return data;
    }
    RatPoly p0 = to_rat(data->minpoly);
    RatPoly p1 = derivative(p0);
    data->sturm = {p0, p1};
    while (data->sturm.back().size() > 1) {
      RatPoly r = rat_rem(data->sturm[data->sturm.size() - 2], data->sturm.back());
      for (auto& c : r) c = -c;
      if (r.empty()) break;
      data->sturm.push_back(std::move(r));
    }
    Rational lo = -2, hi = 2;
    while (roots_in(data->sturm, lo, hi) > 1) {
      Rational mid = (lo + hi) / 2;
      if (roots_in(data->sturm, mid, hi) >= 1)
        lo = mid;
      else
        hi = mid;
    }
    data->alpha = {lo, hi};
    return data;
  }

  std::mutex mutex_;
  std::map<unsigned, std::unique_ptr<ConductorData>> table_;
};

ConductorTable& conductor_table() {
  static ConductorTable table;
  return table;
}

Interval refine(const ConductorData& data, Interval iv) {
  const Rational mid = (iv.lo + iv.hi) / 2;
  const int s_mid = sgn(eval_at(data.minpoly, mid));
  const int s_hi = sgn(eval_at(data.minpoly, iv.hi));
  if (s_mid == 0) return {mid, mid};
  if (s_mid == s_hi)
    iv.hi = mid;
  else
    iv.lo = mid;
  return iv;
}

Interval evaluate_on(const Poly& q, const Interval& x) {
  Interval acc{Rational(0), Rational(0)};
  for (std::size_t i = q.size(); i-- > 0;) {
    acc = imul(acc, x);
    acc.lo += Rational(q[i]);
    acc.hi += Rational(q[i]);
  }
  return acc;
}

unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }

// x^k + x^-k = P_k(x + 1/x) evaluated at alpha, reduced.
Poly chebyshev_at_alpha(unsigned k, const Poly& minpoly) {
  Poly prev{Integer(2)};
  Poly cur{Integer(0), Integer(1)};
  if (k == 0) return prev;
  for (unsigned j = 1; j < k; ++j) {
    Poly next = poly_mul({Integer(0), Integer(1)}, cur);
    next.resize(std::max(next.size(), prev.size()), Integer(0));
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    reduce_mod(next, minpoly);
    prev = std::move(cur);
    cur = std::move(next);
  }
  reduce_mod(cur, minpoly);
  return cur;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  Poly num{Integer(1)};
  Poly den{Integer(1)};
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = moebius(n / d);
    if (mu == 0) continue;
    Poly factor(d + 1, Integer(0));
    factor[0] = -1;
    factor[d] = 1;
    if (mu > 0)
      num = poly_mul(num, factor);
    else
      den = poly_mul(den, factor);
  }
  // den is a product of monic factors up to sign of constant terms; make it monic.
  return poly_div_exact(num, den);
}

const std::vector<Integer>& minimal_polynomial(unsigned conductor) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
  return conductor_table().get(conductor).minpoly;
}

RealCyclotomic::RealCyclotomic(unsigned conductor, Integer value) : conductor_(conductor) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
  if (value != 0) coeffs_.push_back(std::move(value));
}

RealCyclotomic RealCyclotomic::alpha(unsigned conductor) {
  return from_coefficients(conductor, {Integer(0), Integer(1)});
}

RealCyclotomic RealCyclotomic::from_coefficients(unsigned conductor, std::vector<Integer> coeffs) {
  RealCyclotomic x(conductor, Integer(0));
  x.coeffs_ = std::move(coeffs);
  x.reduce();
  return x;
}

RealCyclotomic RealCyclotomic::two_cos_pi_over(unsigned m, unsigned conductor) {
  if (m == 0) return RealCyclotomic(conductor, Integer(2));
  if (m == 1) return RealCyclotomic(conductor, Integer(-2));
  if (m == 2) return RealCyclotomic(conductor, Integer(0));
  if (conductor % m) throw std::invalid_argument("label does not divide the conductor");
  RealCyclotomic x(conductor, Integer(0));
  x.coeffs_ = chebyshev_at_alpha(conductor / m, minimal_polynomial(conductor));
  return x;
}

void RealCyclotomic::reduce() { reduce_mod(coeffs_, minimal_polynomial(conductor_)); }

RealCyclotomic RealCyclotomic::lifted_to(unsigned conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor % conductor_) throw std::invalid_argument("cannot lift to a non-multiple conductor");
  RealCyclotomic out(conductor, Integer(0));
  if (coeffs_.size() <= 1) {
    out.coeffs_ = coeffs_;
    return out;
  }
  const Poly& m = minimal_polynomial(conductor);
  const Poly old_alpha = chebyshev_at_alpha(conductor / conductor_, m);
  Poly acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = poly_mul(acc, old_alpha);
    if (acc.empty()) acc.push_back(Integer(0));
    acc[0] += coeffs_[i];
    reduce_mod(acc, m);
  }
  out.coeffs_ = std::move(acc);
  return out;
}

RealCyclotomic RealCyclotomic::operator-() const {
  RealCyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RealCyclotomic& RealCyclotomic::operator+=(const RealCyclotomic& other) {
  const unsigned l = lcm_u(conductor_, other.conductor_);
  if (l != conductor_) *this = lifted_to(l);
  const RealCyclotomic rhs = other.lifted_to(l);
  coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim(coeffs_);
  return *this;
}

RealCyclotomic& RealCyclotomic::operator-=(const RealCyclotomic& other) { return *this += -other; }

RealCyclotomic& RealCyclotomic::operator*=(const RealCyclotomic& other) {
  const unsigned l = lcm_u(conductor_, other.conductor_);
  if (l != conductor_) *this = lifted_to(l);
  const RealCyclotomic rhs = other.lifted_to(l);
  coeffs_ = poly_mul(coeffs_, rhs.coeffs_);
  reduce();
  return *this;
}

bool operator==(const RealCyclotomic& a, const RealCyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.coeffs_.size() <= 1 && b.coeffs_.size() <= 1) return a.coeffs_ == b.coeffs_;
  const unsigned l = lcm_u(a.conductor_, b.conductor_);
  return a.lifted_to(l).coeffs_ == b.lifted_to(l).coeffs_;
}

int RealCyclotomic::sign() const {
  if (coeffs_.empty()) return 0;
  if (coeffs_.size() == 1) return sgn_int(coeffs_[0]);
  ConductorTable& table = conductor_table();
  const ConductorData& data = table.get(conductor_);
  Interval x = table.alpha_interval(conductor_);
  bool refined = false;
  for (;;) {
    const Interval v = evaluate_on(coeffs_, x);
    if (v.lo > 0 || v.hi < 0) {
      if (refined) table.offer_interval(conductor_, x);
      return v.lo > 0 ? 1 : -1;
    }
    x = refine(data, x);
    refined = true;
  }
}

std::pair<Rational, Rational> RealCyclotomic::enclosure(const Rational& width) const {
  if (coeffs_.size() <= 1) {
    const Rational v = coeffs_.empty() ? Rational(0) : Rational(coeffs_[0]);
    return {v, v};
  }
  ConductorTable& table = conductor_table();
  const ConductorData& data = table.get(conductor_);
  Interval x = table.alpha_interval(conductor_);
  for (;;) {
    const Interval v = evaluate_on(coeffs_, x);
    if (v.hi - v.lo <= width) {
      table.offer_interval(conductor_, x);
      return {v.lo, v.hi};
    }
    x = refine(data, x);
  }
}

double RealCyclotomic::approx() const {
  const auto [lo, hi] = enclosure(Rational(1, 1000000000) / 1000);
  return Rational((lo + hi) / 2).get_d();
}

std::string RealCyclotomic::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << 'a';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

RealCyclotomic ring_arith(const RealCyclotomic& a, const RealCyclotomic& b, RingOp op) {
  switch (op) {
    case RingOp::Add:
      return a + b;
    case RingOp::Mul:
      return a * b;
    case RingOp::Neg:
      return -a;
  }
  throw std::invalid_argument("unknown ring operation");
}

int sign_of(const RealCyclotomic& a) { return a.sign(); }

// ---------------------------------------------------------------------------
// Integer matrices

Integer determinant(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Adjugate adjugate(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("adjugate of a non-square matrix");
  const std::size_t n = a.rows();
  Adjugate out{IntMatrix(n, n), determinant(a)};
  if (n == 1) {
    out.B(0, 0) = 1;
    return out;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      Integer cof = determinant(minor);
      if ((i + j) % 2) cof = -cof;
      out.B(j, i) = std::move(cof);
    }
  return out;
}

SNFResult smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  SNFResult r{a, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& s = r.S;

  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < cols; ++c) s(dst, c) += k * s(src, c);
    for (std::size_t c = 0; c < rows; ++c) r.U(dst, c) += k * r.U(src, c);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t rr = 0; rr < rows; ++rr) s(rr, dst) += k * s(rr, src);
    for (std::size_t rr = 0; rr < cols; ++rr) r.V(rr, dst) += k * r.V(rr, src);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block, row-major tie-break.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          if (pr == rows || abs(s(i, j)) < abs(s(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      if (pr == rows) return r;
      s.swap_rows(t, pr);
      r.U.swap_rows(t, pr);
      s.swap_cols(t, pc);
      r.V.swap_cols(t, pc);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (s(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (s(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            add_row(t, i, Integer(1));
            divides = false;
            break;
          }
        }
      if (!divides) continue;

      if (s(t, t) < 0) {
        for (std::size_t c = 0; c < cols; ++c) s(t, c) = -s(t, c);
        for (std::size_t c = 0; c < rows; ++c) r.U(t, c) = -r.U(t, c);
      }
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Rational linear algebra

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(i, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> null_space(RatMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t commutant_dimension(std::span<const RatMatrix> gens, std::size_t n) {
  const std::size_t unknowns = n * n;
  if (gens.empty()) return unknowns;
  RatMatrix system(gens.size() * unknowns, unknowns, Rational(0));
  std::size_t eq = 0;
  for (const auto& m : gens) {
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("commutant generators must be n x n");
    // (XM - MX)_{ij} = sum_k X_ik M_kj - sum_k M_ik X_kj
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++eq)
        for (std::size_t k = 0; k < n; ++k) {
          system(eq, i * n + k) += m(k, j);
          system(eq, k * n + j) -= m(i, k);
        }
  }
  return unknowns - rank(std::move(system));
}

std::size_t commutant_dimension(std::span<const RatMatrix> gens) {
  if (gens.empty()) throw std::invalid_argument("dimension is ambiguous without generators");
  return commutant_dimension(gens, gens.front().rows());
}

IntMatrix to_int_matrix(const Matrix<long long>& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Integer(static_cast<long>(m(r, c)));
  return out;
}

RatMatrix to_rat_matrix(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

}  // namespace coxkit::exact
