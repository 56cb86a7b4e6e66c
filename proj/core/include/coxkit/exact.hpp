#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace coxkit::exact {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n, const T& one = T(1), const T& zero = T(0)) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix out(a.rows_, b.cols_, a.zero_like());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in difference");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows_; ++r) {
      for (std::size_t c = 0; c < m.cols_; ++c) {
        if (c) os << ' ';
        os << m(r, c);
      }
      os << '\n';
    }
    return os;
  }

 private:
  // Keeps the ring context (e.g. conductor) of non-scalar entry types.
  T zero_like() const {
    if (data_.empty()) return T(0);
    return data_.front() - data_.front();
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Element of Z[2cos(pi/L)], stored as a polynomial in alpha = 2cos(pi/L)
/// reduced modulo the minimal polynomial of alpha. L is the conductor.
class RealCyclotomic {
 public:
  RealCyclotomic() : RealCyclotomic(1, Integer(0)) {}
  // Implicit so that generic matrix code can write T(0) and compare with 0.
  RealCyclotomic(int value) : RealCyclotomic(1, Integer(value)) {}  // NOLINT
  RealCyclotomic(unsigned conductor, Integer value);

  /// alpha = 2cos(pi/L) itself.
  static RealCyclotomic alpha(unsigned conductor);
  /// 2cos(pi/m) inside Z[2cos(pi/L)]; requires m | L unless m <= 2. m == 0 encodes the
  /// label infinity, whose value is taken to be 2.
  static RealCyclotomic two_cos_pi_over(unsigned m, unsigned conductor);
  static RealCyclotomic from_coefficients(unsigned conductor, std::vector<Integer> coeffs);

  unsigned conductor() const { return conductor_; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Same value viewed in Z[2cos(pi/L')] for a multiple L' of the conductor.
  RealCyclotomic lifted_to(unsigned conductor) const;

  RealCyclotomic operator-() const;
  RealCyclotomic& operator+=(const RealCyclotomic& other);
  RealCyclotomic& operator-=(const RealCyclotomic& other);
  RealCyclotomic& operator*=(const RealCyclotomic& other);
  friend RealCyclotomic operator+(RealCyclotomic a, const RealCyclotomic& b) { return a += b; }
  friend RealCyclotomic operator-(RealCyclotomic a, const RealCyclotomic& b) { return a -= b; }
  friend RealCyclotomic operator*(RealCyclotomic a, const RealCyclotomic& b) { return a *= b; }

  /// Values are compared, not representations: 1 in L=3 equals 1 in L=4.
  friend bool operator==(const RealCyclotomic& a, const RealCyclotomic& b);

  int sign() const;
  /// Rational enclosure [lo, hi] of the value, at least as tight as `width`.
  std::pair<Rational, Rational> enclosure(const Rational& width) const;
  double approx() const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RealCyclotomic& x) { return os << x.to_string(); }

 private:
  void reduce();

  unsigned conductor_ = 1;
  std::vector<Integer> coeffs_;  // low degree first, no trailing zeros
};

enum class RingOp { Add, Mul, Neg };

/// add/mul act on both operands (coerced to the lcm conductor); neg ignores b.
RealCyclotomic ring_arith(const RealCyclotomic& a, const RealCyclotomic& b, RingOp op);
int sign_of(const RealCyclotomic& a);

/// Monic integer minimal polynomial of 2cos(pi/L), lowest coefficient first.
/// Cached per conductor; safe to call concurrently.
const std::vector<Integer>& minimal_polynomial(unsigned conductor);

/// Cyclotomic polynomial Phi_n, lowest coefficient first.
std::vector<Integer> cyclotomic_polynomial(unsigned n);

using ExactMatrix = Matrix<RealCyclotomic>;

struct SNFResult {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
};

/// U * A * V = S with S in Smith normal form (non-negative, d1 | d2 | ...).
/// Pivot: smallest nonzero absolute value, ties broken row-major.
SNFResult smith_normal_form(const IntMatrix& a);

struct Adjugate {
  IntMatrix B;
  Integer d;
};

/// B = adj(A), d = det(A), so A * B = d * I, singular A included.
/// (B is the adjugate; the transpose of A does not have this property.)
Adjugate adjugate(const IntMatrix& a);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& a);

std::size_t rank(RatMatrix m);
/// Dimension over Q of {X : XM = MX for every M in gens}.
std::size_t commutant_dimension(std::span<const RatMatrix> gens, std::size_t n);
std::size_t commutant_dimension(std::span<const RatMatrix> gens);

/// Basis of the null space of m (column vectors, as rows of the result).
std::vector<std::vector<Rational>> null_space(RatMatrix m);

IntMatrix to_int_matrix(const Matrix<long long>& m);
RatMatrix to_rat_matrix(const IntMatrix& m);

}  // namespace coxkit::exact
