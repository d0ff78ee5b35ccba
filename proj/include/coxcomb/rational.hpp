#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcomb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration or search would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

using Rational = mpq_class;

/// n/d in lowest terms.
Rational frac(long n, long d = 1);

bool is_integer(const Rational& q);

/// "3", "-1/4"
std::string to_string(const Rational& q);

std::size_t hash_value(const Rational& q);

/// Exact rational coordinate vector.
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::size_t dim) : c_(dim) {}
  RatVec(std::initializer_list<Rational> init) : c_(init) {}
  explicit RatVec(std::vector<Rational> coords) : c_(std::move(coords)) {}

  static RatVec unit(std::size_t dim, std::size_t i);
  static RatVec from_ints(std::span<const long> v);

  std::size_t dim() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  Rational sum() const;

  RatVec& operator+=(const RatVec& o);
  RatVec& operator-=(const RatVec& o);
  RatVec& operator*=(const Rational& s);

  friend bool operator==(const RatVec& a, const RatVec& b) { return a.c_ == b.c_; }
  /// Lexicographic; only used to get deterministic orders.
  friend bool operator<(const RatVec& a, const RatVec& b) { return a.c_ < b.c_; }

 private:
  std::vector<Rational> c_;
};

RatVec operator+(RatVec a, const RatVec& b);
RatVec operator-(RatVec a, const RatVec& b);
RatVec operator-(RatVec a);
RatVec operator*(const Rational& s, RatVec v);
RatVec operator/(RatVec v, const Rational& s);

/// Exact Euclidean scalar product. Throws Error on dimension mismatch.
Rational inner(const RatVec& u, const RatVec& v);

inline Rational norm2(const RatVec& v) { return inner(v, v); }

/// "(1, -1/2, 0)"
std::string to_string(const RatVec& v);

struct RatVecHash {
  std::size_t operator()(const RatVec& v) const;
};

/// Dense exact matrix, row major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors.
  static RatMatrix from_columns(std::span<const RatVec> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  RatMatrix transpose() const;
  RatVec apply(const RatVec& v) const;
  bool is_identity() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::size_t hash() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// Solves A x = b for square nonsingular A by Gaussian elimination.
/// Throws Error if A is singular.
std::vector<Rational> solve(const RatMatrix& a, std::span<const Rational> b);

RatMatrix inverse(const RatMatrix& a);

inline void hash_combine(std::size_t& seed, std::size_t h) {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace coxcomb
