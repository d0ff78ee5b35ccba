#include "coxcomb/rational.hpp"

#include <utility>

namespace coxcomb {

Rational frac(long n, long d) {
  if (d == 0) throw Error("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {
std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z) + 1);
  const std::size_t n = mpz_size(z);
  for (std::size_t i = 0; i < n; ++i) hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(z, i)));
  return h;
}
}  // namespace

std::size_t hash_value(const Rational& q) {
  std::size_t h = hash_mpz(q.get_num_mpz_t());
  hash_combine(h, hash_mpz(q.get_den_mpz_t()));
  return h;
}

RatVec RatVec::unit(std::size_t dim, std::size_t i) {
  RatVec v(dim);
  v.c_.at(i) = 1;
  return v;
}

RatVec RatVec::from_ints(std::span<const long> v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.c_[i] = v[i];
  return out;
}

bool RatVec::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

Rational RatVec::sum() const {
  Rational s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

RatVec& RatVec::operator+=(const RatVec& o) {
  if (o.dim() != dim()) throw Error("dimension mismatch in vector addition");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RatVec& RatVec::operator-=(const RatVec& o) {
  if (o.dim() != dim()) throw Error("dimension mismatch in vector subtraction");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RatVec& RatVec::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

RatVec operator+(RatVec a, const RatVec& b) { return a += b; }
RatVec operator-(RatVec a, const RatVec& b) { return a -= b; }
RatVec operator-(RatVec a) { return a *= Rational(-1); }
RatVec operator*(const Rational& s, RatVec v) { return v *= s; }
RatVec operator/(RatVec v, const Rational& s) {
  if (sgn(s) == 0) throw Error("division of a vector by zero");
  return v *= Rational(1) / s;
}

Rational inner(const RatVec& u, const RatVec& v) {
  if (u.dim() != v.dim())
    throw Error("dimension mismatch in inner product: " + std::to_string(u.dim()) + " vs " +
                std::to_string(v.dim()));
  Rational s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::size_t RatVecHash::operator()(const RatVec& v) const {
  std::size_t h = v.dim();
  for (const auto& x : v) hash_combine(h, hash_value(x));
  return h;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(std::span<const RatVec> cols) {
  if (cols.empty()) return {};
  RatMatrix m(cols.front().dim(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].dim() != m.rows_) throw Error("ragged columns");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  if (v.dim() != cols_) throw Error("dimension mismatch in matrix-vector product");
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0) s += a * v[c];
    }
    out[r] = s;
  }
  return out;
}

bool RatMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("dimension mismatch in matrix product");
  RatMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

std::size_t RatMatrix::hash() const {
  std::size_t h = rows_ * 31 + cols_;
  for (const auto& x : a_) hash_combine(h, hash_value(x));
  return h;
}

std::vector<Rational> solve(const RatMatrix& a, std::span<const Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw Error("solve: shape mismatch");
  RatMatrix m = a;
  std::vector<Rational> x(b.begin(), b.end());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m(piv, col)) == 0) ++piv;
    if (piv == n) throw Error("solve: singular matrix");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      std::swap(x[piv], x[col]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
      x[r] -= f * x[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) x[i] /= m(i, i);
  return x;
}

RatMatrix inverse(const RatMatrix& a) {
  const std::size_t n = a.rows();
  RatMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Rational> e(n);
    e[c] = 1;
    const auto col = solve(a, e);
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = col[r];
  }
  return inv;
}

}  // namespace coxcomb
