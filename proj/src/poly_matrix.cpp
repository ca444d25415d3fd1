#include "dgreen/poly_matrix.hpp"

#include "dgreen/errors.hpp"

#include <utility>

namespace dgreen {

namespace {

IntPoly lcm(const IntPoly& a, const IntPoly& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return div_exact(a, gcd(a, b)) * b;
}

IntPoly exact(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!try_div_exact(a, b, q))
    throw std::logic_error("Bareiss elimination: inexact division of (" + a.to_string() + ") by (" + b.to_string() + ")");
  return q;
}

}  // namespace

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc(1);
  return m;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

PolyMatrix PolyMatrix::times_q_power(int k) const {
  PolyMatrix s = *this;
  for (auto& e : s.data_) e = e.times_q_power(k);
  return s;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch in product");
  PolyMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RatFunc& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("PolyMatrix: shape mismatch in sum");
  PolyMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("PolyMatrix: shape mismatch in difference");
  PolyMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool PolyMatrix::all_polynomial() const {
  for (const auto& e : data_)
    if (!e.is_polynomial()) return false;
  return true;
}

std::string PolyMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

PolyMatrix matrix_solve(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("matrix_solve: A must be square");
  if (b.cols() != n) throw std::invalid_argument("matrix_solve: B must have as many columns as A");
  const std::size_t k = b.rows();
  if (n == 0) return PolyMatrix(k, 0);

  // X A = B  <=>  A^t X^t = B^t. Row i of the augmented system is
  // (A^t)_i | (B^t)_i, i.e. column i of A followed by column i of B.
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n + k));
  for (std::size_t i = 0; i < n; ++i) {
    IntPoly den(1);
    for (std::size_t j = 0; j < n; ++j) den = lcm(den, a(j, i).den());
    for (std::size_t j = 0; j < k; ++j) den = lcm(den, b(j, i).den());
    auto clear = [&](const RatFunc& f) { return f.is_zero() ? IntPoly() : f.num() * exact(den, f.den()); };
    for (std::size_t j = 0; j < n; ++j) m[i][j] = clear(a(j, i));
    for (std::size_t j = 0; j < k; ++j) m[i][n + j] = clear(b(j, i));
  }

  IntPoly prev(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) throw SingularBlock("matrix_solve: singular " + std::to_string(n) + "x" + std::to_string(n) + " system");
    if (p != c) std::swap(m[p], m[c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n + k; ++j) {
        IntPoly v = m[c][c] * m[i][j] - m[i][c] * m[c][j];
        m[i][j] = prev.is_one() ? std::move(v) : exact(v, prev);
      }
      m[i][c] = IntPoly();
    }
    prev = m[c][c];
  }

  // Fraction-free back substitution: xs[i] = det * x_i is integral.
  const IntPoly& det = m[n - 1][n - 1];
  PolyMatrix x(k, n);
  for (std::size_t col = 0; col < k; ++col) {
    std::vector<IntPoly> xs(n);
    for (std::size_t i = n; i-- > 0;) {
      IntPoly acc = det * m[i][n + col];
      for (std::size_t j = i + 1; j < n; ++j)
        if (!m[i][j].is_zero()) acc -= m[i][j] * xs[j];
      xs[i] = exact(acc, m[i][i]);
    }
    for (std::size_t i = 0; i < n; ++i) x(col, i) = RatFunc::make(xs[i], det);
  }

#ifndef NDEBUG
  if (x * a != b) throw std::logic_error("matrix_solve: X*A != B after elimination");
#endif
  return x;
}

PolyMatrix matrix_inverse(const PolyMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("matrix_inverse: A must be square");
  PolyMatrix m = a;
  PolyMatrix inv = PolyMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) throw SingularBlock("matrix_inverse: singular " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const RatFunc pivot_inv = m(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) *= pivot_inv;
      inv(c, j) *= pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      const RatFunc f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
        if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace dgreen
