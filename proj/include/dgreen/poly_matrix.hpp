#pragma once

#include "dgreen/rat_func.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dgreen {

/// Dense rectangular matrix over Q(q). Row and column meaning (which
/// characters index them) is carried by the owner.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  RatFunc& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PolyMatrix transposed() const;
  /// Submatrix on the given row and column positions.
  PolyMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  PolyMatrix times_q_power(int k) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  bool all_polynomial() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFunc> data_;
};

/// Solves X * A = B for X over Q(q) by fraction-free (Bareiss) elimination.
/// A must be square with A.cols() == B.cols(). Throws SingularBlock when A
/// is not invertible.
PolyMatrix matrix_solve(const PolyMatrix& a, const PolyMatrix& b);

/// A^-1 by Gauss-Jordan elimination directly over Q(q); an independent path
/// used to cross-check matrix_solve. Throws SingularBlock.
PolyMatrix matrix_inverse(const PolyMatrix& a);

}  // namespace dgreen
