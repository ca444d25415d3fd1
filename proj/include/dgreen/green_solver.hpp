#pragma once

#include "dgreen/fake_degree.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace dgreen {

/// A Lusztig-Shoji datum for I2(m): ordered classes (list position is the
/// total order, smallest first) with an order-reversing a-function.
struct LSDatum {
  int m = 0;
  std::vector<std::vector<CharLabel>> classes;
  std::vector<int> a;

  /// Throws InvalidDatum unless the classes partition Irr(I2(m)) and a is
  /// order-reversing and nonnegative.
  void validate() const;
  /// Copy with every class sorted canonically.
  LSDatum canonical() const;
  std::size_t class_of(CharLabel label) const;
  std::string to_string() const;

  friend bool operator==(const LSDatum&, const LSDatum&) = default;
};

/// Solution (P, Lambda) of P Lambda P^t = Omega. Matrices are indexed by
/// `labels` (canonical order) in both rows and columns.
struct GreenSystem {
  LSDatum datum;
  std::vector<CharLabel> labels;
  PolyMatrix P;
  PolyMatrix Lambda;
  std::vector<PolyMatrix> Y;  // Y^C on C x C, per class
  std::vector<bool> y_polynomial;

  std::size_t index_of(CharLabel label) const;
  const RatFunc& p(CharLabel row, CharLabel col) const { return P(index_of(row), index_of(col)); }
  const RatFunc& lambda(CharLabel row, CharLabel col) const { return Lambda(index_of(row), index_of(col)); }
  /// Lambda_C as a block in the class's own (canonical) row order.
  PolyMatrix lambda_block(std::size_t class_index) const;
};

struct SolveOptions {
  /// Recompute every P block through Lambda_C^-1 (Gauss-Jordan) as well and
  /// compare with the Y-block solve.
  bool cross_check = false;
};

/// The unique system of Green functions for `datum`. Verifies
/// P Lambda P^t = Omega before returning. Throws SingularBlock naming the
/// class when a Lambda block is not invertible.
GreenSystem solve(const OmegaMatrix& omega, const LSDatum& datum, const SolveOptions& options = {});

/// gamma = q^m - 1.
IntPoly gamma_poly(int m);

/// Y^C_{chi,chi'} for chi, chi' in `rows`, straight from its definition
/// gamma^-1 (omega - sum over C' < C of P_{chi,C'} Lambda_C' P_{chi',C'}^t),
/// using only the blocks of `sys` below class C. With require_polynomial,
/// throws NotPolynomial naming (chi, chi', C) for a non-polynomial entry.
PolyMatrix y_block(const OmegaMatrix& omega, const GreenSystem& sys, std::size_t class_index,
                   const std::vector<CharLabel>& rows, bool require_polynomial = false);

/// Reflexive-transitive closure of "C' below C when P_{chi,chi'} != 0 for
/// some chi in C, chi' in C'". below[i][j] means class i lies in the
/// closure of class j.
struct ClosureOrder {
  std::vector<std::vector<bool>> below;

  std::size_t size() const { return below.size(); }
  bool leq(std::size_t i, std::size_t j) const { return below[i][j]; }
  /// Covering pairs (lower, upper).
  std::vector<std::pair<std::size_t, std::size_t>> hasse() const;
  /// Every relation is compatible with the list order (i below j => i <= j).
  bool compatible_with_list_order() const;
};

ClosureOrder closure_order(const GreenSystem& sys);

}  // namespace dgreen
