#pragma once

#include "dgreen/int_poly.hpp"

#include <string>

namespace dgreen {

/// Element of Q(q) kept as a reduced quotient num/den of integer
/// polynomials. The denominator is nonzero with positive leading
/// coefficient and gcd(num, den) is 1, so equal values compare equal.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(IntPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long long c) : num_(c), den_(1) {}           // NOLINT(google-explicit-constructor)

  /// Reduces num/den; throws ZeroDenominator when den is zero.
  static RatFunc make(IntPoly num, IntPoly den);
  /// q^k for any integer k.
  static RatFunc q_power(int k);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Returns the numerator; throws NotPolynomial unless den = 1.
  const IntPoly& as_poly() const;

  /// Multiplies by q^k (k of either sign).
  RatFunc times_q_power(int k) const;
  RatFunc inverse() const;
  /// q^shift * f(1/q).
  RatFunc substitute_inverse(int shift) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const;
  /// A polynomial, or "(num)/(den)" as printed by to_string.
  static RatFunc parse(const std::string& text);

 private:
  RatFunc(IntPoly num, IntPoly den, bool /*reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  IntPoly num_;
  IntPoly den_;
};

/// The reduced representative of num/den.
RatFunc ratfunc_normalize(IntPoly num, IntPoly den);

}  // namespace dgreen
