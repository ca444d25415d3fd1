#pragma once

#include "dgreen/int_poly.hpp"

#include <string>
#include <vector>

namespace dgreen {

/// The m-th cyclotomic polynomial, obtained by dividing q^m - 1 by the
/// cyclotomic polynomials of the proper divisors of m.
const IntPoly& cyclotomic_polynomial(int m);
int euler_phi(int m);

/// Element of Q(zeta_m) written in the power basis 1, x, ..., x^(phi(m)-1)
/// of Q[x]/Phi_m(x), with x standing for a primitive m-th root of unity.
class CycloNum {
 public:
  CycloNum() = default;  // an unusable placeholder until assigned
  CycloNum(int m, Rational value);

  static CycloNum zero(int m) { return CycloNum(m, 0); }
  static CycloNum one(int m) { return CycloNum(m, 1); }
  /// zeta^k for any integer k.
  static CycloNum zeta_power(int m, long long k);

  int order() const { return m_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; throws NotRational if a nonconstant coordinate is set.
  Rational rational_part() const;

  /// Image under zeta -> zeta^-1.
  CycloNum conjugate() const;
  /// Throws DivisionByZero for zero.
  CycloNum inverse() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator*=(const Rational& c);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator*(CycloNum a, const Rational& c) { return a *= c; }
  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    return a.m_ == b.m_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_same_field(const CycloNum& o) const;

  int m_ = 0;
  std::vector<Rational> coords_;
};

enum class CycloOp { Add, Mul, Inv };
/// Binary ops use both operands; Inv ignores b.
CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op);
Rational cyclo_rational_part(const CycloNum& a);

}  // namespace dgreen
