#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dgreen {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial in q with integer coefficients.
///
/// Stored sparsely as (exponent, coefficient) pairs sorted by increasing
/// exponent. No stored coefficient is zero, so the zero polynomial has no
/// terms and equality is plain structural equality.
class IntPoly {
 public:
  using Term = std::pair<int, Integer>;

  IntPoly() = default;
  IntPoly(long long c);  // NOLINT(google-explicit-constructor)
  explicit IntPoly(Integer c);

  static IntPoly monomial(Integer c, int exp);
  static IntPoly q_power(int exp) { return monomial(1, exp); }
  /// Builds from arbitrary terms; duplicates are summed and zeros dropped.
  static IntPoly from_terms(std::vector<Term> terms);
  /// Dense little-endian coefficient vector, index = exponent.
  static IntPoly from_dense(const std::vector<Integer>& coeffs);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Highest exponent; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.back().first; }
  /// Lowest exponent (q-adic valuation); -1 for the zero polynomial.
  int valuation() const { return terms_.empty() ? -1 : terms_.front().first; }
  const Integer& leading_coeff() const;
  Integer coeff(int exp) const;

  bool has_nonnegative_coeffs() const;
  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Integer content() const;
  Integer eval(const Integer& x) const;
  /// Sum of coefficients, i.e. the value at q = 1.
  Integer at_one() const;
  std::vector<Integer> dense() const;

  /// Multiplies by q^k. Negative k is allowed only when q^-k divides the
  /// polynomial.
  IntPoly shifted(int k) const;
  IntPoly scaled(const Integer& c) const;
  /// Divides every coefficient by c; c must divide the content.
  IntPoly div_scalar(const Integer& c) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  /// Human-readable form such as "q^3+2*q^2-1".
  std::string to_string() const;
  /// Inverse of to_string; also accepts spaces and "2q^3". Throws ParseError.
  static IntPoly parse(const std::string& text);

 private:
  std::vector<Term> terms_;
};

/// Exact quotient a / b in Z[q]; throws NotDivisible when the remainder is
/// nonzero or the quotient is not integral.
IntPoly div_exact(const IntPoly& a, const IntPoly& b);
/// As div_exact, reporting failure through the return flag instead.
bool try_div_exact(const IntPoly& a, const IntPoly& b, IntPoly& quotient);

/// Greatest common divisor in Z[q], normalized to a positive leading
/// coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

enum class PolyOp { Add, Sub, Mul };
IntPoly poly_arith(const IntPoly& a, const IntPoly& b, PolyOp op);

}  // namespace dgreen
