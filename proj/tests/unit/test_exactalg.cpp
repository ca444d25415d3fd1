#include "doctest.h"
#include "oracles.hpp"

#include "dgreen/errors.hpp"
#include "dgreen/poly_matrix.hpp"

using namespace dgreen;

namespace {

IntPoly P(const char* s) { return IntPoly::parse(s); }
RatFunc R(const char* s) { return RatFunc::parse(s); }

const std::vector<Integer> kPoints = {-3, -1, 0, 2, 5, 11};

}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK(P("q^2+1") + P("q-1") == P("q^2+q"));
  CHECK(P("q-1") * P("q+1") == P("q^2-1"));
  CHECK((IntPoly(0) * P("q^5+3")).is_zero());
  CHECK(P("3*q^2-q^2-2*q^2").is_zero());

  const IntPoly a = P("4*q^7-3*q^3+q-12"), b = P("-q^4+2*q+9");
  for (const Integer& x : kPoints) {
    CHECK(oracle::eval(a * b, x) == oracle::eval(a, x) * oracle::eval(b, x));
    CHECK(oracle::eval(a - b, x) == oracle::eval(a, x) - oracle::eval(b, x));
  }
}

TEST_CASE("big coefficients survive multiplication") {
  IntPoly p = P("q+1");
  IntPoly acc(1);
  for (int i = 0; i < 80; ++i) acc *= p;
  CHECK(acc.coeff(40) > Integer("100000000000000000000"));
  CHECK(oracle::eval(acc, 1) == Integer(1) << 80);
  CHECK(IntPoly::parse(acc.to_string()) == acc);
}

TEST_CASE("exact division") {
  CHECK(div_exact(P("q^6-1"), P("q^3-1")) == P("q^3+1"));
  CHECK(div_exact(P("q^8-q^4"), P("q^4-1")) == P("q^4"));
  CHECK_THROWS_AS(div_exact(P("q^2+1"), P("q-1")), NotDivisible);
  CHECK_THROWS_AS(div_exact(P("q"), IntPoly()), DivisionByZero);
  IntPoly quo;
  CHECK_FALSE(try_div_exact(P("q^2+1"), P("2*q"), quo));
}

TEST_CASE("gcd and shifts") {
  CHECK(gcd(P("q^2-1"), P("q^3-1")) == P("q-1"));
  CHECK(gcd(P("q^4"), P("q^6+q^2")) == P("q^2"));
  CHECK(P("q^3+q^2").shifted(-2) == P("q+1"));
  CHECK_THROWS_AS(P("q^3+1").shifted(-1), NotDivisible);
  CHECK(P("q^3+q^2").valuation() == 2);
}

TEST_CASE("polynomial text round trip") {
  for (const char* s : {"0", "1", "-7", "q", "-q", "q^12-2*q^3+q", "5*q^2+1"}) CHECK(P(s).to_string() == s);
  CHECK(P(" 2q^3 + q ") == P("2*q^3+q"));
  CHECK_THROWS_AS(P("q^"), ParseError);
  CHECK_THROWS_AS(P("x+1"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
}

TEST_CASE("rational function normalization") {
  CHECK(RatFunc::make(P("q^2-1"), P("q-1")) == RatFunc(P("q+1")));
  const RatFunc f = RatFunc::make(P("q"), P("q^3"));
  CHECK(f == RatFunc::q_power(-2));
  CHECK(f.den() == P("q^2"));
  CHECK(RatFunc::make(IntPoly(), P("q^5")).is_zero());
  CHECK(RatFunc::make(IntPoly(), P("q^5")).den().is_one());
  CHECK_THROWS_AS(RatFunc::make(P("q"), IntPoly()), ZeroDenominator);
  CHECK(RatFunc::make(P("-q"), P("-2*q^2")) == RatFunc::make(P("1"), P("2*q")));
  CHECK(R("(q^2-1)/(q^3-1)") == RatFunc::make(P("q+1"), P("q^2+q+1")));
  CHECK(R("(q+1)/(q^2+q+1)").to_string() == "(q+1)/(q^2+q+1)");
}

TEST_CASE("rational function field operations agree with evaluation") {
  const RatFunc a = R("(q^3+2)/(q^2-3)"), b = R("(q-4)/(q^5+q+1)");
  for (const Integer& x : {Integer(2), Integer(7), Integer(-5)}) {
    CHECK(oracle::eval(a + b, x) == oracle::eval(a, x) + oracle::eval(b, x));
    CHECK(oracle::eval(a * b, x) == oracle::eval(a, x) * oracle::eval(b, x));
    CHECK(oracle::eval(a / b, x) == oracle::eval(a, x) / oracle::eval(b, x));
  }
  CHECK(a * a.inverse() == RatFunc(1));
  CHECK(R("q^2+1").substitute_inverse(2) == R("q^2+1"));
  CHECK(R("q").times_q_power(-3) == RatFunc::q_power(-2));
}

TEST_CASE("cyclotomic arithmetic") {
  CHECK(cyclo_arith(CycloNum::zeta_power(4, 1), CycloNum::zeta_power(4, 1), CycloOp::Mul) == CycloNum(4, -1));
  CHECK(cyclo_arith(CycloNum::zeta_power(3, 1), CycloNum::zeta_power(3, 2), CycloOp::Add) == CycloNum(3, -1));
  CHECK(cyclo_arith(CycloNum::zeta_power(5, 1), CycloNum::zero(5), CycloOp::Inv) == CycloNum::zeta_power(5, 4));
  CHECK(cyclo_rational_part(CycloNum::zeta_power(3, 1) + CycloNum::zeta_power(3, 2) + CycloNum::one(3)) == 0);
  CHECK(cyclo_rational_part(CycloNum(4, 7)) == 7);
  CHECK_THROWS_AS(cyclo_rational_part(CycloNum::zeta_power(5, 1)), NotRational);

  for (int m : {5, 8, 9, 12, 15}) {
    CycloNum sum = CycloNum::zero(m);
    for (int k = 0; k < m; ++k) sum += CycloNum::zeta_power(m, k);
    CHECK(sum.is_zero());
    CHECK(CycloNum::zeta_power(m, m) == CycloNum::one(m));
    const CycloNum x = CycloNum::zeta_power(m, 1) * Rational(3, 2) + CycloNum::zeta_power(m, 3) - CycloNum(m, 2);
    CHECK(x * x.inverse() == CycloNum::one(m));
    const auto ex = oracle::eval(x), ec = oracle::eval(x.conjugate());
    CHECK(std::abs(ec - std::conj(ex)) < 1e-9);
    const auto sq = oracle::eval(x * x);
    CHECK(std::abs(sq - ex * ex) < 1e-9);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(12) == P("q^4-q^2+1"));
  CHECK(cyclotomic_polynomial(9) == P("q^6+q^3+1"));
  CHECK(euler_phi(15) == 8);
  IntPoly prod(1);
  for (int d : {1, 2, 3, 4, 6, 12}) prod *= cyclotomic_polynomial(d);
  CHECK(prod == P("q^12-1"));
}

TEST_CASE("matrix solve") {
  PolyMatrix b(2, 3);
  b(0, 0) = R("q+1");
  b(1, 2) = R("(q^2)/(q-1)");
  CHECK(matrix_solve(PolyMatrix::identity(3), b) == b);

  PolyMatrix a(2, 2);
  a(0, 0) = R("q^4");
  a(0, 1) = R("q^3");
  a(1, 0) = R("q^3");
  a(1, 1) = R("q^4");
  PolyMatrix rhs(1, 2);
  rhs(0, 0) = R("q^3");
  rhs(0, 1) = R("q^4");
  const PolyMatrix x = matrix_solve(a, rhs);
  CHECK(x(0, 0).is_zero());
  CHECK(x(0, 1) == RatFunc(1));
  CHECK(x * a == rhs);

  PolyMatrix singular(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) singular(i, j) = R("q");
  CHECK_THROWS_AS(matrix_solve(singular, rhs), SingularBlock);
  CHECK_THROWS_AS(matrix_inverse(singular), SingularBlock);
}

TEST_CASE("Bareiss solve and Gauss-Jordan inverse agree") {
  PolyMatrix a(3, 3), b(2, 3);
  const char* as[3][3] = {{"q^2+1", "q", "0"}, {"q-1", "q^3", "2"}, {"1", "q+2", "q^2-q"}};
  const char* bs[2][3] = {{"1", "q", "q^2"}, {"(q+1)/(q-1)", "0", "-3"}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = R(as[i][j]);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) b(i, j) = R(bs[i][j]);
  const PolyMatrix x = matrix_solve(a, b);
  CHECK(x * a == b);
  CHECK(b * matrix_inverse(a) == x);
  CHECK(a * matrix_inverse(a) == PolyMatrix::identity(3));
}
