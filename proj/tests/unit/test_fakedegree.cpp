#include "doctest.h"
#include "oracles.hpp"

#include "dgreen/errors.hpp"

using namespace dgreen;

TEST_CASE("Poincare polynomial") {
  CHECK(poincare(3) == IntPoly::parse("q^3+2*q^2+2*q+1"));
  CHECK(poincare(2) == IntPoly::parse("q^2+2*q+1"));
  CHECK(poincare(4) == IntPoly::parse("q^4+2*q^3+2*q^2+2*q+1"));
  for (int m = 3; m <= 10; ++m) CHECK(poincare(m).at_one() == 2 * m);
}

TEST_CASE("fake degrees by the group sum") {
  for (int m = 3; m <= 16; ++m) {
    IntPoly graded;
    for (const auto& ch : irreps(m)) {
      const IntPoly r = fake_degree(m, ch.label);
      CHECK(r == oracle::fake_degree(m, ch.label));
      CHECK(r == fake_degree_closed(m, ch.label));
      CHECK(r.valuation() == ch.b);
      graded += r.scaled(ch.degree);
    }
    // The coinvariant algebra carries the regular representation.
    CHECK(graded == poincare(m));
  }
}

TEST_CASE("fake degree sum rejects malformed input") {
  CHECK_THROWS_AS(fake_degree_sum(4, ClassFunction(3, CycloNum::one(4))), std::invalid_argument);
  // Half the trivial character is not a virtual character.
  ClassFunction half;
  const auto t5 = irreps(5);
  for (const auto& v : t5[0].values) half.push_back(v * Rational(1, 2));
  CHECK_THROWS(fake_degree_sum(5, half));
  CHECK_THROWS_AS(omega(2, OmegaMethod::Sum), InvalidM);
}

TEST_CASE("symmetry under tensoring with the sign") {
  for (int m : {3, 4, 5, 6, 8, 9, 12}) {
    const auto t = irreps(m);
    for (const auto& a : t) {
      CHECK(check_symmetry(m, a.values));
      for (const auto& b : t) CHECK(check_symmetry(m, pointwise_product(a.values, b.values)));
    }
  }
  // chi_1 (x) eps is chi_1 again, chi_r (x) eps is chi_r'.
  CHECK(fake_degree_sum(6, pointwise_product(irreps(6)[3].values, det_character(6))) ==
        fake_degree(6, CharLabel::chi_r_prime()));
}

TEST_CASE("omega against the multiplicity oracle") {
  for (int m = 3; m <= 8; ++m) {
    const OmegaMatrix sum = omega(m, OmegaMethod::Sum);
    const OmegaMatrix closed = omega(m, OmegaMethod::Closed);
    CHECK(sum.nstar == m);
    CHECK(sum.entries == closed.entries);
    CHECK(sum.labels == oracle::labels(m));
    for (CharLabel a : sum.labels)
      for (CharLabel b : sum.labels) {
        CHECK(sum.at(a, b) == RatFunc(oracle::omega_entry(m, a, b)));
        CHECK(sum.at(a, b) == sum.at(b, a));
      }
  }
}

TEST_CASE("omega entries") {
  CHECK(omega(3, OmegaMethod::Sum).at(CharLabel::chi(0), CharLabel::chi(0)) == RatFunc::q_power(6));
  CHECK(omega(6, OmegaMethod::Sum).at(CharLabel::chi(1), CharLabel::chi(2)) ==
        RatFunc(IntPoly::parse("q^11+2*q^9+q^7")));
  CHECK(omega(4, OmegaMethod::Closed).at(CharLabel::chi_r(), CharLabel::chi_r_prime()) == RatFunc::q_power(4));
  CHECK(omega(5, OmegaMethod::Closed).at(CharLabel::eps(), CharLabel::chi(0)) == RatFunc::q_power(5));
  CHECK(omega(16, OmegaMethod::Sum).entries == omega(16, OmegaMethod::Closed).entries);
}
