#pragma once

#include "dgreen/dihedral.hpp"
#include "dgreen/poly_matrix.hpp"

#include <vector>

namespace dgreen {

/// Poincare polynomial of I2(m): (q^2-1)(q^m-1)/(q-1)^2.
IntPoly poincare(int m);

/// R(f) evaluated from the Molien-type sum over all 2m group elements,
/// carried out in Q(zeta_m)[q]. Throws NotRational / NotPolynomial if the
/// result is not an integer polynomial (f not a virtual character).
IntPoly fake_degree_sum(int m, const ClassFunction& f);

/// R(chi) by the sum, for an irreducible character.
IntPoly fake_degree(int m, CharLabel label);

/// Closed form of R(chi): 1, q^i + q^(m-i), q^(m/2), q^m.
IntPoly fake_degree_closed(int m, CharLabel label);

/// True iff R(conj(det) (x) f)(q) == q^N* R(f)(q^-1) exactly.
bool check_symmetry(int m, const ClassFunction& f);

struct OmegaMatrix {
  int m = 0;
  int nstar = 0;  // number of reflections
  std::vector<CharLabel> labels;  // canonical order
  PolyMatrix entries;

  std::size_t index_of(CharLabel label) const;
  const RatFunc& at(CharLabel a, CharLabel b) const { return entries(index_of(a), index_of(b)); }
};

enum class OmegaMethod { Sum, Closed };

/// omega_{chi,chi'} = q^N* R(chi (x) chi' (x) conj(det)). Method Sum
/// evaluates R by the group sum; method Closed instantiates the tabulated
/// closed forms. m >= 3.
OmegaMatrix omega(int m, OmegaMethod method);

}  // namespace dgreen
