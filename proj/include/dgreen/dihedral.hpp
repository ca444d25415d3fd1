#pragma once

#include "dgreen/cyclo.hpp"

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace dgreen {

/// Element of I2(m): the rotation rho^k, or the reflection s_k = rho^k s_0.
/// Products follow s_a s_b = rho^(a-b), rho^a s_b = s_(a+b), s_b rho^a = s_(b-a).
struct GroupElement {
  enum class Kind { Rotation, Reflection };
  Kind kind = Kind::Rotation;
  int k = 0;

  static GroupElement rotation(int k) { return {Kind::Rotation, k}; }
  static GroupElement reflection(int k) { return {Kind::Reflection, k}; }
  bool is_reflection() const { return kind == Kind::Reflection; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement multiply(int m, GroupElement a, GroupElement b);
GroupElement inverse(int m, GroupElement g);
/// Position of g in elements(m).
std::size_t element_index(int m, GroupElement g);

/// The 2m elements of I2(m): rotations 0..m-1, then reflections 0..m-1.
/// Throws InvalidM for m < 2.
std::vector<GroupElement> elements(int m);

/// Label of an irreducible character of I2(m).
///
/// Chi(i) for 0 <= i < m/2 (Chi(0) trivial, Chi(i) two-dimensional for
/// i >= 1), the linear characters ChiR and ChiRPrime when m is even, and
/// Eps the sign character. Ordering is the canonical one: Chi by index,
/// then ChiR, ChiRPrime, Eps.
struct CharLabel {
  enum class Kind { Chi = 0, ChiR = 1, ChiRPrime = 2, Eps = 3 };
  Kind kind = Kind::Chi;
  int index = 0;  // meaningful for Chi only

  static CharLabel chi(int i) { return {Kind::Chi, i}; }
  static CharLabel chi_r() { return {Kind::ChiR, 0}; }
  static CharLabel chi_r_prime() { return {Kind::ChiRPrime, 0}; }
  static CharLabel eps() { return {Kind::Eps, 0}; }

  bool is_linear_r() const { return kind == Kind::ChiR || kind == Kind::ChiRPrime; }

  /// "0", "1", ..., "r", "r'", "eps".
  std::string to_string() const;
  /// Accepts the to_string forms, plus "m/2" for r and "m/2'" for r'.
  static CharLabel parse(const std::string& text, int m);

  friend bool operator==(const CharLabel&, const CharLabel&) = default;
  friend auto operator<=>(const CharLabel& a, const CharLabel& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.index <=> b.index;
  }
};

/// All labels of Irr(I2(m)) in canonical order (m >= 2).
std::vector<CharLabel> char_labels(int m);
bool is_valid_label(int m, CharLabel label);
int b_invariant(int m, CharLabel label);
int char_degree(int m, CharLabel label);
/// Index t with 0 <= t <= m/2 so that the label behaves as chi_t in the
/// closed formulas (r and r' both map to m/2, eps is not allowed).
int chi_index(int m, CharLabel label);

/// Values on elements(m), in the same order.
using ClassFunction = std::vector<CycloNum>;

/// Value of the character `label` of I2(d) at element g of I2(d), computed
/// inside Q(zeta_field) where d divides field (zeta_d = zeta_field^(field/d)).
CycloNum character_value(int field, int d, CharLabel label, GroupElement g);

struct IrrChar {
  CharLabel label;
  int degree = 0;
  int b = 0;
  ClassFunction values;

  const CycloNum& value(int m, GroupElement g) const { return values[element_index(m, g)]; }
};

/// Irreducible characters of I2(m), m >= 3 (InvalidM otherwise).
std::vector<IrrChar> irreps(int m);
/// As irreps, but also allows m = 2 (I2(2) = A1 x A1), as needed for
/// reflection subgroups.
std::vector<IrrChar> character_table(int m);

/// Group-averaged inner product (1/2m) sum f(g) conj(h(g)); must be rational.
Rational inner_product(int m, const ClassFunction& f, const ClassFunction& h);
ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& h);
/// The determinant character det_V (= eps for I2(m)).
ClassFunction det_character(int m);

std::vector<CharLabel> special_characters(int m);
using FamilyPartition = std::vector<std::vector<CharLabel>>;
/// {Chi(0)}, {Eps}, and one family holding everything else.
FamilyPartition families(int m);

/// Reflection subgroup I2(d) = <s_0, s_(m/d)> or, when m/d is even,
/// I2'(d) = <s_1, s_(m/d+1)>.
struct ReflSubgroup {
  int d = 0;
  bool primed = false;
  std::array<GroupElement, 2> generators;
};

/// Throws BadSubgroup if d does not divide m, d < 2, or a primed subgroup
/// is requested with m/d odd.
ReflSubgroup reflection_subgroup(int m, int d, bool primed);

/// Elements of I2(m) generated by H.generators (closure under products).
std::vector<GroupElement> generated_subgroup(int m, const ReflSubgroup& h);

/// Ordinary induction to I2(m) of the character `phi` of I2(d) = H, with H
/// identified with I2(d) through s^(d)_0 -> generators[0],
/// s^(d)_1 -> generators[1]. Throws BadSubgroup when the generators do
/// not generate a group of order 2d.
ClassFunction induce_character(int m, const ReflSubgroup& h, CharLabel phi);

/// Truncated induction j_H^G(phi): the unique constituent of the induced
/// character whose b-invariant equals b_phi. Throws NotUnique otherwise.
CharLabel truncated_induction(int m, const ReflSubgroup& h, CharLabel phi);

}  // namespace dgreen
