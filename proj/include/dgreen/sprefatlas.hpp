#pragma once

#include "dgreen/springer.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgreen {

struct SprefResult {
  int m = 0;
  std::vector<CharLabel> labels;  // canonical order
  /// Prime-power divisors d with no 2-dimensional chi_d (d > m/2); the only
  /// such divisor is m itself, whose epsilon^(m) is eps.
  std::vector<int> out_of_range;
  std::vector<std::string> notes;

  SpringerSet springer_set() const { return SpringerSet::make(m, labels); }
};

/// {chi_0, chi_1, eps} plus chi_d for prime-power divisors d < m/2 (d != r),
/// plus chi_r' when m = 2r. All of Irr(I2(2)) for m = 2.
SprefResult s_pref(int m);

bool is_prime_power(int n);

struct DFormulaCheck {
  int m = 0;
  bool ok = false;
  int formula_N = 0;
  int formula_dN = 0;
  std::map<int, int> formula_terms;  // index -> value from the product formula
  std::vector<int> actual;           // d_sequence(s_pref(m)).d
  std::string detail;
};

/// Compares d_sequence(s_pref(m)) with the prime-factorization formula for
/// the d_k, N and d_N.
DFormulaCheck d_sequence_formula_check(int m);

struct InductionIdentity {
  int d = 0;
  bool primed = false;
  CharLabel phi;
  CharLabel got;
  CharLabel expected;
  bool ok = false;
};

/// j(chi_0^(d)) = chi_0, j(chi_1^(d)) = chi_1 (for d = 2 both linear
/// characters of b = 1 stand in for chi_1^(2)), and j(eps^(d)) = chi_d,
/// chi_r' or eps, over every reflection subgroup I2(d), I2'(d) with d | m.
std::vector<InductionIdentity> induction_identities(int m);

struct SprefInductionCheck {
  bool ok = false;
  std::vector<CharLabel> induced;  // canonical order
  std::vector<CharLabel> expected;
};

/// Rebuilds S_pref from truncated induction of chi_0, chi_1, eps of I2(d)
/// for prime-power d | m and for d = m/2, together with the special
/// characters of I2(m).
SprefInductionCheck verify_spref_via_induction(int m);

struct ExampleCheck {
  bool ok = false;
  LSDatum expected;  // classes only; a is left empty
  LSDatum got;
};

/// m = 2p, p an odd prime: maximal(S_pref) has classes {chi_0}, {chi_1, chi_r},
/// {chi_2, ..., chi_(p-1)}, {chi_r'}, {eps}.
ExampleCheck check_2p_example(int p);

struct AtlasFixture {
  int version = 1;
  std::string name;
  int m = 0;
  std::vector<std::string> springer;
  std::vector<std::vector<std::string>> expected_classes;
  std::string expected_closure;
  std::string provenance;
};

struct AtlasReport {
  bool ok = false;
  std::vector<std::string> diff;
  std::string closure;
  LSDatum datum;
};

/// DGREEN_ATLAS_DIR if set, otherwise the directory configured at build time.
std::string atlas_dir();
std::vector<std::string> atlas_names();
AtlasFixture load_fixture(const std::string& name);
AtlasFixture parse_fixture(const std::string& json_text);

/// Runs search (maximal when several correspondences exist) for the fixture's
/// set and compares the partition and the closure diagram.
AtlasReport atlas_check(const AtlasFixture& fixture);

}  // namespace dgreen
