#include "doctest.h"

#include "dgreen/errors.hpp"
#include "dgreen/sprefatlas.hpp"

#include <set>

using namespace dgreen;

namespace {

std::vector<std::string> strings(const std::vector<CharLabel>& ls) {
  std::vector<std::string> out;
  for (CharLabel l : ls) out.push_back(l.to_string());
  return out;
}

bool prime_power_by_trial(int n) {
  if (n < 2) return false;
  int p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

TEST_CASE("preferred Springer sets") {
  CHECK(strings(s_pref(6).labels) == std::vector<std::string>{"0", "1", "2", "r'", "eps"});
  const SprefResult m9 = s_pref(9);
  CHECK(strings(m9.labels) == std::vector<std::string>{"0", "1", "3", "eps"});
  CHECK(m9.out_of_range == std::vector<int>{9});
  CHECK_FALSE(m9.notes.empty());
  CHECK(s_pref(2).labels == char_labels(2));

  for (int m = 3; m <= 16; ++m) {
    std::set<std::string> expected{"0", "1", "eps"};
    for (int d = 2; 2 * d < m; ++d)
      if (m % d == 0 && prime_power_by_trial(d) && 2 * d != m) expected.insert(std::to_string(d));
    if (m % 2 == 0) expected.insert("r'");
    const auto got = strings(s_pref(m).labels);
    CHECK(std::set<std::string>(got.begin(), got.end()) == expected);
    CHECK_NOTHROW(s_pref(m).springer_set());
  }
  for (int n = 1; n <= 64; ++n) CHECK(is_prime_power(n) == prime_power_by_trial(n));
}

TEST_CASE("d-sequence formula") {
  const DFormulaCheck m8 = d_sequence_formula_check(8);
  CHECK(m8.ok);
  CHECK(m8.formula_N == 2);
  CHECK(m8.formula_dN == 2);

  const DFormulaCheck m10 = d_sequence_formula_check(10);
  CHECK(m10.ok);
  CHECK(m10.formula_N == 2);
  CHECK(m10.formula_dN == 2);

  // 12 = 2^2 * 3: the product formula counts n_1 + n_2 = 3 terms, but chi_3
  // is also in S_pref, so the actual sequence is (0, 1, 2, 3, 4).
  const DFormulaCheck m12 = d_sequence_formula_check(12);
  CHECK(m12.actual == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(m12.formula_N == 3);
  CHECK(m12.formula_dN == 4);
  CHECK_FALSE(m12.ok);

  for (int m : {3, 4, 5, 7, 9, 16}) CHECK(d_sequence_formula_check(m).ok);
}

TEST_CASE("truncated induction rebuilds S_pref") {
  for (int m : {6, 9, 10}) {
    const SprefInductionCheck c = verify_spref_via_induction(m);
    CHECK(c.ok);
    CHECK(c.induced == s_pref(m).labels);
  }
  for (int m = 3; m <= 16; ++m)
    for (const auto& id : induction_identities(m)) CHECK_MESSAGE(id.ok, "m=" << m << " d=" << id.d);
}

TEST_CASE("m = 2p example") {
  for (int p : {3, 5, 7}) {
    const ExampleCheck c = check_2p_example(p);
    CHECK_MESSAGE(c.ok, "p=" << p << " got " << c.got.to_string());
  }
  CHECK(check_2p_example(5).expected.classes.size() == 5);
}

TEST_CASE("atlas fixtures") {
  const auto names = atlas_names();
  CHECK(std::set<std::string>(names.begin(), names.end()) ==
        std::set<std::string>{"A2", "B2", "G2", "GG5", "GO6", "B2-char2", "G2-char3"});
  for (const auto& name : names) {
    const AtlasFixture f = load_fixture(name);
    CHECK(f.name == name);
    const AtlasReport r = atlas_check(f);
    CHECK_MESSAGE(r.ok, name);
    CHECK(r.closure == f.expected_closure);
  }
  CHECK(atlas_check(load_fixture("GG5")).closure == "middle");
  CHECK(atlas_check(load_fixture("A2")).closure == "left");
}

TEST_CASE("a wrong fixture fails with a diff") {
  AtlasFixture f = load_fixture("B2");
  f.expected_classes = {{"0"}, {"1"}, {"r", "r'"}, {"eps"}};
  const AtlasReport r = atlas_check(f);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.diff.empty());
}

TEST_CASE("fixture parsing") {
  CHECK_THROWS_AS(parse_fixture("{"), ParseError);
  CHECK_THROWS_AS(parse_fixture(R"({"version": 1, "name": "X", "m": 3})"), ParseError);
  CHECK_THROWS_AS(parse_fixture(R"({"version": 1, "name": "X", "m": 3, "springer": ["0", "1", "eps"],
    "expected_classes": [["0"], ["1"]], "expected_closure": "left", "provenance": ""})"),
                  ParseError);
  const AtlasFixture ok = parse_fixture(R"({"version": 1, "name": "X", "m": 3, "springer": ["0", "1", "eps"],
    "expected_classes": [["0"], ["1"], ["eps"]], "expected_closure": "left", "provenance": "test"})");
  CHECK(ok.m == 3);
  CHECK(atlas_check(ok).ok);
}
