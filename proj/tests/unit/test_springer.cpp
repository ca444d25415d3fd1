#include "doctest.h"
#include "oracles.hpp"

#include "dgreen/errors.hpp"
#include "dgreen/springer.hpp"

#include <algorithm>
#include <set>

using namespace dgreen;

namespace {

CharLabel L(const char* s, int m) { return CharLabel::parse(s, m); }
SpringerSet S(int m, const char* text) { return SpringerSet::parse(m, text); }
RatFunc F(const char* s) { return RatFunc::parse(s); }

std::set<std::set<std::string>> partition_of(const LSDatum& d) {
  std::set<std::set<std::string>> out;
  for (const auto& c : d.classes) {
    std::set<std::string> cls;
    for (CharLabel l : c) cls.insert(l.to_string());
    out.insert(cls);
  }
  return out;
}

// Every nonincreasing f in [0, r]^N satisfying the shape and difference
// constraints, by brute force over the full box.
std::vector<std::vector<int>> brute_force_f(int m, const std::vector<int>& d, int iota) {
  const int n = static_cast<int>(d.size()) - 1;
  const int top = (m - 1) / 2 > m / 2 ? (m - 1) / 2 : m / 2;
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, 0);
  for (;;) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      if (iota != 0) {
        ok = f[k] == (m - 1) / 2;
        continue;
      }
      if (k == 0 && f[0] != m / 2) ok = false;
      if (f[k] < d[n]) ok = false;
      if (k + 1 < n && (f[k] < f[k + 1] || f[k] - f[k + 1] > d[k + 2] - d[k + 1])) ok = false;
    }
    if (ok) out.push_back(f);
    int k = n - 1;
    while (k >= 0 && f[k] == top) f[k--] = 0;
    if (k < 0) break;
    ++f[k];
  }
  return out;
}

}  // namespace

TEST_CASE("Springer set parsing and normalization") {
  const SpringerSet b2 = S(4, "0,1,r',eps");
  CHECK(b2.labels == std::vector<CharLabel>{L("0", 4), L("1", 4), L("r'", 4), L("eps", 4)});
  CHECK_FALSE(b2.relabelled_r);
  const SpringerSet swapped = S(4, "eps,r,1,0");
  CHECK(swapped == b2);
  CHECK(swapped.relabelled_r);
  CHECK(S(4, "all").labels.size() == 5);
  CHECK(S(6, "0, 1, 2, 3', eps") == S(6, "0,1,2,r',eps"));
  CHECK(b2.to_string() == "0,1,r',eps");
  CHECK_THROWS_AS(S(4, "0,eps"), InvalidSpringerSet);
  CHECK_THROWS_AS(S(5, "0,1,eps,7"), InvalidSpringerSet);
  CHECK(S(5, "0,1,1,eps") == S(5, "0,1,eps"));
}

TEST_CASE("admissible sets") {
  for (int m = 3; m <= 16; ++m) {
    int optional = 0;
    for (int i = 2; 2 * i < m; ++i) ++optional;
    const std::size_t expected = (std::size_t{1} << optional) * (m % 2 == 0 ? 3 : 1);
    const auto sets = admissible_sets(m);
    CHECK(sets.size() == expected);
    for (const auto& s : sets) {
      CHECK(s.contains(CharLabel::chi(0)));
      CHECK(s.contains(CharLabel::chi(1)));
      CHECK(s.contains(CharLabel::eps()));
      CHECK(!(s.contains(CharLabel::chi_r()) && !s.contains(CharLabel::chi_r_prime())));
    }
  }
}

TEST_CASE("d sequences") {
  DSequence g2 = d_sequence(S(6, "0,1,2,r',eps"));
  CHECK(g2.d == std::vector<int>{0, 1, 2});
  CHECK(g2.N == 2);
  CHECK(g2.iota == 0);
  CHECK(g2.delta_prime);
  CHECK_FALSE(g2.delta);

  DSequence m5 = d_sequence(S(5, "0,1,eps"));
  CHECK(m5.d == std::vector<int>{0, 1});
  CHECK(m5.N == 1);
  CHECK(m5.iota == 1);

  DSequence gg5 = d_sequence(S(4, "all"));
  CHECK(gg5.d == std::vector<int>{0, 1});
  CHECK(gg5.iota == -1);

  for (int m = 3; m <= 14; ++m)
    for (const auto& s : admissible_sets(m)) {
      std::vector<int> d;
      for (int i = 0; 2 * i < m; ++i)
        if (s.contains(CharLabel::chi(i))) d.push_back(i);
      CHECK(d_sequence(s).d == d);
    }
}

TEST_CASE("valid f-sequences agree with brute force") {
  for (int m = 3; m <= 12; ++m)
    for (const auto& s : admissible_sets(m)) {
      const DSequence ds = d_sequence(s);
      std::vector<std::vector<int>> got;
      for (const auto& f : valid_f_sequences(s)) {
        got.push_back(f.f);
        CHECK(f_sequence_valid(s, f));
        CHECK(f_sequence_shape_valid(s, f));
      }
      CHECK(got == brute_force_f(m, ds.d, ds.iota));
    }
  CHECK_FALSE(f_sequence_valid(S(6, "0,1,2,r',eps"), FSequence{{3, 1}}));
  CHECK_FALSE(f_sequence_valid(S(6, "0,1,2,r',eps"), FSequence{{2, 2}}));
}

TEST_CASE("candidate enumeration") {
  CHECK(count_candidate_data(S(6, "0,1,2,r',eps")) == 2);
  CHECK(count_candidate_data(S(5, "0,1,eps")) == 1);
  // One partition, emitted in both orders of the r/r' tie.
  CHECK(count_candidate_data(S(4, "all")) == 2);
  std::set<std::set<std::set<std::string>>> gg5;
  for (const LSDatum& d : enumerate_candidate_data(S(4, "all"))) gg5.insert(partition_of(d));
  CHECK(gg5.size() == 1);
  for (const auto& s : {S(6, "0,1,2,r',eps"), S(8, "0,1,3,r',eps"), S(9, "0,1,eps")})
    CHECK(enumerate_candidate_data(s).size() == count_candidate_data(s));

  SearchOptions tight;
  tight.max_candidates = 1;
  CHECK_THROWS_AS(enumerate_candidate_data(S(6, "0,1,2,r',eps"), tight), SearchBoundExceeded);
  CHECK_THROWS_AS(search(S(17, "0,1,eps")), SearchBoundExceeded);

  for (const LSDatum& d : enumerate_candidate_data(S(7, "0,1,2,eps"))) {
    d.validate();
    for (std::size_t c = 0; c < d.classes.size(); ++c)
      for (CharLabel l : d.classes[c]) CHECK(b_invariant(7, l) >= d.a[c]);
  }
}

TEST_CASE("search examples") {
  const SearchResult m5 = search(S(5, "0,1,eps"));
  REQUIRE(m5.accepted.size() == 1);
  CHECK(partition_of(m5.accepted[0].datum()) ==
        std::set<std::set<std::string>>{{"0"}, {"1", "2"}, {"eps"}});

  const SpringerSet g2set = S(6, "0,1,2,r',eps");
  const SearchResult g2 = search(g2set);
  REQUIRE(g2.accepted.size() == 2);
  std::set<FSequence> fs;
  for (const auto& c : g2.accepted) fs.insert(*f_sequence_of(g2set, c.datum()));
  CHECK(fs == std::set<FSequence>{FSequence{{3, 2}}, FSequence{{3, 3}}});

  const SearchResult b2 = search(S(4, "0,1,r',eps"));
  REQUIRE(b2.accepted.size() == 1);
  CHECK(partition_of(b2.accepted[0].datum()) ==
        std::set<std::set<std::string>>{{"0"}, {"1", "r"}, {"r'"}, {"eps"}});
}

TEST_CASE("search is complete against the predicted partitions") {
  for (int m = 3; m <= 9; ++m)
    for (const auto& s : admissible_sets(m)) {
      std::set<std::set<std::set<std::string>>> predicted, found;
      for (const auto& f : valid_f_sequences(s)) predicted.insert(partition_of(predicted_partition(s, f)));
      for (const auto& c : search(s).accepted) found.insert(partition_of(c.datum()));
      CHECK_MESSAGE(found == predicted, "m=" << m << " S=" << s.to_string());
    }
}

TEST_CASE("forcing r into the trivial class") {
  LSDatum d;
  d.m = 6;
  d.classes = {{L("eps", 6)}, {L("r'", 6)}, {L("2", 6)}, {L("1", 6)}, {L("0", 6), L("r", 6)}};
  d.a = {6, 3, 2, 1, 0};
  const GreenSystem sys = solve(omega(6, OmegaMethod::Sum), d);
  const ConditionReport rep = check_conditions(sys, S(6, "0,1,2,r',eps"), families(6));
  CHECK_FALSE(rep.conditions[2].pass);
  CHECK(rep.first_failure() == 3);
  CHECK_FALSE(rep.accepted());
  // Condition (4) judged directly from the entries.
  bool positive = true;
  for (std::size_t i = 0; i < sys.labels.size(); ++i)
    for (std::size_t j = 0; j < sys.labels.size(); ++j) {
      if (!sys.Lambda(i, j).is_polynomial() || !sys.P(i, j).is_polynomial()) positive = false;
      else if (!sys.P(i, j).as_poly().has_nonnegative_coeffs()) positive = false;
    }
  CHECK(rep.conditions[3].pass == positive);
}

TEST_CASE("predicted partitions") {
  CHECK(partition_of(predicted_partition(S(6, "0,1,2,r',eps"), FSequence{{3, 2}})) ==
        std::set<std::set<std::string>>{{"0"}, {"1", "r"}, {"2"}, {"r'"}, {"eps"}});
  CHECK(partition_of(predicted_partition(S(7, "0,1,eps"), FSequence{{3}})) ==
        std::set<std::set<std::string>>{{"0"}, {"1", "2", "3"}, {"eps"}});
  CHECK(partition_of(predicted_partition(S(4, "0,1,eps"), FSequence{{1}})) ==
        std::set<std::set<std::string>>{{"0"}, {"1", "r", "r'"}, {"eps"}});
  CHECK_THROWS_AS(predicted_partition(S(6, "0,1,2,r',eps"), FSequence{{3, 1}}), InvalidFSequence);
  CHECK_THROWS_AS(predicted_partition(S(6, "0,1,2,r',eps"), FSequence{{3}}), InvalidFSequence);
  CHECK_NOTHROW(predicted_partition(S(8, "0,1,2,r',eps"), FSequence{{4, 2}}, false));
  CHECK_THROWS_AS(predicted_partition(S(8, "0,1,2,r',eps"), FSequence{{4, 2}}), InvalidFSequence);
}

TEST_CASE("closed forms") {
  const GreenSystem b2 = closed_form_system(S(4, "0,1,r',eps"), FSequence{{2}});
  CHECK(b2.p(L("1", 4), L("r'", 4)) == F("q"));

  const SpringerSet g2set = S(6, "0,1,2,r',eps");
  const GreenSystem g2 = closed_form_system(g2set, FSequence{{3, 2}});
  CHECK(g2.p(L("r", 6), L("2", 6)) == F("q"));

  const GreenSystem a2 = closed_form_system(S(3, "0,1,eps"), FSequence{{1}});
  CHECK(a2.p(L("0", 3), L("eps", 3)) == RatFunc(1));
  CHECK(a2.p(L("1", 3), L("eps", 3)) == F("q^2+q"));
  CHECK(a2.p(L("eps", 3), L("eps", 3)) == F("q^3"));

  for (int m : {5, 6, 8})
    for (const auto& s : admissible_sets(m))
      for (const auto& f : valid_f_sequences(s)) {
        const GreenSystem closed = closed_form_system(s, f);
        const GreenSystem solved = solve(omega(m, OmegaMethod::Sum), predicted_partition(s, f));
        CHECK(closed.P == solved.P);
        CHECK(closed.Lambda == solved.Lambda);
      }
}

TEST_CASE("maximal correspondence") {
  const MaximalResult g2 = maximal(S(6, "0,1,2,r',eps"));
  CHECK(g2.f == FSequence{{3, 2}});
  CHECK(g2.in_search);
  CHECK(g2.dominates_all);
  CHECK(g2.recursion_dominant);

  const MaximalResult m5 = maximal(S(5, "0,1,eps"));
  CHECK(partition_of(m5.correspondence.datum()) == partition_of(search(S(5, "0,1,eps")).accepted[0].datum()));

  // The recursion's datum is not the dominant one here; the dominant member
  // of the search is returned instead.
  const SpringerSet s10 = S(10, "0,1,2,3,r',eps");
  CHECK(maximal_f(s10) == FSequence{{5, 4, 3}});
  const MaximalResult m10 = maximal(s10);
  CHECK(m10.recursion_f == FSequence{{5, 4, 3}});
  CHECK_FALSE(m10.recursion_dominant);
  CHECK(m10.f == FSequence{{5, 3, 3}});
  CHECK(m10.dominates_all);
  for (const auto& c : search(s10).accepted) CHECK(dominates(m10.correspondence.datum(), c.datum()));
}

TEST_CASE("special pieces and smoothness") {
  auto pieces_of = [](const Correspondence& c, const SpringerSet& s) {
    std::set<std::set<std::size_t>> out;
    for (const auto& p : special_pieces(c.system, c.closure, s)) out.insert({p.begin(), p.end()});
    return out;
  };
  const SpringerSet m5set = S(5, "0,1,eps");
  const Correspondence m5 = search(m5set).accepted[0];
  CHECK(pieces_of(m5, m5set) == std::set<std::set<std::size_t>>{{0}, {1}, {2}});

  const SpringerSet b2set = S(4, "0,1,r',eps");
  const Correspondence b2 = search(b2set).accepted[0];
  CHECK(pieces_of(b2, b2set) == std::set<std::set<std::size_t>>{{0}, {1, 2}, {3}});

  const SpringerSet g6 = S(6, "0,1,2,r,r',eps");
  for (const auto& c : search(g6).accepted) {
    const auto pieces = special_pieces(c.system, c.closure, g6);
    REQUIRE(pieces.size() == 3);
    const auto& middle = pieces[1];
    CHECK(std::find(middle.begin(), middle.end(), c.datum().class_of(CharLabel::chi_r())) != middle.end());
    CHECK(std::find(middle.begin(), middle.end(), c.datum().class_of(CharLabel::chi_r_prime())) != middle.end());
    CHECK(std::find(middle.begin(), middle.end(), c.datum().class_of(CharLabel::chi(1))) != middle.end());
    for (const auto& p : pieces) CHECK(rational_smoothness(c.system, p, g6).smooth);
    CHECK(full_variety_smoothness(c.system, g6).smooth);
  }

  const SpringerSet gg5 = S(4, "all");
  Correspondence doctored = search(gg5).accepted[0];
  const auto pieces = special_pieces(doctored.system, doctored.closure, gg5);
  const std::size_t r_class = doctored.datum().class_of(CharLabel::chi_r());
  const auto middle = *std::find_if(pieces.begin(), pieces.end(), [&](const auto& p) {
    return std::find(p.begin(), p.end(), r_class) != p.end();
  });
  CHECK(rational_smoothness(doctored.system, middle, gg5).smooth);
  doctored.system.P(doctored.system.index_of(CharLabel::chi(1)), doctored.system.index_of(CharLabel::chi_r())) =
      F("q^3+q");
  const SmoothnessCertificate cert = rational_smoothness(doctored.system, middle, gg5);
  CHECK_FALSE(cert.smooth);
  bool named = false;
  for (const auto& e : cert.entries)
    if (!e.ok && e.row == CharLabel::chi(1) && e.col == CharLabel::chi_r()) named = true;
  CHECK(named);
}

TEST_CASE("closure diagrams") {
  auto diagram = [](const SpringerSet& s) {
    const auto c = search(s).accepted.at(0);
    return closure_diagram(c.datum(), c.closure, s);
  };
  CHECK(diagram(S(5, "0,1,eps")) == "left");
  CHECK(diagram(S(4, "all")) == "middle");
  CHECK(diagram(S(4, "0,1,r',eps")) == "right");
}
