#pragma once

#include "dgreen/green_solver.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dgreen {

/// Prescribed set of Springer characters. Always contains Chi(0), Chi(1)
/// and Eps; when exactly one of ChiR/ChiRPrime is given it is stored as
/// ChiRPrime (relabelled_r records that a ChiR was swapped).
struct SpringerSet {
  int m = 0;
  std::vector<CharLabel> labels;  // canonical order
  bool relabelled_r = false;

  /// Throws InvalidSpringerSet.
  static SpringerSet make(int m, std::vector<CharLabel> labels);
  /// Comma-separated labels ("0,1,r',eps") or "all".
  static SpringerSet parse(int m, const std::string& text);

  bool contains(CharLabel label) const;
  std::string to_string() const;

  friend bool operator==(const SpringerSet& a, const SpringerSet& b) { return a.m == b.m && a.labels == b.labels; }
};

/// Every normalized Springer set for I2(m), m >= 3.
std::vector<SpringerSet> admissible_sets(int m);

struct DSequence {
  std::vector<int> d;  // d_0 = 0, d_1 = 1, ..., d_N
  int N = 0;
  int iota = 1;
  bool delta = false;        // ChiR in S
  bool delta_prime = false;  // ChiRPrime in S
};

DSequence d_sequence(const SpringerSet& s);

/// f_1 >= ... >= f_N, stored as f[0] .. f[N-1].
struct FSequence {
  std::vector<int> f;
  std::string to_string() const;
  friend bool operator==(const FSequence&, const FSequence&) = default;
  friend auto operator<=>(const FSequence&, const FSequence&) = default;
};

/// Length N, and: f_k = floor((m-1)/2) when iota != 0; otherwise
/// r = f_1 >= ... >= f_N >= d_N.
bool f_sequence_shape_valid(const SpringerSet& s, const FSequence& f);
/// Shape, plus f_k - f_(k+1) <= d_(k+1) - d_k.
bool f_sequence_valid(const SpringerSet& s, const FSequence& f);
/// All valid f-sequences for s, in increasing lexicographic order.
std::vector<FSequence> valid_f_sequences(const SpringerSet& s);

struct SearchOptions {
  std::size_t max_candidates = 1000000;
  int max_m = 16;
  bool family_filter = true;
  std::optional<FamilyPartition> families;  // default: families(m)
};

/// Candidate data: one class per Springer character with a = b, every other
/// character in a class with a < b, the family pre-filter applied unless
/// disabled, classes ordered by decreasing a. When ChiR and ChiRPrime both
/// head classes, both orders of the tie are emitted (ChiR class first, then
/// the swap). Throws SearchBoundExceeded.
std::vector<LSDatum> enumerate_candidate_data(const SpringerSet& s, const SearchOptions& options = {});
/// Number of candidates enumerate_candidate_data would produce.
std::size_t count_candidate_data(const SpringerSet& s, const SearchOptions& options = {});

struct ConditionResult {
  bool pass = true;
  std::string witness;
};

struct ConditionReport {
  std::array<ConditionResult, 5> conditions;
  /// All five hold; with ignore_families condition (3) is skipped.
  bool accepted(bool ignore_families = false) const;
  /// First failing condition, 1-based; 0 when all pass.
  int first_failure() const;
};

ConditionReport check_conditions(const GreenSystem& sys, const SpringerSet& s, const FamilyPartition& fam);

/// The member of class c lying in S.
CharLabel springer_character(const LSDatum& d, std::size_t c, const SpringerSet& s);

/// "left", "middle" or "right" for the three closure diagrams of rank-2
/// dihedral Springer correspondences; "other" for anything else.
std::string closure_diagram(const LSDatum& d, const ClosureOrder& order, const SpringerSet& s);

struct Correspondence {
  GreenSystem system;
  ConditionReport report;
  ClosureOrder closure;

  const LSDatum& datum() const { return system.datum; }
};

struct SearchResult {
  SpringerSet set;
  bool family_filter = true;
  std::size_t candidates = 0;
  std::size_t tie_pairs = 0;  // tie duplicates verified identical and collapsed
  std::vector<Correspondence> accepted;
};

/// Every accepted correspondence for s, canonically ordered.
SearchResult search(const SpringerSet& s, const SearchOptions& options = {});

/// The datum of the closed-form class list for s and f. With
/// require_difference_bound false, shape-valid f violating
/// f_k - f_(k+1) <= d_(k+1) - d_k are accepted too. Throws InvalidFSequence.
LSDatum predicted_partition(const SpringerSet& s, const FSequence& f, bool require_difference_bound = true);

/// (P, Lambda) written down from the closed formulas, without solving.
GreenSystem closed_form_system(const SpringerSet& s, const FSequence& f);

/// f_1 = r, f_k = max(d_N, f_(k-1) - (d_k - d_(k-1))); floor((m-1)/2)
/// throughout when iota != 0.
FSequence maximal_f(const SpringerSet& s);

/// X dominates Y when every character is supported at least as high in X,
/// i.e. a(supp_X chi) <= a(supp_Y chi).
bool dominates(const LSDatum& x, const LSDatum& y);

/// Position in res.accepted of the correspondence dominating all others,
/// if there is one.
std::optional<std::size_t> dominant_correspondence(const SearchResult& res);

struct MaximalResult {
  FSequence f;  // of the returned correspondence
  Correspondence correspondence;
  bool in_search = false;
  bool dominates_all = false;
  /// maximal_f(s), and whether its datum is the dominant one. When it is
  /// not, the dominant member of search(s) is returned instead.
  FSequence recursion_f;
  bool recursion_dominant = false;
};

/// The shape-valid f (difference bound not required) whose predicted
/// partition is d, if any.
std::optional<FSequence> f_sequence_of(const SpringerSet& s, const LSDatum& d);

/// The maximal correspondence, checked against search(s).
MaximalResult maximal(const SpringerSet& s, const SearchOptions& options = {});

/// Special pieces as sets of class positions, listed from the top special
/// class down. Special classes are those headed by Chi(0), Chi(1), Eps.
std::vector<std::vector<std::size_t>> special_pieces(const GreenSystem& sys, const ClosureOrder& order,
                                                     const SpringerSet& s);

struct SmoothnessEntry {
  CharLabel row;
  CharLabel col;
  RatFunc value;
  RatFunc expected;
  bool ok = true;
};

struct SmoothnessCertificate {
  bool smooth = true;
  std::size_t top_class = 0;
  std::vector<SmoothnessEntry> entries;
};

/// With chi the Springer character of the piece's top class C: P_{chi,psi}
/// = q^(a_C) for each Springer psi in the piece, and P_{chi,chi'} = 0 for
/// each other chi' supported in the piece.
SmoothnessCertificate rational_smoothness(const GreenSystem& sys, const std::vector<std::size_t>& piece,
                                          const SpringerSet& s);
/// The same predicate over all classes, with top class that of Chi(0).
SmoothnessCertificate full_variety_smoothness(const GreenSystem& sys, const SpringerSet& s);

}  // namespace dgreen
