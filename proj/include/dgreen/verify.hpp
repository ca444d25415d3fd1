#pragma once

#include "dgreen/sprefatlas.hpp"

#include <string>
#include <vector>

namespace dgreen {

struct VerifyCheck {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;  // first few only

  bool ok() const { return passed == total; }
};

struct VerifyReport {
  int m = 0;
  std::vector<VerifyCheck> checks;

  bool ok() const;
  const VerifyCheck* find(const std::string& name) const;
};

struct VerifyOptions {
  SearchOptions search;
  /// Search-based suites run only for m <= this.
  int max_search_m = 14;
  bool atlas = true;
};

/// Every invariant suite for one m: omega, symmetry, fake-degrees,
/// factorization, uniqueness, count, closed-form, maximal, smoothness,
/// tie, spref, atlas.
VerifyReport verify(int m, const VerifyOptions& options = {});

}  // namespace dgreen
