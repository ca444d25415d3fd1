#include "dgreen/verify.hpp"

#include "dgreen/errors.hpp"

#include <algorithm>
#include <map>

namespace dgreen {

namespace {

constexpr std::size_t kMaxFailures = 5;

class Tally {
 public:
  VerifyCheck& at(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, checks_.size()).first;
      checks_.push_back(VerifyCheck{name, 0, 0, {}});
    }
    return checks_[it->second];
  }
  void record(const std::string& name, bool pass, const std::string& what) {
    VerifyCheck& c = at(name);
    ++c.total;
    if (pass) {
      ++c.passed;
    } else if (c.failures.size() < kMaxFailures) {
      c.failures.push_back(what);
    }
  }
  std::vector<VerifyCheck> take() { return std::move(checks_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<VerifyCheck> checks_;
};

std::string factorization_problem(const Correspondence& c, const OmegaMatrix& om) {
  const GreenSystem& sys = c.system;
  if (sys.P * sys.Lambda * sys.P.transposed() != om.entries) return "P Lambda P^t != Omega";
  const std::size_t n = sys.labels.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RatFunc& l = sys.Lambda(i, j);
      if (!l.is_polynomial()) return "Lambda(" + sys.labels[i].to_string() + "," + sys.labels[j].to_string() + ") not polynomial";
      const RatFunc& p = sys.P(i, j);
      if (p.is_zero()) continue;
      const int a = sys.datum.a[sys.datum.class_of(sys.labels[i])];
      if (!p.is_polynomial() || !p.num().has_nonnegative_coeffs() || p.num().valuation() < a)
        return "P(" + sys.labels[i].to_string() + "," + sys.labels[j].to_string() + ") = " + p.to_string();
    }
  return {};
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int k = 3; k * k <= p; k += 2)
    if (p % k == 0) return false;
  return true;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.ok(); });
}

const VerifyCheck* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

VerifyReport verify(int m, const VerifyOptions& options) {
  if (m < 3) throw InvalidM("verify needs m >= 3, got " + std::to_string(m));
  Tally t;
  const std::string tag = "m=" + std::to_string(m);

  const OmegaMatrix om_sum = omega(m, OmegaMethod::Sum);
  const OmegaMatrix om = omega(m, OmegaMethod::Closed);
  t.record("omega", om_sum.entries == om.entries, tag + ": sum and closed forms differ");

  for (const IrrChar& ch : irreps(m)) {
    t.record("symmetry", check_symmetry(m, ch.values), tag + " " + ch.label.to_string());
    t.record("fake-degrees", fake_degree(m, ch.label) == fake_degree_closed(m, ch.label),
             tag + " " + ch.label.to_string());
  }

  if (m <= options.max_search_m) {
    for (const SpringerSet& s : admissible_sets(m)) {
      const std::string where = tag + " S={" + s.to_string() + "}";
      const DSequence ds = d_sequence(s);
      const bool tie = ds.delta && ds.delta_prime;
      SearchResult res;
      try {
        res = search(s, options.search);
      } catch (const std::logic_error& e) {
        if (tie) t.record("tie", false, where + ": " + e.what());
        t.record("search", false, where + ": " + e.what());
        continue;
      } catch (const Error& e) {
        t.record("search", false, where + ": " + e.what());
        continue;
      }
      t.record("search", !res.accepted.empty(), where + ": no correspondence");
      if (tie) t.record("tie", res.tie_pairs * 2 == res.candidates, where + ": tie pairs not collapsed");

      for (const Correspondence& c : res.accepted) {
        const std::string problem = factorization_problem(c, om);
        t.record("factorization", problem.empty(), where + " " + c.datum().to_string() + ": " + problem);
        bool smooth = full_variety_smoothness(c.system, s).smooth;
        for (const auto& piece : special_pieces(c.system, c.closure, s))
          smooth = smooth && rational_smoothness(c.system, piece, s).smooth;
        t.record("smoothness", smooth, where + " " + c.datum().to_string());
      }

      const std::vector<FSequence> fs = valid_f_sequences(s);
      std::vector<LSDatum> predicted;
      for (const FSequence& f : fs) {
        predicted.push_back(predicted_partition(s, f));
        try {
          const GreenSystem solved = solve(om, predicted.back());
          const GreenSystem closed = closed_form_system(s, f);
          t.record("closed-form", solved.P == closed.P && solved.Lambda == closed.Lambda,
                   where + " f=" + f.to_string() + ": solver and closed forms differ");
        } catch (const Error& e) {
          t.record("closed-form", false, where + " f=" + f.to_string() + ": " + e.what());
        }
      }
      bool all_predicted = true;
      for (const Correspondence& c : res.accepted)
        if (std::find(predicted.begin(), predicted.end(), c.datum()) == predicted.end()) all_predicted = false;
      if (ds.iota != 0) {
        t.record("uniqueness", res.accepted.size() == 1 && all_predicted,
                 where + ": " + std::to_string(res.accepted.size()) + " correspondences");
      } else {
        t.record("count", res.accepted.size() == fs.size() && all_predicted,
                 where + ": search " + std::to_string(res.accepted.size()) + ", f-sequences " +
                     std::to_string(fs.size()));
      }

      try {
        const MaximalResult mx = maximal(s, options.search);
        t.record("maximal", mx.in_search && mx.dominates_all,
                 where + ": f=" + mx.f.to_string() + (mx.in_search ? "" : " not in search") +
                     (mx.dominates_all ? "" : " not dominant"));
        t.record("maximal-recursion", mx.recursion_dominant,
                 where + ": recursion f=" + mx.recursion_f.to_string() + " not dominant, dominant f=" + mx.f.to_string());
      } catch (const Error& e) {
        t.record("maximal", false, where + ": " + e.what());
      }
    }
  }

  const DFormulaCheck fc = d_sequence_formula_check(m);
  t.record("spref-formula", fc.ok, tag + ": " + fc.detail);
  const SprefInductionCheck ic = verify_spref_via_induction(m);
  t.record("spref-induction", ic.ok, tag + ": induced set differs from S_pref");
  for (const InductionIdentity& id : induction_identities(m))
    t.record("induction-identities", id.ok,
             tag + " I2" + std::string(id.primed ? "'" : "") + "(" + std::to_string(id.d) + "): j(" +
                 id.phi.to_string() + ") = " + id.got.to_string() + ", expected " + id.expected.to_string());
  if (m % 2 == 0 && is_odd_prime(m / 2)) {
    const ExampleCheck ex = check_2p_example(m / 2);
    t.record("2p-example", ex.ok, tag + ": got " + ex.got.to_string());
  }

  if (options.atlas) {
    try {
      for (const std::string& name : atlas_names()) {
        const AtlasFixture f = load_fixture(name);
        if (f.m != m) continue;
        const AtlasReport r = atlas_check(f);
        std::string diff;
        for (const auto& d : r.diff) diff += (diff.empty() ? "" : "; ") + d;
        t.record("atlas", r.ok, name + ": " + diff);
      }
    } catch (const ParseError& e) {
      t.record("atlas", false, e.what());
    }
  }

  VerifyReport rep;
  rep.m = m;
  rep.checks = t.take();
  return rep;
}

}  // namespace dgreen
