#include "dgreen/springer.hpp"

#include "dgreen/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace dgreen {

namespace {

using K = CharLabel::Kind;

std::string class_text(const LSDatum& d, std::size_t c) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.classes[c].size(); ++i) s += (i ? "," : "") + d.classes[c][i].to_string();
  return s + "}";
}

// Chi(i) for i < m/2 and ChiR for i = m/2: the "index" view of the closed formulas.
CharLabel label_at(int m, int i) { return 2 * i == m ? CharLabel::chi_r() : CharLabel::chi(i); }

bool is_indexed(CharLabel l) { return l.kind == K::Chi || l.kind == K::ChiR; }

}  // namespace

SpringerSet SpringerSet::make(int m, std::vector<CharLabel> labels) {
  if (m < 3) throw InvalidSpringerSet("Springer sets need m >= 3, got " + std::to_string(m));
  SpringerSet s;
  s.m = m;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (CharLabel l : labels)
    if (!is_valid_label(m, l))
      throw InvalidSpringerSet(l.to_string() + " is not a character of I2(" + std::to_string(m) + ")");
  for (CharLabel sp : special_characters(m))
    if (!std::binary_search(labels.begin(), labels.end(), sp))
      throw InvalidSpringerSet("Springer set must contain the special character " + sp.to_string());
  const bool has_r = std::binary_search(labels.begin(), labels.end(), CharLabel::chi_r());
  const bool has_rp = std::binary_search(labels.begin(), labels.end(), CharLabel::chi_r_prime());
  if (has_r && !has_rp) {
    std::replace(labels.begin(), labels.end(), CharLabel::chi_r(), CharLabel::chi_r_prime());
    std::sort(labels.begin(), labels.end());
    s.relabelled_r = true;
  }
  s.labels = std::move(labels);
  return s;
}

SpringerSet SpringerSet::parse(int m, const std::string& text) {
  std::vector<CharLabel> labels;
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed == "all") {
    if (m < 3) throw InvalidSpringerSet("Springer sets need m >= 3, got " + std::to_string(m));
    return make(m, char_labels(m));
  }
  std::stringstream ss(trimmed);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) throw InvalidSpringerSet("empty label in Springer set '" + text + "'");
    try {
      labels.push_back(CharLabel::parse(token, m));
    } catch (const InvalidLabel& e) {
      throw InvalidSpringerSet(e.what());
    }
  }
  return make(m, std::move(labels));
}

bool SpringerSet::contains(CharLabel label) const { return std::binary_search(labels.begin(), labels.end(), label); }

std::string SpringerSet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i].to_string();
  return s;
}

std::vector<SpringerSet> admissible_sets(int m) {
  if (m < 3) throw InvalidM("admissible_sets: m >= 3 required");
  std::vector<int> optional;
  for (int i = 2; 2 * i < m; ++i) optional.push_back(i);
  std::vector<std::vector<CharLabel>> tails{{}};
  if (m % 2 == 0) tails = {{}, {CharLabel::chi_r_prime()}, {CharLabel::chi_r(), CharLabel::chi_r_prime()}};
  std::vector<SpringerSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << optional.size()); ++mask)
    for (const auto& tail : tails) {
      std::vector<CharLabel> labels{CharLabel::chi(0), CharLabel::chi(1), CharLabel::eps()};
      for (std::size_t b = 0; b < optional.size(); ++b)
        if (mask >> b & 1) labels.push_back(CharLabel::chi(optional[b]));
      labels.insert(labels.end(), tail.begin(), tail.end());
      out.push_back(SpringerSet::make(m, labels));
    }
  return out;
}

DSequence d_sequence(const SpringerSet& s) {
  DSequence out;
  for (CharLabel l : s.labels)
    if (l.kind == K::Chi) out.d.push_back(l.index);
  out.N = static_cast<int>(out.d.size()) - 1;
  out.delta = s.contains(CharLabel::chi_r());
  out.delta_prime = s.contains(CharLabel::chi_r_prime());
  if (s.m % 2 == 1 || (!out.delta && !out.delta_prime))
    out.iota = 1;
  else if (out.delta && out.delta_prime)
    out.iota = -1;
  else
    out.iota = 0;
  return out;
}

std::string FSequence::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

bool f_sequence_shape_valid(const SpringerSet& s, const FSequence& f) {
  const DSequence d = d_sequence(s);
  if (static_cast<int>(f.f.size()) != d.N) return false;
  if (d.iota != 0) {
    const int forced = (s.m - 1) / 2;
    return std::all_of(f.f.begin(), f.f.end(), [&](int x) { return x == forced; });
  }
  const int r = s.m / 2;
  if (f.f.front() != r || f.f.back() < d.d[d.N]) return false;
  for (std::size_t k = 0; k + 1 < f.f.size(); ++k)
    if (f.f[k] < f.f[k + 1]) return false;
  return true;
}

bool f_sequence_valid(const SpringerSet& s, const FSequence& f) {
  if (!f_sequence_shape_valid(s, f)) return false;
  const DSequence d = d_sequence(s);
  // f[k] is f_(k+1): f_k - f_(k+1) <= d_(k+1) - d_k
  for (int k = 1; k < d.N; ++k)
    if (f.f[k - 1] - f.f[k] > d.d[k + 1] - d.d[k]) return false;
  return true;
}

std::vector<FSequence> valid_f_sequences(const SpringerSet& s) {
  const DSequence d = d_sequence(s);
  if (d.iota != 0) return {FSequence{std::vector<int>(d.N, (s.m - 1) / 2)}};
  std::vector<FSequence> out;
  FSequence cur{{s.m / 2}};
  auto extend = [&](auto&& self) -> void {
    const int k = static_cast<int>(cur.f.size());  // next is f_(k+1)
    if (k == d.N) {
      out.push_back(cur);
      return;
    }
    const int prev = cur.f.back();
    for (int next = std::max(d.d[d.N], prev - (d.d[k + 1] - d.d[k])); next <= prev; ++next) {
      cur.f.push_back(next);
      self(self);
      cur.f.pop_back();
    }
  };
  extend(extend);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct CandidateSpace {
  std::vector<CharLabel> heads;  // Springer characters in list order (ChiR before ChiRPrime)
  std::vector<int> a;
  std::vector<CharLabel> others;
  std::vector<std::vector<std::size_t>> options;  // allowed head positions per other
  bool tie = false;
  std::size_t tie_pos = 0;  // heads[tie_pos], heads[tie_pos + 1] are ChiR, ChiRPrime
};

CandidateSpace candidate_space(const SpringerSet& s, const SearchOptions& options) {
  const int m = s.m;
  if (m < 3) throw InvalidM("search: m >= 3 required");
  if (m > options.max_m)
    throw SearchBoundExceeded("search: m=" + std::to_string(m) + " exceeds the configured maximum " +
                              std::to_string(options.max_m));
  CandidateSpace cs;
  cs.heads = s.labels;
  std::stable_sort(cs.heads.begin(), cs.heads.end(), [&](CharLabel x, CharLabel y) {
    return b_invariant(m, x) > b_invariant(m, y);
  });
  for (CharLabel h : cs.heads) cs.a.push_back(b_invariant(m, h));
  for (std::size_t i = 0; i + 1 < cs.heads.size(); ++i)
    if (cs.heads[i] == CharLabel::chi_r() && cs.heads[i + 1] == CharLabel::chi_r_prime()) {
      cs.tie = true;
      cs.tie_pos = i;
    }

  const FamilyPartition fam = options.families ? *options.families : families(m);
  const auto specials = special_characters(m);
  auto is_special = [&](CharLabel l) { return std::find(specials.begin(), specials.end(), l) != specials.end(); };
  auto head_pos = [&](CharLabel l) {
    return static_cast<std::size_t>(std::find(cs.heads.begin(), cs.heads.end(), l) - cs.heads.begin());
  };

  for (CharLabel l : char_labels(m)) {
    if (s.contains(l)) continue;
    std::vector<std::size_t> opts;
    for (std::size_t c = 0; c < cs.heads.size(); ++c) {
      if (cs.a[c] >= b_invariant(m, l)) continue;
      bool ok = true;
      if (options.family_filter && !is_special(l))
        for (const auto& family : fam) {
          if (std::find(family.begin(), family.end(), l) == family.end()) continue;
          for (CharLabel sp : family)
            if (is_special(sp) && head_pos(sp) < c) ok = false;  // list position of supp l must not exceed supp sp
        }
      if (ok) opts.push_back(c);
    }
    cs.others.push_back(l);
    cs.options.push_back(std::move(opts));
  }
  return cs;
}

// Heads are in list order (decreasing b), so head position = class position.
LSDatum datum_from(const SpringerSet& s, const CandidateSpace& cs, const std::vector<std::size_t>& choice, bool swapped) {
  const std::size_t k = cs.heads.size();
  std::vector<std::vector<CharLabel>> by_head(k);
  for (std::size_t c = 0; c < k; ++c) by_head[c].push_back(cs.heads[c]);
  for (std::size_t i = 0; i < cs.others.size(); ++i) by_head[cs.options[i][choice[i]]].push_back(cs.others[i]);
  std::vector<std::size_t> order(k);
  for (std::size_t c = 0; c < k; ++c) order[c] = c;
  if (swapped) std::swap(order[cs.tie_pos], order[cs.tie_pos + 1]);
  LSDatum d;
  d.m = s.m;
  for (std::size_t c : order) {
    d.classes.push_back(by_head[c]);
    d.a.push_back(cs.a[c]);
  }
  return d.canonical();
}

}  // namespace

std::size_t count_candidate_data(const SpringerSet& s, const SearchOptions& options) {
  const CandidateSpace cs = candidate_space(s, options);
  long double total = cs.tie ? 2 : 1;
  for (const auto& o : cs.options) total *= static_cast<long double>(o.size());
  if (total > static_cast<long double>(std::numeric_limits<std::size_t>::max() / 2))
    return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(total);
}

std::vector<LSDatum> enumerate_candidate_data(const SpringerSet& s, const SearchOptions& options) {
  const CandidateSpace cs = candidate_space(s, options);
  const std::size_t count = count_candidate_data(s, options);
  if (count > options.max_candidates)
    throw SearchBoundExceeded("search for S={" + s.to_string() + "} has about " + std::to_string(count) +
                              " candidates, above the bound " + std::to_string(options.max_candidates));
  std::vector<LSDatum> out;
  if (count == 0) return out;
  out.reserve(count);
  std::vector<std::size_t> choice(cs.others.size(), 0);
  while (true) {
    out.push_back(datum_from(s, cs, choice, false));
    if (cs.tie) out.push_back(datum_from(s, cs, choice, true));
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == cs.options[i].size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return out;
}

bool ConditionReport::accepted(bool ignore_families) const {
  for (std::size_t i = 0; i < conditions.size(); ++i)
    if (!conditions[i].pass && !(ignore_families && i == 2)) return false;
  return true;
}

int ConditionReport::first_failure() const {
  for (std::size_t i = 0; i < conditions.size(); ++i)
    if (!conditions[i].pass) return static_cast<int>(i) + 1;
  return 0;
}

CharLabel springer_character(const LSDatum& d, std::size_t c, const SpringerSet& s) {
  for (CharLabel l : d.classes[c])
    if (s.contains(l)) return l;
  throw InvalidDatum("class " + class_text(d, c) + " contains no Springer character of {" + s.to_string() + "}");
}

ConditionReport check_conditions(const GreenSystem& sys, const SpringerSet& s, const FamilyPartition& fam) {
  ConditionReport rep;
  const LSDatum& d = sys.datum;
  const int m = d.m;
  auto fail = [&](int cond, std::string witness) {
    auto& c = rep.conditions[cond - 1];
    if (c.pass) {
      c.pass = false;
      c.witness = std::move(witness);
    }
  };

  // (1) a_C = min b over C, attained exactly once; the minimizers are S
  std::vector<CharLabel> springer_reps;
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    int lo = b_invariant(m, d.classes[c][0]);
    for (CharLabel l : d.classes[c]) lo = std::min(lo, b_invariant(m, l));
    std::vector<CharLabel> at_min;
    for (CharLabel l : d.classes[c])
      if (b_invariant(m, l) == lo) at_min.push_back(l);
    if (d.a[c] != lo)
      fail(1, "class " + class_text(d, c) + " has a=" + std::to_string(d.a[c]) + " but min b=" + std::to_string(lo));
    if (at_min.size() != 1)
      fail(1, "class " + class_text(d, c) + " attains min b=" + std::to_string(lo) + " " +
                  std::to_string(at_min.size()) + " times");
    springer_reps.insert(springer_reps.end(), at_min.begin(), at_min.end());
  }
  std::sort(springer_reps.begin(), springer_reps.end());
  if (rep.conditions[0].pass && springer_reps != s.labels) {
    std::string got;
    for (std::size_t i = 0; i < springer_reps.size(); ++i) got += (i ? "," : "") + springer_reps[i].to_string();
    fail(1, "Springer characters {" + got + "} differ from S={" + s.to_string() + "}");
  }

  // (2) every special character heads its class
  const auto specials = special_characters(m);
  for (CharLabel sp : specials) {
    const std::size_t c = d.class_of(sp);
    for (CharLabel l : d.classes[c])
      if (l != sp && b_invariant(m, l) <= b_invariant(m, sp))
        fail(2, "special " + sp.to_string() + " is not the Springer character of " + class_text(d, c));
  }

  // (3) nonspecial members of a special character's family lie no higher
  auto is_special = [&](CharLabel l) { return std::find(specials.begin(), specials.end(), l) != specials.end(); };
  for (const auto& family : fam)
    for (CharLabel sp : family) {
      if (!is_special(sp)) continue;
      for (CharLabel l : family)
        if (!is_special(l) && d.class_of(l) > d.class_of(sp))
          fail(3, "supp " + l.to_string() + " = " + class_text(d, d.class_of(l)) + " > supp " + sp.to_string() + " = " +
                      class_text(d, d.class_of(sp)));
    }

  // (4) Lambda integral polynomial, P polynomial with nonnegative coefficients
  const std::size_t n = sys.labels.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RatFunc& l = sys.Lambda(i, j);
      if (!l.is_polynomial())
        fail(4, "Lambda(" + sys.labels[i].to_string() + "," + sys.labels[j].to_string() + ") = " + l.to_string());
      const RatFunc& p = sys.P(i, j);
      if (!p.is_polynomial() || !p.num().has_nonnegative_coeffs())
        fail(4, "P(" + sys.labels[i].to_string() + "," + sys.labels[j].to_string() + ") = " + p.to_string());
    }

  // (5) row chi in C divisible by q^(a_C)
  for (std::size_t i = 0; i < n; ++i) {
    const int a = d.a[d.class_of(sys.labels[i])];
    for (std::size_t j = 0; j < n; ++j) {
      const RatFunc& p = sys.P(i, j);
      if (p.is_zero()) continue;
      if (!p.is_polynomial() || p.num().valuation() < a)
        fail(5, "P(" + sys.labels[i].to_string() + "," + sys.labels[j].to_string() + ") = " + p.to_string() +
                    " not divisible by q^" + std::to_string(a));
    }
  }
  return rep;
}

std::string closure_diagram(const LSDatum& d, const ClosureOrder& order, const SpringerSet& s) {
  const std::size_t k = d.classes.size();
  std::optional<std::size_t> cr, crp;
  for (std::size_t c = 0; c < k; ++c) {
    const CharLabel h = springer_character(d, c, s);
    if (h == CharLabel::chi_r()) cr = c;
    if (h == CharLabel::chi_r_prime()) crp = c;
  }
  std::vector<std::pair<std::size_t, std::size_t>> incomparable;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!order.leq(i, j) && !order.leq(j, i)) incomparable.emplace_back(i, j);
  if (incomparable.empty()) {
    if (cr) return "other";
    return crp ? "right" : "left";
  }
  if (cr && crp && incomparable.size() == 1) {
    auto [i, j] = incomparable[0];
    if ((i == *cr && j == *crp) || (i == *crp && j == *cr)) return "middle";
  }
  return "other";
}

SearchResult search(const SpringerSet& s, const SearchOptions& options) {
  SearchResult res;
  res.set = s;
  res.family_filter = options.family_filter;
  const std::vector<LSDatum> candidates = enumerate_candidate_data(s, options);
  res.candidates = candidates.size();
  const OmegaMatrix om = omega(s.m, OmegaMethod::Closed);
  const FamilyPartition fam = options.families ? *options.families : families(s.m);
  const DSequence ds = d_sequence(s);
  const bool tie = ds.delta && ds.delta_prime;

  auto try_solve = [&](const LSDatum& d) -> std::optional<GreenSystem> {
    try {
      return solve(om, d);
    } catch (const SingularBlock&) {
      return std::nullopt;
    }
  };

  for (std::size_t i = 0; i < candidates.size(); i += tie ? 2 : 1) {
    std::optional<GreenSystem> sys = try_solve(candidates[i]);
    if (tie) {
      std::optional<GreenSystem> other = try_solve(candidates[i + 1]);
      if (sys.has_value() != other.has_value() ||
          (sys && (sys->P != other->P || sys->Lambda != other->Lambda)))
        throw std::logic_error("search: the two orders of the ChiR/ChiRPrime tie disagree for " +
                               candidates[i].to_string());
      ++res.tie_pairs;
    }
    if (!sys) continue;
    ConditionReport rep = check_conditions(*sys, s, fam);
    if (!rep.accepted(!options.family_filter)) continue;
    ClosureOrder closure = closure_order(*sys);
    res.accepted.push_back(Correspondence{std::move(*sys), std::move(rep), std::move(closure)});
  }

  auto key = [&](const Correspondence& c) {
    std::vector<int> k;
    for (CharLabel l : c.system.labels) k.push_back(c.datum().a[c.datum().class_of(l)]);
    return k;
  };
  std::sort(res.accepted.begin(), res.accepted.end(),
            [&](const Correspondence& x, const Correspondence& y) { return key(x) < key(y); });
  return res;
}

LSDatum predicted_partition(const SpringerSet& s, const FSequence& fs, bool require_difference_bound) {
  if (!f_sequence_shape_valid(s, fs))
    throw InvalidFSequence("f=" + fs.to_string() + " does not fit S={" + s.to_string() + "}");
  if (require_difference_bound && !f_sequence_valid(s, fs))
    throw InvalidFSequence("f=" + fs.to_string() + " violates f_k - f_(k+1) <= d_(k+1) - d_k for S={" + s.to_string() +
                           "}");
  const int m = s.m;
  const DSequence ds = d_sequence(s);
  const auto& d = ds.d;
  const int N = ds.N;
  auto f = [&](int k) { return fs.f[k - 1]; };  // 1-based f_k

  LSDatum out;
  out.m = m;
  out.classes.push_back({CharLabel::eps()});
  out.a.push_back(m);
  if (ds.delta) {
    out.classes.push_back({CharLabel::chi_r()});
    out.a.push_back(m / 2);
  }
  if (ds.delta_prime) {
    out.classes.push_back({CharLabel::chi_r_prime()});
    out.a.push_back(m / 2);
  }
  for (int k = N; k >= 1; --k) {
    std::vector<CharLabel> cls;
    if (k < N) {
      for (int i = d[k]; i < d[k + 1]; ++i) cls.push_back(label_at(m, i));
      for (int i = f(k + 1) + 1; i <= f(k); ++i) cls.push_back(label_at(m, i));
    } else if (ds.iota == 0) {
      for (int i = d[N]; i <= f(N); ++i) cls.push_back(label_at(m, i));
    } else {
      for (int i = d[N]; i <= (m - 1) / 2; ++i) cls.push_back(CharLabel::chi(i));
      if (m % 2 == 0 && ds.iota == 1) {
        cls.push_back(CharLabel::chi_r());
        cls.push_back(CharLabel::chi_r_prime());
      }
    }
    out.classes.push_back(std::move(cls));
    out.a.push_back(d[k]);
  }
  out.classes.push_back({CharLabel::chi(0)});
  out.a.push_back(0);
  out = out.canonical();
  out.validate();
  return out;
}

GreenSystem closed_form_system(const SpringerSet& s, const FSequence& fs) {
  const LSDatum datum = predicted_partition(s, fs, false);
  const int m = s.m;
  const int r = m / 2;
  const DSequence ds = d_sequence(s);
  const auto& d = ds.d;
  const int N = ds.N;
  auto f = [&](int k) { return fs.f[k - 1]; };
  auto q = [](int e) { return RatFunc::q_power(e); };
  const RatFunc gamma(gamma_poly(m));

  GreenSystem sys;
  sys.datum = datum;
  sys.labels = char_labels(m);
  const std::size_t n = sys.labels.size();
  sys.P = PolyMatrix(n, n);
  sys.Lambda = PolyMatrix(n, n);

  auto idx = [&](CharLabel l) { return l.kind == K::Chi ? l.index : r; };
  auto pos = [&](CharLabel l) { return datum.class_of(l); };
  // C_k for k >= 1 is the class headed by Chi(d_k); k = 0 for Chi(0)
  auto k_of_class = [&](std::size_t c) -> int {
    for (int k = 0; k <= N; ++k)
      if (datum.class_of(CharLabel::chi(d[k])) == c) return k;
    return -1;
  };

  // P
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CharLabel x = sys.labels[i], y = sys.labels[j];
      const std::size_t px = pos(x), py = pos(y);
      if (px == py) {
        if (i == j) sys.P(i, j) = q(datum.a[px]);
        continue;
      }
      if (px < py) continue;
      if (y.kind == K::Eps) {
        sys.P(i, j) = RatFunc(fake_degree_closed(m, x));
      } else if (y.kind == K::ChiRPrime) {
        if (ds.delta_prime && is_indexed(x) && idx(x) < r) sys.P(i, j) = q(idx(x));
      } else if (is_indexed(x) && is_indexed(y)) {
        const int a = idx(x), b = idx(y);
        if (a < b && s.contains(y)) {
          sys.P(i, j) = q(a);
        } else if (a > b) {
          int k_hit = 0;
          for (int k = 1; k <= N; ++k)
            if (f(k) == b) k_hit = k;
          if (k_hit) sys.P(i, j) = q(d[k_hit] + f(k_hit) - a);
        }
      }
    }

  // Y and Lambda = q^(-2a) gamma Y, per class
  for (std::size_t c = 0; c < datum.classes.size(); ++c) {
    const auto& cls = datum.classes[c];
    const std::size_t sz = cls.size();
    PolyMatrix y(sz, sz);
    const CharLabel head = springer_character(datum, c, s);
    const int k = k_of_class(c);
    for (std::size_t u = 0; u < sz; ++u)
      for (std::size_t v = 0; v < sz; ++v) {
        const CharLabel x = cls[u], z = cls[v];
        RatFunc val;
        if (head.kind == K::Eps) {
          val = q(2 * m) / gamma;
        } else if (head.is_linear_r() && sz == 1) {
          val = q(2 * r);
        } else if (k == N) {
          if (x.kind == K::Chi && z.kind == K::Chi) {
            const int i = idx(x), j = idx(z);
            val = q(m - std::abs(i - j)) + q(i + j) * RatFunc(ds.iota);
          } else if (is_indexed(x) && is_indexed(z)) {
            // chi_r behaves like chi_r' here
            val = q(idx(x) + idx(z));
          } else if (x.kind == K::ChiRPrime && z.kind == K::ChiRPrime) {
            val = q(2 * r);
          } else {
            const int i = idx(x.kind == K::ChiRPrime ? z : x);
            val = i < r ? q(i + r) : RatFunc(0);
          }
        } else {
          const int i = idx(x), j = idx(z);
          const int dn = d[k + 1], fn = f(k + 1);
          if (i < dn && j < dn)
            val = q(m - std::abs(i - j)) - q(m + i + j - 2 * dn);
          else if (i > fn && j > fn)
            val = q(m - std::abs(i - j)) - q(m - i - j + 2 * fn);
          else
            val = 0;
        }
        y(u, v) = val;
      }
    for (std::size_t u = 0; u < sz; ++u)
      for (std::size_t v = 0; v < sz; ++v)
        sys.Lambda(sys.index_of(cls[u]), sys.index_of(cls[v])) = (y(u, v) * gamma).times_q_power(-2 * datum.a[c]);
    sys.y_polynomial.push_back(y.all_polynomial());
    sys.Y.push_back(std::move(y));
  }
  return sys;
}

FSequence maximal_f(const SpringerSet& s) {
  const DSequence ds = d_sequence(s);
  if (ds.iota != 0) return FSequence{std::vector<int>(ds.N, (s.m - 1) / 2)};
  FSequence out{{s.m / 2}};
  for (int k = 2; k <= ds.N; ++k) out.f.push_back(std::max(ds.d[ds.N], out.f.back() - (ds.d[k] - ds.d[k - 1])));
  return out;
}

bool dominates(const LSDatum& x, const LSDatum& y) {
  for (CharLabel l : char_labels(x.m))
    if (x.a[x.class_of(l)] > y.a[y.class_of(l)]) return false;
  return true;
}

std::optional<std::size_t> dominant_correspondence(const SearchResult& res) {
  for (std::size_t i = 0; i < res.accepted.size(); ++i) {
    bool all = true;
    for (const auto& other : res.accepted)
      if (!dominates(res.accepted[i].datum(), other.datum())) all = false;
    if (all) return i;
  }
  return std::nullopt;
}

std::optional<FSequence> f_sequence_of(const SpringerSet& s, const LSDatum& d) {
  const DSequence ds = d_sequence(s);
  const int lo = ds.iota != 0 ? (s.m - 1) / 2 : ds.d[ds.N];
  FSequence f{{ds.iota != 0 ? (s.m - 1) / 2 : s.m / 2}};
  std::optional<FSequence> found;
  // every nonincreasing f with f_1 fixed and f_N >= lo
  auto rec = [&](auto&& self) -> void {
    if (found) return;
    if (static_cast<int>(f.f.size()) == ds.N) {
      if (f_sequence_shape_valid(s, f) && predicted_partition(s, f, false) == d) found = f;
      return;
    }
    for (int v = f.f.back(); v >= lo; --v) {
      f.f.push_back(v);
      self(self);
      f.f.pop_back();
    }
  };
  rec(rec);
  return found;
}

MaximalResult maximal(const SpringerSet& s, const SearchOptions& options) {
  MaximalResult out;
  out.recursion_f = maximal_f(s);
  const LSDatum d = predicted_partition(s, out.recursion_f);
  const SearchResult all = search(s, options);

  auto dominant = [&](const LSDatum& x) {
    bool found = false, dom = true;
    for (const auto& c : all.accepted) {
      if (c.datum() == x) found = true;
      if (!dominates(x, c.datum())) dom = false;
    }
    return std::pair{found, dom};
  };
  const auto [found, dom] = dominant(d);
  out.recursion_dominant = found && dom;

  if (!out.recursion_dominant) {
    if (const auto idx = dominant_correspondence(all)) {
      out.correspondence = all.accepted[*idx];
      out.f = f_sequence_of(s, out.correspondence.datum()).value_or(FSequence{});
      out.in_search = out.dominates_all = true;
      return out;
    }
  }
  GreenSystem sys = solve(omega(s.m, OmegaMethod::Closed), d);
  ConditionReport rep = check_conditions(sys, s, options.families ? *options.families : families(s.m));
  ClosureOrder closure = closure_order(sys);
  out.correspondence = Correspondence{std::move(sys), std::move(rep), std::move(closure)};
  out.f = out.recursion_f;
  out.in_search = found;
  out.dominates_all = dom;
  return out;
}

std::vector<std::vector<std::size_t>> special_pieces(const GreenSystem& sys, const ClosureOrder& order,
                                                     const SpringerSet& s) {
  const LSDatum& d = sys.datum;
  const auto specials = special_characters(d.m);
  std::vector<bool> special(d.classes.size(), false);
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const CharLabel h = springer_character(d, c, s);
    special[c] = std::find(specials.begin(), specials.end(), h) != specials.end();
  }
  std::vector<std::vector<std::size_t>> pieces;
  for (std::size_t top = d.classes.size(); top-- > 0;) {
    if (!special[top]) continue;
    std::vector<std::size_t> piece{top};
    for (std::size_t c = 0; c < d.classes.size(); ++c) {
      if (special[c] || !order.leq(c, top)) continue;
      bool lower = false;
      for (std::size_t sp = 0; sp < d.classes.size(); ++sp)
        if (special[sp] && sp != top && order.leq(sp, top) && order.leq(c, sp)) lower = true;
      if (!lower) piece.push_back(c);
    }
    std::sort(piece.begin(), piece.end());
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

SmoothnessCertificate rational_smoothness(const GreenSystem& sys, const std::vector<std::size_t>& piece,
                                          const SpringerSet& s) {
  SmoothnessCertificate cert;
  if (piece.empty()) return cert;
  const LSDatum& d = sys.datum;
  cert.top_class = *std::max_element(piece.begin(), piece.end());
  const CharLabel chi = springer_character(d, cert.top_class, s);
  const RatFunc expected_on_springer = RatFunc::q_power(d.a[cert.top_class]);
  for (std::size_t c : piece)
    for (CharLabel l : d.classes[c]) {
      const RatFunc expected = s.contains(l) ? expected_on_springer : RatFunc(0);
      SmoothnessEntry e{chi, l, sys.p(chi, l), expected, true};
      e.ok = e.value == e.expected;
      cert.smooth = cert.smooth && e.ok;
      cert.entries.push_back(std::move(e));
    }
  return cert;
}

SmoothnessCertificate full_variety_smoothness(const GreenSystem& sys, const SpringerSet& s) {
  std::vector<std::size_t> all(sys.datum.classes.size());
  for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
  SmoothnessCertificate cert = rational_smoothness(sys, all, s);
  const std::size_t top = sys.datum.class_of(CharLabel::chi(0));
  if (cert.top_class != top) cert.smooth = false;
  return cert;
}

}  // namespace dgreen
