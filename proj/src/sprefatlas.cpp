#include "dgreen/sprefatlas.hpp"

#include "dgreen/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#ifndef DGREEN_DEFAULT_ATLAS_DIR
#define DGREEN_DEFAULT_ATLAS_DIR "data/atlas"
#endif

namespace dgreen {

namespace {

std::vector<std::pair<int, int>> factorize(int m) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    int e = 0;
    while (m % p == 0) m /= p, ++e;
    out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::set<std::set<CharLabel>> as_partition(const std::vector<std::vector<CharLabel>>& classes) {
  std::set<std::set<CharLabel>> out;
  for (const auto& c : classes) out.emplace(c.begin(), c.end());
  return out;
}

std::string set_text(const std::set<CharLabel>& c) {
  std::string s = "{";
  bool first = true;
  for (CharLabel l : c) s += (first ? "" : ",") + l.to_string(), first = false;
  return s + "}";
}

}  // namespace

bool is_prime_power(int n) { return n >= 2 && factorize(n).size() == 1; }

SprefResult s_pref(int m) {
  if (m < 2) throw InvalidM("s_pref needs m >= 2, got " + std::to_string(m));
  SprefResult out;
  out.m = m;
  if (m == 2) {
    out.labels = char_labels(2);
    return out;
  }
  out.labels = {CharLabel::chi(0), CharLabel::chi(1), CharLabel::eps()};
  const bool even = m % 2 == 0;
  for (int d = 2; d <= m; ++d) {
    if (m % d || !is_prime_power(d)) continue;
    if (even && 2 * d == m) continue;  // replaced by chi_r'
    if (2 * d < m) {
      out.labels.push_back(CharLabel::chi(d));
    } else {
      out.out_of_range.push_back(d);
      out.notes.push_back("prime-power divisor " + std::to_string(d) + " >= m/2 has no chi_" + std::to_string(d) +
                          "; skipped");
    }
  }
  if (even) out.labels.push_back(CharLabel::chi_r_prime());
  std::sort(out.labels.begin(), out.labels.end());
  out.labels.erase(std::unique(out.labels.begin(), out.labels.end()), out.labels.end());
  return out;
}

DFormulaCheck d_sequence_formula_check(int m) {
  if (m < 3) throw InvalidM("d_sequence_formula_check needs m >= 3, got " + std::to_string(m));
  DFormulaCheck out;
  out.m = m;
  out.actual = d_sequence(s_pref(m).springer_set()).d;

  const auto fac = factorize(m);
  const int k = static_cast<int>(fac.size());
  if (k == 1 && fac[0].first == 2) {
    out.formula_N = fac[0].second - 1;
    out.formula_dN = ipow(2, fac[0].second - 2);
  } else {
    int prefix = 0, prod = 1;
    for (int i = 0; i + 1 < k; ++i) {
      const auto [p, n] = fac[i];
      for (int l = 1; l <= n; ++l) out.formula_terms[prefix + l] = prod * ipow(p, l - 1);
      prefix += n;
      prod *= ipow(p, n);
    }
    out.formula_N = prefix + fac[k - 1].second;
    out.formula_dN = prod * ipow(fac[k - 1].first, fac[k - 1].second - 1);
  }
  out.formula_terms[out.formula_N] = out.formula_dN;

  const int actual_N = static_cast<int>(out.actual.size()) - 1;
  std::ostringstream why;
  bool ok = actual_N == out.formula_N;
  if (!ok) why << "N: formula " << out.formula_N << ", S_pref " << actual_N << "; ";
  for (auto [idx, val] : out.formula_terms) {
    if (idx > actual_N) {
      ok = false;
      why << "d_" << idx << ": formula " << val << ", S_pref has no such term; ";
    } else if (out.actual[idx] != val) {
      ok = false;
      why << "d_" << idx << ": formula " << val << ", S_pref " << out.actual[idx] << "; ";
    }
  }
  out.ok = ok;
  out.detail = "S_pref d=" + join(out.actual) + ", formula N=" + std::to_string(out.formula_N) +
               " d_N=" + std::to_string(out.formula_dN);
  if (!ok) out.detail += "; " + why.str().substr(0, why.str().size() - 2);
  return out;
}

std::vector<InductionIdentity> induction_identities(int m) {
  std::vector<InductionIdentity> out;
  for (int d = 2; d < m; ++d) {
    if (m % d) continue;
    for (bool primed : {false, true}) {
      if (primed && (m / d) % 2) continue;
      const ReflSubgroup h = reflection_subgroup(m, d, primed);
      auto add = [&](CharLabel phi, CharLabel expected) {
        InductionIdentity id{d, primed, phi, truncated_induction(m, h, phi), expected, false};
        id.ok = id.got == id.expected;
        out.push_back(id);
      };
      add(CharLabel::chi(0), CharLabel::chi(0));
      if (d == 2) {
        add(CharLabel::chi_r(), CharLabel::chi(1));
        add(CharLabel::chi_r_prime(), CharLabel::chi(1));
      } else {
        add(CharLabel::chi(1), CharLabel::chi(1));
      }
      CharLabel target = CharLabel::chi(d);
      if (2 * d == m) target = primed ? CharLabel::chi_r() : CharLabel::chi_r_prime();
      add(CharLabel::eps(), target);
    }
  }
  return out;
}

SprefInductionCheck verify_spref_via_induction(int m) {
  if (m < 3) throw InvalidM("verify_spref_via_induction needs m >= 3, got " + std::to_string(m));
  std::set<CharLabel> got;
  for (CharLabel l : special_characters(m)) got.insert(l);
  for (int d = 2; d <= m; ++d) {
    if (m % d || !(is_prime_power(d) || 2 * d == m)) continue;
    const ReflSubgroup h = reflection_subgroup(m, d, false);
    std::vector<CharLabel> phis = {CharLabel::chi(0), CharLabel::eps()};
    if (d == 2) {
      phis.push_back(CharLabel::chi_r());
      phis.push_back(CharLabel::chi_r_prime());
    } else {
      phis.push_back(CharLabel::chi(1));
    }
    for (CharLabel phi : phis) got.insert(truncated_induction(m, h, phi));
  }
  SprefInductionCheck out;
  out.induced.assign(got.begin(), got.end());
  out.expected = s_pref(m).labels;
  out.ok = out.induced == out.expected;
  return out;
}

ExampleCheck check_2p_example(int p) {
  if (p < 3 || p % 2 == 0 || factorize(p) != std::vector<std::pair<int, int>>{{p, 1}})
    throw InvalidM("check_2p_example needs an odd prime, got " + std::to_string(p));
  const int m = 2 * p;
  ExampleCheck out;
  out.expected.m = m;
  std::vector<CharLabel> middle;
  for (int i = 2; i < p; ++i) middle.push_back(CharLabel::chi(i));
  out.expected.classes = {{CharLabel::eps()},
                          {CharLabel::chi_r_prime()},
                          middle,
                          {CharLabel::chi(1), CharLabel::chi_r()},
                          {CharLabel::chi(0)}};
  out.got = maximal(s_pref(m).springer_set()).correspondence.datum();
  out.ok = out.got.classes == out.expected.classes;
  return out;
}

std::string atlas_dir() {
  if (const char* env = std::getenv("DGREEN_ATLAS_DIR"); env && *env) return env;
  return DGREEN_DEFAULT_ATLAS_DIR;
}

std::vector<std::string> atlas_names() {
  namespace fs = std::filesystem;
  std::vector<std::string> names;
  const fs::path dir(atlas_dir());
  if (!fs::is_directory(dir)) throw ParseError("atlas directory " + dir.string() + " not found");
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

AtlasFixture parse_fixture(const std::string& json_text) {
  AtlasFixture f;
  try {
    const auto j = nlohmann::json::parse(json_text);
    f.version = j.value("version", 1);
    if (f.version != 1) throw ParseError("unsupported fixture version " + std::to_string(f.version));
    f.name = j.at("name").get<std::string>();
    f.m = j.at("m").get<int>();
    f.springer = j.at("springer").get<std::vector<std::string>>();
    f.expected_classes = j.at("expected_classes").get<std::vector<std::vector<std::string>>>();
    f.expected_closure = j.at("expected_closure").get<std::string>();
    f.provenance = j.value("provenance", "");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fixture: ") + e.what());
  }

  // expected_classes must partition Irr(I2(m))
  std::vector<CharLabel> seen;
  for (const auto& c : f.expected_classes)
    for (const auto& t : c) seen.push_back(CharLabel::parse(t, f.m));
  std::sort(seen.begin(), seen.end());
  if (seen != char_labels(f.m)) throw ParseError("fixture " + f.name + ": expected_classes do not partition Irr");
  return f;
}

AtlasFixture load_fixture(const std::string& name) {
  const std::filesystem::path path = std::filesystem::path(atlas_dir()) / (name + ".json");
  std::ifstream in(path);
  if (!in) throw ParseError("no atlas fixture " + name + " (looked for " + path.string() + ")");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

AtlasReport atlas_check(const AtlasFixture& fixture) {
  std::vector<CharLabel> labels;
  for (const auto& t : fixture.springer) labels.push_back(CharLabel::parse(t, fixture.m));
  const SpringerSet s = SpringerSet::make(fixture.m, labels);

  AtlasReport out;
  const SearchResult res = search(s);
  if (res.accepted.empty()) {
    out.diff.push_back("search found no correspondence for " + s.to_string());
    return out;
  }
  const Correspondence corr = res.accepted.size() == 1 ? res.accepted.front() : maximal(s).correspondence;
  out.datum = corr.datum();
  out.closure = closure_diagram(out.datum, corr.closure, s);

  std::vector<std::vector<CharLabel>> expected;
  for (const auto& c : fixture.expected_classes) {
    expected.emplace_back();
    for (const auto& t : c) expected.back().push_back(CharLabel::parse(t, fixture.m));
  }
  const auto want = as_partition(expected);
  const auto have = as_partition(out.datum.classes);
  for (const auto& c : want)
    if (!have.count(c)) out.diff.push_back("missing class " + set_text(c));
  for (const auto& c : have)
    if (!want.count(c)) out.diff.push_back("unexpected class " + set_text(c));
  if (out.closure != fixture.expected_closure)
    out.diff.push_back("closure " + out.closure + ", expected " + fixture.expected_closure);
  out.ok = out.diff.empty();
  return out;
}

}  // namespace dgreen
