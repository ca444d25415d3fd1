#include "dgreen/render.hpp"

#include "dgreen/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dgreen {

namespace {

std::vector<CharLabel> labels_from_json(const Json& j, int m) {
  std::vector<CharLabel> out;
  for (const auto& x : j) out.push_back(label_from_json(x, m));
  return out;
}

Json labels_to_json(const std::vector<CharLabel>& ls) {
  Json j = Json::array();
  for (CharLabel l : ls) j.push_back(to_json(l));
  return j;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::string latex_int_poly(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (neg) s += "-";
    else if (!s.empty()) s += "+";
    if (e == 0 || mag != 1) s += mag.str();
    if (e == 1) s += "q";
    else if (e > 1) s += "q^{" + std::to_string(e) + "}";
  }
  return s;
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "tsv") return Format::Tsv;
  if (text == "latex") return Format::Latex;
  throw ParseError("unknown format '" + text + "' (json, tsv, latex)");
}

std::string format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Tsv: return "tsv";
    case Format::Latex: return "latex";
  }
  return "json";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const IntPoly& p) { return p.to_string(); }

IntPoly int_poly_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("polynomial must be a string, got " + j.dump());
  return IntPoly::parse(j.get<std::string>());
}

Json to_json(const RatFunc& f) { return f.to_string(); }

RatFunc rat_func_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational function must be a string, got " + j.dump());
  return RatFunc::parse(j.get<std::string>());
}

Json to_json(CharLabel l) { return l.to_string(); }

CharLabel label_from_json(const Json& j, int m) {
  if (!j.is_string()) throw ParseError("label must be a string, got " + j.dump());
  return CharLabel::parse(j.get<std::string>(), m);
}

Json to_json(const LSDatum& d) {
  Json classes = Json::array();
  for (const auto& c : d.classes) classes.push_back(labels_to_json(c));
  return Json{{"m", d.m}, {"classes", classes}, {"a", d.a}};
}

LSDatum datum_from_json(const Json& j) {
  return guarded("datum", [&] {
    LSDatum d;
    d.m = j.at("m").get<int>();
    for (const auto& c : j.at("classes")) d.classes.push_back(labels_from_json(c, d.m));
    d.a = j.at("a").get<std::vector<int>>();
    return d;
  });
}

Json matrix_to_json(const std::vector<CharLabel>& rows, const std::vector<CharLabel>& cols, const PolyMatrix& a) {
  Json j = Json::object();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (!a(i, k).is_zero()) j[rows[i].to_string()][cols[k].to_string()] = to_json(a(i, k));
  return j;
}

PolyMatrix matrix_from_json(const Json& j, const std::vector<CharLabel>& rows, const std::vector<CharLabel>& cols,
                            int m) {
  if (!j.is_object()) throw ParseError("matrix must be an object of rows");
  PolyMatrix a(rows.size(), cols.size());
  for (const auto& [rk, row] : j.items()) {
    const auto ri = std::find(rows.begin(), rows.end(), CharLabel::parse(rk, m));
    if (ri == rows.end()) throw ParseError("matrix row " + rk + " out of range");
    if (!row.is_object()) throw ParseError("matrix row " + rk + " must be an object");
    for (const auto& [ck, v] : row.items()) {
      const auto ci = std::find(cols.begin(), cols.end(), CharLabel::parse(ck, m));
      if (ci == cols.end()) throw ParseError("matrix column " + ck + " out of range");
      a(ri - rows.begin(), ci - cols.begin()) = rat_func_from_json(v);
    }
  }
  return a;
}

Json to_json(const OmegaMatrix& om) {
  return Json{{"m", om.m},
              {"nstar", om.nstar},
              {"labels", labels_to_json(om.labels)},
              {"entries", matrix_to_json(om.labels, om.labels, om.entries)}};
}

OmegaMatrix omega_from_json(const Json& j) {
  return guarded("omega", [&] {
    OmegaMatrix om;
    om.m = j.at("m").get<int>();
    om.nstar = j.at("nstar").get<int>();
    om.labels = labels_from_json(j.at("labels"), om.m);
    om.entries = matrix_from_json(j.at("entries"), om.labels, om.labels, om.m);
    return om;
  });
}

Json to_json(const GreenSystem& sys) {
  Json y = Json::array();
  for (std::size_t c = 0; c < sys.Y.size(); ++c)
    y.push_back(matrix_to_json(sys.datum.classes[c], sys.datum.classes[c], sys.Y[c]));
  Json ypol = Json::array();
  for (bool b : sys.y_polynomial) ypol.push_back(b);
  return Json{{"datum", to_json(sys.datum)},
              {"labels", labels_to_json(sys.labels)},
              {"P", matrix_to_json(sys.labels, sys.labels, sys.P)},
              {"Lambda", matrix_to_json(sys.labels, sys.labels, sys.Lambda)},
              {"Y", y},
              {"y_polynomial", ypol}};
}

GreenSystem system_from_json(const Json& j) {
  return guarded("system", [&] {
    GreenSystem sys;
    sys.datum = datum_from_json(j.at("datum"));
    const int m = sys.datum.m;
    sys.labels = labels_from_json(j.at("labels"), m);
    sys.P = matrix_from_json(j.at("P"), sys.labels, sys.labels, m);
    sys.Lambda = matrix_from_json(j.at("Lambda"), sys.labels, sys.labels, m);
    const Json& y = j.at("Y");
    if (y.size() > sys.datum.classes.size()) throw ParseError("more Y blocks than classes");
    for (std::size_t c = 0; c < y.size(); ++c)
      sys.Y.push_back(matrix_from_json(y[c], sys.datum.classes[c], sys.datum.classes[c], m));
    sys.y_polynomial = j.at("y_polynomial").get<std::vector<bool>>();
    return sys;
  });
}

Json to_json(const SpringerSet& s) {
  return Json{{"m", s.m}, {"labels", labels_to_json(s.labels)}, {"relabelled_r", s.relabelled_r}};
}

Json to_json(const ClosureOrder& order, const LSDatum& d, const SpringerSet& s) {
  Json hasse = Json::array();
  for (auto [lo, hi] : order.hasse())
    hasse.push_back(Json::array({to_json(springer_character(d, lo, s)), to_json(springer_character(d, hi, s))}));
  return Json{{"diagram", closure_diagram(d, order, s)}, {"hasse", hasse}};
}

Json to_json(const ConditionReport& r) {
  Json j = Json::array();
  for (std::size_t i = 0; i < r.conditions.size(); ++i)
    j.push_back(Json{{"condition", i + 1}, {"pass", r.conditions[i].pass}, {"witness", r.conditions[i].witness}});
  return j;
}

Json to_json(const SmoothnessCertificate& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries)
    entries.push_back(Json{{"row", to_json(e.row)},
                           {"col", to_json(e.col)},
                           {"value", to_json(e.value)},
                           {"expected", to_json(e.expected)},
                           {"ok", e.ok}});
  return Json{{"smooth", c.smooth}, {"top_class", c.top_class}, {"entries", entries}};
}

Json to_json(const Correspondence& c, const SpringerSet& s, bool certificates) {
  const LSDatum& d = c.datum();
  Json springer = Json::array();
  for (std::size_t k = 0; k < d.classes.size(); ++k) springer.push_back(to_json(springer_character(d, k, s)));
  Json j{{"system", to_json(c.system)},
         {"springer", springer},
         {"conditions", to_json(c.report)},
         {"closure", to_json(c.closure, d, s)}};
  if (certificates) {
    Json pieces = Json::array();
    for (const auto& piece : special_pieces(c.system, c.closure, s))
      pieces.push_back(Json{{"classes", piece}, {"certificate", to_json(rational_smoothness(c.system, piece, s))}});
    j["certificates"] = Json{{"special_pieces", pieces},
                             {"full_variety", to_json(full_variety_smoothness(c.system, s))}};
  }
  return j;
}

Json to_json(const SearchResult& r, bool certificates) {
  Json acc = Json::array();
  for (const auto& c : r.accepted) acc.push_back(to_json(c, r.set, certificates));
  return Json{{"set", to_json(r.set)},
              {"family_filter", r.family_filter},
              {"candidates", r.candidates},
              {"tie_pairs", r.tie_pairs},
              {"correspondences", acc}};
}

Json to_json(const MaximalResult& r, const SpringerSet& s, bool certificates) {
  return Json{{"f", r.f.f},
              {"recursion_f", r.recursion_f.f},
              {"recursion_dominant", r.recursion_dominant},
              {"in_search", r.in_search},
              {"dominates_all", r.dominates_all},
              {"correspondence", to_json(r.correspondence, s, certificates)}};
}

Json to_json(const SprefResult& r) {
  return Json{{"m", r.m}, {"labels", labels_to_json(r.labels)}, {"out_of_range", r.out_of_range}, {"notes", r.notes}};
}

Json to_json(const DFormulaCheck& c) {
  Json terms = Json::object();
  for (auto [k, v] : c.formula_terms) terms[std::to_string(k)] = v;
  return Json{{"m", c.m},
              {"ok", c.ok},
              {"formula_N", c.formula_N},
              {"formula_dN", c.formula_dN},
              {"formula_terms", terms},
              {"d", c.actual},
              {"detail", c.detail}};
}

Json to_json(const SprefInductionCheck& c) {
  return Json{{"ok", c.ok}, {"induced", labels_to_json(c.induced)}, {"expected", labels_to_json(c.expected)}};
}

Json to_json(const AtlasFixture& f, const AtlasReport& r) {
  return Json{{"name", f.name},
              {"m", f.m},
              {"ok", r.ok},
              {"diff", r.diff},
              {"closure", r.closure},
              {"expected_closure", f.expected_closure},
              {"datum", to_json(r.datum)},
              {"provenance", f.provenance}};
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        Json{{"name", c.name}, {"passed", c.passed}, {"total", c.total}, {"ok", c.ok()}, {"failures", c.failures}});
  return Json{{"m", r.m}, {"ok", r.ok()}, {"checks", checks}};
}

Json irr_to_json(int m) {
  Json j = Json::array();
  for (const IrrChar& ch : irreps(m))
    j.push_back(Json{{"label", to_json(ch.label)},
                     {"degree", ch.degree},
                     {"b", ch.b},
                     {"fake_degree", to_json(fake_degree(m, ch.label))}});
  return j;
}

std::string tsv_matrix(const std::vector<CharLabel>& labels, const PolyMatrix& a) {
  std::string s = "row\tcol\tvalue\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (!a(i, k).is_zero()) s += labels[i].to_string() + "\t" + labels[k].to_string() + "\t" + a(i, k).to_string() + "\n";
  return s;
}

std::string tsv_irr(int m) {
  std::string s = "label\tdegree\tb\tfake_degree\n";
  for (const IrrChar& ch : irreps(m))
    s += ch.label.to_string() + "\t" + std::to_string(ch.degree) + "\t" + std::to_string(ch.b) + "\t" +
         fake_degree(m, ch.label).to_string() + "\n";
  return s;
}

std::string tsv_datum(const LSDatum& d) {
  std::string s = "class\ta\tlabels\n";
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    s += std::to_string(c) + "\t" + std::to_string(d.a[c]) + "\t";
    for (std::size_t i = 0; i < d.classes[c].size(); ++i) s += (i ? "," : "") + d.classes[c][i].to_string();
    s += "\n";
  }
  return s;
}

std::string tsv_search(const SearchResult& r) {
  std::string s = "correspondence\tclass\ta\tspringer\tlabels\tdiagram\n";
  for (std::size_t k = 0; k < r.accepted.size(); ++k) {
    const auto& c = r.accepted[k];
    const LSDatum& d = c.datum();
    const std::string diagram = closure_diagram(d, c.closure, r.set);
    for (std::size_t i = 0; i < d.classes.size(); ++i) {
      s += std::to_string(k) + "\t" + std::to_string(i) + "\t" + std::to_string(d.a[i]) + "\t" +
           springer_character(d, i, r.set).to_string() + "\t";
      for (std::size_t j = 0; j < d.classes[i].size(); ++j) s += (j ? "," : "") + d.classes[i][j].to_string();
      s += "\t" + diagram + "\n";
    }
  }
  return s;
}

std::string tsv_verify(const VerifyReport& r) {
  std::string s = "check\tpassed\ttotal\tstatus\n";
  for (const auto& c : r.checks)
    s += c.name + "\t" + std::to_string(c.passed) + "\t" + std::to_string(c.total) + "\t" + (c.ok() ? "ok" : "FAIL") +
         "\n";
  return s;
}

std::string latex_label(int m, CharLabel l) {
  switch (l.kind) {
    case CharLabel::Kind::Chi: return "\\chi_{" + std::to_string(l.index) + "}";
    case CharLabel::Kind::ChiR: return "\\chi_{" + std::to_string(m / 2) + "}";
    case CharLabel::Kind::ChiRPrime: return "\\chi'_{" + std::to_string(m / 2) + "}";
    case CharLabel::Kind::Eps: return "\\epsilon";
  }
  return "";
}

std::string latex_poly(const RatFunc& f) {
  if (f.is_polynomial()) return latex_int_poly(f.num());
  return "\\frac{" + latex_int_poly(f.num()) + "}{" + latex_int_poly(f.den()) + "}";
}

std::string latex_matrix(int m, const std::vector<CharLabel>& labels, const PolyMatrix& a) {
  std::string s = "\\[\n\\begin{array}{c|" + std::string(labels.size(), 'c') + "}\n";
  for (CharLabel l : labels) s += " & " + latex_label(m, l);
  s += " \\\\ \\hline\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    s += latex_label(m, labels[i]);
    for (std::size_t k = 0; k < labels.size(); ++k) s += " & " + latex_poly(a(i, k));
    s += " \\\\\n";
  }
  return s + "\\end{array}\n\\]\n";
}

std::string latex_correspondence_table(const LSDatum& d, const SpringerSet& s) {
  std::string out = "\\[\n\\begin{array}[t]{c|c}\n\\text{\\it class} & \\text{\\it reps.} \\\\ \\hline\n";
  for (std::size_t c = d.classes.size(); c-- > 0;) {
    out += "\\mathcal{C}_{" + latex_label(d.m, springer_character(d, c, s)) + "} & ";
    for (std::size_t i = 0; i < d.classes[c].size(); ++i) out += (i ? ";\\ " : "") + latex_label(d.m, d.classes[c][i]);
    out += " \\\\\n";
  }
  return out + "\\end{array}\n\\]\n";
}

std::string latex_closure(const LSDatum& d, const ClosureOrder& order, const SpringerSet& s) {
  const std::size_t k = d.classes.size();
  const auto edges = order.hasse();
  // rank = longest chain below; classes are listed bottom first so one pass suffices
  std::vector<int> rank(k, 0);
  for (std::size_t c = 0; c < k; ++c)
    for (auto [lo, hi] : edges)
      if (hi == c) rank[c] = std::max(rank[c], rank[lo] + 1);
  const int top = k ? *std::max_element(rank.begin(), rank.end()) : 0;
  std::vector<std::vector<std::size_t>> layers(top + 1);
  for (std::size_t c = 0; c < k; ++c) layers[top - rank[c]].push_back(c);
  std::size_t width = 1;
  for (const auto& l : layers) width = std::max(width, l.size());

  std::vector<int> row(k), col(k);
  for (std::size_t r = 0; r < layers.size(); ++r)
    for (std::size_t i = 0; i < layers[r].size(); ++i) {
      row[layers[r][i]] = static_cast<int>(r);
      col[layers[r][i]] = static_cast<int>(width - layers[r].size() + 2 * i);
    }

  std::string out = "\\xymatrix@=5pt{\n";
  for (std::size_t r = 0; r < layers.size(); ++r) {
    std::map<int, std::string> cells;
    for (std::size_t c : layers[r]) {
      std::string cell = "\\mathcal{C}_{" + latex_label(d.m, springer_character(d, c, s)) + "}";
      for (auto [lo, hi] : edges) {
        if (hi != c) continue;
        const int dc = col[lo] - col[c];
        cell += " \\ar@{-}[" + std::string(row[lo] - row[c], 'd') + std::string(std::abs(dc), dc < 0 ? 'l' : 'r') + "]";
      }
      cells[col[c]] = cell;
    }
    std::string line;
    for (int cidx = 0; cidx < static_cast<int>(2 * width - 1); ++cidx) {
      if (cidx) line += " & ";
      if (auto it = cells.find(cidx); it != cells.end()) line += it->second;
    }
    while (line.size() >= 3 && line.compare(line.size() - 3, 3, " & ") == 0) line.resize(line.size() - 3);
    out += line + (r + 1 < layers.size() ? " \\\\\n" : "\n");
  }
  return out + "}\n";
}

std::string latex_irr(int m) {
  std::string s = "\\[\n\\begin{array}{c|ccc}\n\\chi & \\chi(1) & b_\\chi & R(\\chi) \\\\ \\hline\n";
  for (const IrrChar& ch : irreps(m))
    s += latex_label(m, ch.label) + " & " + std::to_string(ch.degree) + " & " + std::to_string(ch.b) + " & " +
         latex_poly(RatFunc(fake_degree(m, ch.label))) + " \\\\\n";
  return s + "\\end{array}\n\\]\n";
}

}  // namespace dgreen
