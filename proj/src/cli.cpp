#include "dgreen/cli.hpp"

#include "dgreen/errors.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace dgreen {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ParseError("config: " + key + " must be true or false, got '" + v + "'");
}

long long parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long long x = std::stoll(v, &pos);
    if (pos == v.size() && x >= 0) return x;
  } catch (const std::exception&) {
  }
  throw ParseError(key + " must be a nonnegative integer, got '" + v + "'");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(trim(tok));
  return out;
}

std::string join_commas(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

struct Context {
  CliConfig cfg;
  std::ostream& out;
  std::ostream& err;

  SearchOptions search_options() const {
    SearchOptions o;
    o.max_candidates = cfg.max_candidates;
    o.max_m = cfg.max_m;
    o.family_filter = !cfg.no_family_filter;
    return o;
  }
  int m() const {
    if (!cfg.m) throw ParseError("M is required (positional argument or 'm' in the config file)");
    return *cfg.m;
  }
  SpringerSet springer() const {
    if (cfg.springer_set.empty()) throw ParseError("--springer SET is required");
    return SpringerSet::parse(m(), join_commas(cfg.springer_set));
  }
};

int cmd_irr(Context& cx) {
  const int m = cx.m();
  irreps(m);  // validates m
  switch (cx.cfg.output_format) {
    case Format::Json: cx.out << dump(irr_to_json(m)); break;
    case Format::Tsv: cx.out << tsv_irr(m); break;
    case Format::Latex: cx.out << latex_irr(m); break;
  }
  return kExitOk;
}

int cmd_omega(Context& cx, const std::string& method) {
  const int m = cx.m();
  if (method != "sum" && method != "closed" && method != "both")
    throw ParseError("--method must be sum, closed or both");
  const OmegaMatrix om = omega(m, method == "sum" ? OmegaMethod::Sum : OmegaMethod::Closed);
  bool agree = true;
  if (method == "both") agree = omega(m, OmegaMethod::Sum).entries == om.entries;
  switch (cx.cfg.output_format) {
    case Format::Json: {
      Json j = to_json(om);
      j["method"] = method;
      if (method == "both") j["methods_agree"] = agree;
      cx.out << dump(j);
      break;
    }
    case Format::Tsv: cx.out << tsv_matrix(om.labels, om.entries); break;
    case Format::Latex: cx.out << latex_matrix(m, om.labels, om.entries); break;
  }
  if (method == "both")
    cx.err << (agree ? "sum and closed forms agree\n" : "sum and closed forms DISAGREE\n");
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_solve(Context& cx, const std::string& file) {
  const int m = cx.m();
  std::ifstream in(file);
  if (!in) throw ParseError("cannot read datum file " + file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(file + ": " + e.what());
  }
  const LSDatum d = datum_from_json(j.contains("datum") ? j.at("datum") : j);
  if (d.m != m) throw ParseError("datum file is for m=" + std::to_string(d.m) + ", not " + std::to_string(m));
  const GreenSystem sys = solve(omega(m, OmegaMethod::Closed), d, SolveOptions{true});
  switch (cx.cfg.output_format) {
    case Format::Json: cx.out << dump(to_json(sys)); break;
    case Format::Tsv: cx.out << "# P\n" << tsv_matrix(sys.labels, sys.P) << "# Lambda\n" << tsv_matrix(sys.labels, sys.Lambda); break;
    case Format::Latex:
      cx.out << "% P\n" << latex_matrix(m, sys.labels, sys.P) << "% Lambda\n" << latex_matrix(m, sys.labels, sys.Lambda);
      break;
  }
  return kExitOk;
}

void latex_correspondence(std::ostream& out, const Correspondence& c, const SpringerSet& s) {
  out << latex_correspondence_table(c.datum(), s) << latex_closure(c.datum(), c.closure, s);
}

int cmd_search(Context& cx) {
  const SpringerSet s = cx.springer();
  const SearchResult res = search(s, cx.search_options());
  switch (cx.cfg.output_format) {
    case Format::Json: cx.out << dump(to_json(res, cx.cfg.emit_certificates).at("correspondences")); break;
    case Format::Tsv: cx.out << tsv_search(res); break;
    case Format::Latex:
      for (const auto& c : res.accepted) latex_correspondence(cx.out, c, s);
      break;
  }
  cx.err << res.accepted.size() << " correspondence(s) from " << res.candidates << " candidates"
         << (res.family_filter ? "" : " (family filter off)") << "\n";
  return kExitOk;
}

int cmd_maximal(Context& cx) {
  const SpringerSet s = cx.springer();
  const MaximalResult mx = maximal(s, cx.search_options());
  switch (cx.cfg.output_format) {
    case Format::Json: cx.out << dump(to_json(mx, s, cx.cfg.emit_certificates)); break;
    case Format::Tsv: cx.out << tsv_datum(mx.correspondence.datum()); break;
    case Format::Latex: latex_correspondence(cx.out, mx.correspondence, s); break;
  }
  if (!mx.recursion_dominant)
    cx.err << "maximal: recursion f=" << mx.recursion_f.to_string() << " is not dominant; returned f=" << mx.f.to_string()
           << "\n";
  if (!mx.in_search || !mx.dominates_all) {
    cx.err << "maximal: f=" << mx.f.to_string() << (mx.in_search ? "" : " not found by search")
           << (mx.dominates_all ? "" : " does not dominate every correspondence") << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_spref(Context& cx) {
  const int m = cx.m();
  const SprefResult sp = s_pref(m);
  bool ok = true;
  Json j{{"spref", to_json(sp)}};
  if (m >= 3) {
    const DFormulaCheck fc = d_sequence_formula_check(m);
    const SprefInductionCheck ic = verify_spref_via_induction(m);
    Json ids = Json::array();
    bool ids_ok = true;
    for (const auto& id : induction_identities(m)) {
      ids.push_back(Json{{"d", id.d},
                         {"primed", id.primed},
                         {"phi", to_json(id.phi)},
                         {"j", to_json(id.got)},
                         {"expected", to_json(id.expected)},
                         {"ok", id.ok}});
      ids_ok = ids_ok && id.ok;
    }
    j["d_formula"] = to_json(fc);
    j["induction"] = to_json(ic);
    j["identities"] = ids;
    ok = fc.ok && ic.ok && ids_ok;
    if (!fc.ok) cx.err << "d-sequence formula: " << fc.detail << "\n";
  }
  switch (cx.cfg.output_format) {
    case Format::Json: cx.out << dump(j); break;
    case Format::Tsv:
      cx.out << "label\n";
      for (CharLabel l : sp.labels) cx.out << l.to_string() << "\n";
      break;
    case Format::Latex: {
      cx.out << "\\mathcal{S}_{\\mathrm{pref}} = \\{";
      for (std::size_t i = 0; i < sp.labels.size(); ++i) cx.out << (i ? ", " : "") << latex_label(m, sp.labels[i]);
      cx.out << "\\}\n";
      break;
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_atlas(Context& cx, const std::string& name) {
  const std::vector<std::string> names = name.empty() ? atlas_names() : std::vector<std::string>{name};
  Json reports = Json::array();
  bool ok = true;
  std::string tsv = "name\tm\tstatus\tclosure\tdiff\n";
  std::string latex;
  for (const auto& n : names) {
    const AtlasFixture f = load_fixture(n);
    const AtlasReport r = atlas_check(f);
    ok = ok && r.ok;
    reports.push_back(to_json(f, r));
    std::string diff;
    for (const auto& d : r.diff) diff += (diff.empty() ? "" : "; ") + d;
    tsv += f.name + "\t" + std::to_string(f.m) + "\t" + (r.ok ? "ok" : "FAIL") + "\t" + r.closure + "\t" + diff + "\n";
    std::vector<CharLabel> labels;
    for (const auto& t : f.springer) labels.push_back(CharLabel::parse(t, f.m));
    latex += "% " + f.name + "\n" + latex_correspondence_table(r.datum, SpringerSet::make(f.m, labels));
    if (!r.ok) cx.err << f.name << ": " << diff << "\n";
  }
  switch (cx.cfg.output_format) {
    case Format::Json: cx.out << dump(name.empty() ? reports : reports.at(0)); break;
    case Format::Tsv: cx.out << tsv; break;
    case Format::Latex: cx.out << latex; break;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(Context& cx) {
  VerifyOptions vo;
  vo.search = cx.search_options();
  vo.max_search_m = cx.cfg.max_m;
  const VerifyReport r = verify(cx.m(), vo);
  switch (cx.cfg.output_format) {
    case Format::Json: cx.out << dump(to_json(r)); break;
    case Format::Tsv:
    case Format::Latex: cx.out << tsv_verify(r); break;
  }
  for (const auto& c : r.checks)
    for (const auto& f : c.failures) cx.err << c.name << ": " << f << "\n";
  return r.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

void load_config_text(const std::string& text, CliConfig& cfg) {
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "m") cfg.m = static_cast<int>(parse_int(key, value));
    else if (key == "springer") cfg.springer_set = split_commas(value);
    else if (key == "format") cfg.output_format = parse_format(value);
    else if (key == "max_candidates") cfg.max_candidates = static_cast<std::size_t>(parse_int(key, value));
    else if (key == "max_m") cfg.max_m = static_cast<int>(parse_int(key, value));
    else if (key == "no_family_filter") cfg.no_family_filter = parse_bool(key, value);
    else if (key == "certificates") cfg.emit_certificates = parse_bool(key, value);
    else throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

void load_config(const std::string& path, CliConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  load_config_text(buf.str(), cfg);
}

void apply_environment(CliConfig& cfg) {
  if (const char* v = std::getenv("DGREEN_MAX_CANDIDATES"); v && *v)
    cfg.max_candidates = static_cast<std::size_t>(parse_int("DGREEN_MAX_CANDIDATES", v));
  if (const char* v = std::getenv("DGREEN_MAX_M"); v && *v) cfg.max_m = static_cast<int>(parse_int("DGREEN_MAX_M", v));
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Green functions and Springer correspondences for dihedral groups I2(m)", "dgreen"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format, config, springer, datum_file, method = "closed", atlas_name;
  std::optional<std::size_t> max_candidates;
  std::optional<int> max_m, m;
  bool certificates = false, no_family_filter = false;
  app.add_option("--format", format, "Output format: json, tsv or latex");
  app.add_option("--max-candidates", max_candidates, "Bound on candidate data per search");
  app.add_option("--max-m", max_m, "Largest m accepted by search");
  app.add_option("--config", config, "key = value configuration file");
  app.add_flag("--certificates", certificates, "Include smoothness certificates");
  app.add_flag("--no-family-filter", no_family_filter, "Skip the family condition in search");

  auto with_m = [&](CLI::App* sub) { sub->add_option("M", m, "Dihedral parameter m"); };
  CLI::App* irr = app.add_subcommand("irr", "Characters, b-invariants and fake degrees");
  with_m(irr);
  CLI::App* om = app.add_subcommand("omega", "The matrix Omega");
  with_m(om);
  om->add_option("--method", method, "sum, closed or both");
  CLI::App* sol = app.add_subcommand("solve", "Solve P Lambda P^t = Omega for a datum");
  with_m(sol);
  sol->add_option("--datum", datum_file, "Datum JSON file")->required();
  CLI::App* srch = app.add_subcommand("search", "All Springer correspondences for a set");
  with_m(srch);
  srch->add_option("--springer", springer, "Springer set, e.g. 0,1,r',eps or all");
  CLI::App* mx = app.add_subcommand("maximal", "The maximal correspondence for a set");
  with_m(mx);
  mx->add_option("--springer", springer, "Springer set, e.g. 0,1,r',eps or all");
  CLI::App* sp = app.add_subcommand("spref", "The preferred Springer set and its checks");
  with_m(sp);
  CLI::App* at = app.add_subcommand("atlas", "Check the fixture atlas");
  at->add_option("NAME", atlas_name, "Fixture name (all when omitted)");
  CLI::App* ver = app.add_subcommand("verify", "Run every invariant suite for one m");
  with_m(ver);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  Context cx{CliConfig{}, out, err};
  try {
    if (!config.empty()) load_config(config, cx.cfg);
    apply_environment(cx.cfg);
    if (!format.empty()) cx.cfg.output_format = parse_format(format);
    if (max_candidates) cx.cfg.max_candidates = *max_candidates;
    if (max_m) cx.cfg.max_m = *max_m;
    if (certificates) cx.cfg.emit_certificates = true;
    if (no_family_filter) cx.cfg.no_family_filter = true;
    if (m) cx.cfg.m = *m;
    if (!springer.empty()) cx.cfg.springer_set = split_commas(springer);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (irr->parsed()) return cmd_irr(cx);
    if (om->parsed()) return cmd_omega(cx, method);
    if (sol->parsed()) return cmd_solve(cx, datum_file);
    if (srch->parsed()) return cmd_search(cx);
    if (mx->parsed()) return cmd_maximal(cx);
    if (sp->parsed()) return cmd_spref(cx);
    if (at->parsed()) return cmd_atlas(cx, atlas_name);
    if (ver->parsed()) return cmd_verify(cx);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidM& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidLabel& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidSpringerSet& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidDatum& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace dgreen
