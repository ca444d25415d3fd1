#include "doctest.h"

#include "dgreen/cli.hpp"
#include "dgreen/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dgreen;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("dgreen_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("search prints every correspondence") {
  const Run r = run({"search", "6", "--springer", "0,1,2,r',eps"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  for (const auto& c : j) CHECK(c.at("closure").at("diagram") == "right");
}

TEST_CASE("exit codes") {
  CHECK(run({"atlas", "G2"}).code == kExitOk);
  const Run om = run({"omega", "3", "--method", "both"});
  CHECK(om.code == kExitOk);
  CHECK(Json::parse(om.out).at("methods_agree") == true);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"search", "5", "--springer", "0,1,bogus"}).code == kExitUsage);
  CHECK(run({"irr", "1"}).code == kExitUsage);
  CHECK(run({"omega", "4", "--method", "fast"}).code == kExitUsage);
  CHECK(run({"search", "5"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--format", "yaml", "irr", "4"}).code == kExitUsage);
  CHECK(run({"maximal", "6", "--springer", "0,1,2,r',eps"}).code == kExitOk);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("machine output stays on stdout") {
  const Run r = run({"search", "4", "--springer", "0,1,r',eps"});
  Json parsed;
  CHECK_NOTHROW(parsed = Json::parse(r.out));
  CHECK(r.err.find("correspondence") != std::string::npos);
  const Run bad = run({"irr", "2"});
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("identical invocations give identical bytes") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"search", "8", "--springer", "0,1,r',eps"},
           {"--format", "latex", "maximal", "6", "--springer", "0,1,2,r',eps"},
           {"--format", "tsv", "omega", "5"},
           {"irr", "7"}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("JSON round trips") {
  const OmegaMatrix om = omega(6, OmegaMethod::Sum);
  const OmegaMatrix om2 = omega_from_json(Json::parse(dump(to_json(om))));
  CHECK(om2.m == om.m);
  CHECK(om2.labels == om.labels);
  CHECK(om2.entries == om.entries);

  const SearchResult res = search(SpringerSet::parse(6, "0,1,2,r',eps"));
  for (const auto& c : res.accepted) {
    const Json j = Json::parse(dump(to_json(c.system)));
    const GreenSystem back = system_from_json(j);
    CHECK(back.datum == c.system.datum);
    CHECK(back.labels == c.system.labels);
    CHECK(back.P == c.system.P);
    CHECK(back.Lambda == c.system.Lambda);
    CHECK(back.Y.size() == c.system.Y.size());
    for (std::size_t i = 0; i < back.Y.size(); ++i) CHECK(back.Y[i] == c.system.Y[i]);
    CHECK(back.y_polynomial == c.system.y_polynomial);
    CHECK(datum_from_json(to_json(c.datum())) == c.datum());
  }
  CHECK(rat_func_from_json(to_json(RatFunc::parse("(q^2+1)/(q^3-2)"))) == RatFunc::parse("(q^2+1)/(q^3-2)"));
  CHECK(int_poly_from_json(to_json(IntPoly::parse("-q^7+3"))) == IntPoly::parse("-q^7+3"));
  CHECK(to_json(IntPoly::parse("q^5+q^4")) == "q^5+q^4");
}

TEST_CASE("solve reads a datum file") {
  const auto path = temp_file("b2.json", R"({"m": 4, "classes": [["eps"], ["r'"], ["1", "r"], ["0"]], "a": [4, 2, 1, 0]})");
  const Run r = run({"solve", "4", "--datum", path.string()});
  CHECK(r.code == kExitOk);
  const GreenSystem sys = system_from_json(Json::parse(r.out));
  CHECK(sys.lambda(CharLabel::chi_r_prime(), CharLabel::chi_r_prime()) == RatFunc::parse("q^4-1"));

  // A full system export is accepted as input too.
  const auto again = temp_file("b2sys.json", r.out);
  CHECK(run({"solve", "4", "--datum", again.string()}).out == r.out);

  CHECK(run({"solve", "5", "--datum", path.string()}).code == kExitUsage);
  const auto broken = temp_file("broken.json", R"({"m": 4, "classes": [["eps"], ["0"]], "a": [4, 0]})");
  CHECK(run({"solve", "4", "--datum", broken.string()}).code == kExitUsage);
  CHECK(run({"solve", "4", "--datum", "/nonexistent/datum.json"}).code == kExitUsage);
  std::filesystem::remove(path);
  std::filesystem::remove(again);
  std::filesystem::remove(broken);
}

TEST_CASE("configuration precedence") {
  CliConfig cfg;
  load_config_text("# comment\nm = 6\nspringer = 0,1,2,r',eps\nformat = tsv\nmax_candidates = 50\ncertificates = true\n",
                   cfg);
  CHECK(cfg.m == 6);
  CHECK(cfg.springer_set.size() == 5);
  CHECK(cfg.output_format == Format::Tsv);
  CHECK(cfg.max_candidates == 50);
  CHECK(cfg.emit_certificates);
  CHECK_THROWS_AS(load_config_text("colour = blue\n", cfg), ParseError);
  CHECK_THROWS_AS(load_config_text("max_m = many\n", cfg), ParseError);

  const auto path = temp_file("cfg.txt", "m = 6\nspringer = 0,1,2,r',eps\nmax_candidates = 1\n");
  CHECK(run({"--config", path.string(), "search"}).code == kExitCheckFailed);
  CHECK(run({"--config", path.string(), "--max-candidates", "10", "search"}).code == kExitOk);

  setenv("DGREEN_MAX_CANDIDATES", "5", 1);
  CHECK(run({"--config", path.string(), "search"}).code == kExitOk);
  CHECK(run({"--config", path.string(), "--max-candidates", "1", "search"}).code == kExitCheckFailed);
  unsetenv("DGREEN_MAX_CANDIDATES");
  std::filesystem::remove(path);
}

TEST_CASE("tsv and latex") {
  const Run tsv = run({"--format", "tsv", "omega", "3"});
  CHECK(tsv.out.find('\t') != std::string::npos);
  CHECK(tsv.out.find("q^6") != std::string::npos);

  const Run tex = run({"--format", "latex", "search", "4", "--springer", "all"});
  CHECK(tex.out.find("\\xymatrix") != std::string::npos);
  CHECK(tex.out.find("\\chi'_{2}") != std::string::npos);
  CHECK(latex_label(6, CharLabel::chi(2)) == "\\chi_{2}");
  CHECK(latex_label(6, CharLabel::eps()) == "\\epsilon");

  const Run irr = run({"--format", "tsv", "irr", "4"});
  CHECK(std::count(irr.out.begin(), irr.out.end(), '\n') == 6);
}

TEST_CASE("verify and spref") {
  const Run v = run({"verify", "6"});
  CHECK(v.code == kExitOk);
  const Json j = Json::parse(v.out);
  CHECK(j.at("m") == 6);
  CHECK(run({"spref", "10"}).code == kExitOk);
  // The printed d-sequence formula does not cover chi_3 in S_pref(12).
  CHECK(run({"spref", "12"}).code == kExitCheckFailed);
}
