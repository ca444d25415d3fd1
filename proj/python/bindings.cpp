#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dgreen/cli.hpp"
#include "dgreen/errors.hpp"

#include <sstream>

namespace py = pybind11;
using namespace dgreen;

namespace {

// Everything crosses the boundary as canonical JSON text; the Python side
// decodes it.
std::string omega_json(int m, const std::string& method) {
  if (method != "sum" && method != "closed") throw ParseError("method must be sum or closed");
  return dump(to_json(omega(m, method == "sum" ? OmegaMethod::Sum : OmegaMethod::Closed)));
}

std::string solve_json(const std::string& datum_text) {
  Json j = Json::parse(datum_text);
  const LSDatum d = datum_from_json(j.contains("datum") ? j.at("datum") : j);
  return dump(to_json(solve(omega(d.m, OmegaMethod::Closed), d)));
}

SearchOptions options(std::size_t max_candidates, bool family_filter) {
  SearchOptions o;
  o.max_candidates = max_candidates;
  o.family_filter = family_filter;
  return o;
}

std::string search_json(int m, const std::string& springer, bool certificates, std::size_t max_candidates,
                        bool family_filter) {
  return dump(to_json(search(SpringerSet::parse(m, springer), options(max_candidates, family_filter)), certificates));
}

std::string maximal_json(int m, const std::string& springer) {
  const SpringerSet s = SpringerSet::parse(m, springer);
  return dump(to_json(maximal(s), s));
}

std::string spref_json(int m) {
  Json j{{"spref", to_json(s_pref(m))}};
  if (m >= 3) {
    j["d_formula"] = to_json(d_sequence_formula_check(m));
    j["induction"] = to_json(verify_spref_via_induction(m));
  }
  return dump(j);
}

std::string atlas_json(const std::string& name) {
  const AtlasFixture f = load_fixture(name);
  return dump(to_json(f, atlas_check(f)));
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_command(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Green functions and Springer correspondences for dihedral groups";

  static py::exception<Error> error(m, "DgreenError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    } catch (const nlohmann::json::exception& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  m.def("fake_degree", [](int m, const std::string& label) { return fake_degree(m, CharLabel::parse(label, m)).to_string(); },
        py::arg("m"), py::arg("label"));
  m.def("poincare", [](int m) { return poincare(m).to_string(); }, py::arg("m"));
  m.def("irr", [](int m) { return dump(irr_to_json(m)); }, py::arg("m"));
  m.def("omega", &omega_json, py::arg("m"), py::arg("method") = "sum");
  m.def("solve", &solve_json, py::arg("datum"));
  m.def("search", &search_json, py::arg("m"), py::arg("springer"), py::arg("certificates") = false,
        py::arg("max_candidates") = 1000000, py::arg("family_filter") = true);
  m.def("maximal", &maximal_json, py::arg("m"), py::arg("springer"));
  m.def("spref", &spref_json, py::arg("m"));
  m.def("atlas_names", &atlas_names);
  m.def("atlas", &atlas_json, py::arg("name"));
  m.def("verify", [](int m) { return dump(to_json(verify(m))); }, py::arg("m"));
  m.def("run", &run, py::arg("args"), "Run the command-line tool in-process; returns (exit code, stdout, stderr).");
}
