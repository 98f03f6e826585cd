#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lefschetz/bounds.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/homology0.hpp"
#include "lefschetz/join1.hpp"
#include "lefschetz/petrov.hpp"

namespace py = pybind11;
using namespace lefschetz;

// Results cross the boundary as JSON text; the Python package decodes them.
namespace {

using json = nlohmann::json;

Scenario scenarioOf(const std::string& text) { return scenario_from_json(json::parse(text)); }

std::string gramJson(const Scenario& s, const std::string& which) {
  json j;
  if (which == "gR" || which == "hS") {
    Basis0 b = basis0(s, which == "gR" ? SideId::Left : SideId::Right);
    std::vector<std::string> labels;
    for (const auto& l : b.labels) labels.push_back(l.str());
    j = {{"labels", labels}, {"matrix", b.gram().toLongs()}};
  } else if (which == "f" || which == "fF") {
    JoinContext c = join_context(s);
    const JoinBasis& b = which == "f" ? c.f : c.fF;
    std::vector<std::string> labels;
    for (const auto& l : b.labels) labels.push_back(l.str());
    j = {{"labels", labels}, {"matrix", (which == "f" ? c.formF : c.formFF).toLongs()}};
  } else {
    throw Error(ErrorKind::InvalidInput, "which must be gR, hS, f or fF");
  }
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vanishing-cycle computations for pull-back polynomial foliations";

  static py::exception<Error> error(m, "LefschetzError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.toJson().dump().c_str());
    }
  });

  m.def("default_scenario", [](int a, int n) { return default_scenario(a, n).toJson().dump(); }, py::arg("a"),
        py::arg("n"));
  m.def("validate", [](const std::string& text) {
    Scenario s = scenarioOf(text);
    return json{{"valid", true}, {"scenario", s.toJson()}, {"critical_data", critical_data(s).toJson()}}.dump();
  });
  m.def("gram", [](const std::string& text, const std::string& which) { return gramJson(scenarioOf(text), which); });
  m.def("kernel_report", [](const std::string& text) { return kernel_report(scenarioOf(text)).toJson().dump(); });
  m.def("simplicity", [](const std::string& text) { return simplicity_check(scenarioOf(text)).toJson().dump(); });
  m.def("decompose", [](const std::string& form, const std::string& l) {
    BiForm1 w = BiForm1::fromJson(json::parse(form));
    BiPoly p = BiPoly::fromJson(json::parse(l));
    auto d = decompose(w, p);
    json j = d.toJson();
    j["reconstructs"] = d.reconstruct(p) == w;
    return j.dump();
  });
  m.def("tangent_cone", [](const std::string& form, const std::string& text) {
    return tangent_cone_membership(BiForm1::fromJson(json::parse(form)), scenarioOf(text)).toJson().dump();
  });
  m.def("bound_report", [](long a, long n) { return bound_report(a, n).toJson().dump(); });
  m.def("best_factorization", [](long dPlus1) { return best_factorization(dPlus1).toJson().dump(); });
  m.def("cyclicity_bound", &cyclicity_bound, py::arg("d"), py::arg("n"));
  m.def("pullback_cyclicity", &pullback_cyclicity, py::arg("a"), py::arg("n"));
}
