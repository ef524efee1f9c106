#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "posetform/campaign.hpp"
#include "posetform/io.hpp"

namespace py = pybind11;
using namespace posetform;

namespace {

Poset from_any(const std::string& input) { return parse_input(input); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact quadratic-form analysis of finite posets";

  m.def("poset_text", [](const std::string& input) {
    return poset_to_text(from_any(input));
  }, py::arg("input"), "canonical text form of a poset file or DSL expression");

  m.def("relations", [](const std::string& input) {
    return from_any(input).relations();
  }, py::arg("input"), "1-based closure relation pairs");

  m.def("analyze", [](const std::string& input, int cap, int box) {
    return analysis_report(from_any(input), cap, box).dump();
  }, py::arg("input"), py::arg("cap") = 16, py::arg("box") = 6,
     "full analysis report as a JSON string");

  m.def("minimum", [](const std::string& input, int cap) {
    return minimum_json(minimum_of_poset(from_any(input), cap)).dump();
  }, py::arg("input"), py::arg("cap") = 16,
     "simplex minimum (JSON: value, minimizer, support, interior, p_value)");

  m.def("p_value", [](const std::string& input, int cap) {
    return rat_str(p_value(from_any(input), cap));
  }, py::arg("input"), py::arg("cap") = 16, "exact P(S) as a 'p/q' string");

  m.def("classify", [](const std::string& input, int cap) {
    return classification_json(posetform::classify(from_any(input), cap)).dump();
  }, py::arg("input"), py::arg("cap") = 16, "classification as a JSON string");

  m.def("cone_witnesses", [](const std::string& input) {
    QuadraticForm f = form_of_poset(from_any(input));
    Json j;
    auto c = c_cone(f);
    j["C"] = c ? witness_json(*c) : Json(nullptr);
    auto hat = hat_cones(f);
    j["Chat"] = hat ? witness_json(*hat) : Json(nullptr);
    auto st = stationary_cone(f);
    j["St"] = st ? witness_json(*st) : Json(nullptr);
    return j.dump();
  }, py::arg("input"), "C, Chat and St witnesses as a JSON string");

  m.def("census", [](int n) {
    return enumerate_posets(n).size();
  }, py::arg("n"), "number of posets with n elements up to isomorphism");

  m.def("campaign", [](const std::string& name, int n_max) {
    CampaignResult res = run_campaign(name, n_max);
    Json j;
    j["campaign"] = res.name;
    j["posets"] = res.posets;
    j["rows"] = res.rows;
    j["counterexamples"] = res.counterexamples;
    return j.dump();
  }, py::arg("name"), py::arg("n_max") = 5,
     "run a verification campaign, summary as a JSON string");
}
