#include "mtc/averaging.hpp"
#include "mtc/clustering.hpp"
#include "mtc/config.hpp"
#include "mtc/fluctuations.hpp"
#include "mtc/partitions.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mtc;

namespace {

AverageConfig make_cfg(long horizon, double tol) {
  AverageConfig cfg;
  cfg.horizon = horizon;
  cfg.tol = tol;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_mtcorr, mod) {
  mod.doc() = "exact multi-time correlation and fluctuation computations";

  py::class_<ModelSystem, ModelPtr>(mod, "Model")
      .def_property_readonly("name", &ModelSystem::name)
      .def_property_readonly("is_exact", &ModelSystem::is_exact)
      .def_property_readonly("observables", &ModelSystem::registered_names)
      .def("phi",
           [](ModelPtr m, const std::string& name) {
             return m->phi(m->lookup(name)).to_complex();
           },
           py::arg("observable"))
      .def("correlate",
           [](ModelPtr m, const std::vector<std::pair<std::string, long>>& letters) {
             std::vector<TimedObs> xs;
             for (const auto& [name, t] : letters) xs.push_back({m->lookup(name), t});
             return m->correlate(xs).to_complex();
           },
           py::arg("letters"),
           "multi-time correlation of [(observable, time), ...]")
      .def("phi_infinity",
           [](ModelPtr m, const std::string& word, long horizon, double tol) {
             PhiInfinityResult r =
                 evaluate_phi_infinity(*m, parse_word(*m, word), make_cfg(horizon, tol));
             return py::make_tuple(r.value.to_complex(), r.exact, r.converged);
           },
           py::arg("word"), py::arg("horizon") = 256, py::arg("tol") = 1e-6,
           "asymptotic state of a word \"[scalar] X@j Y@k\"; "
           "returns (value, exact, converged)")
      .def("fluctuation_moment",
           [](ModelPtr m, const std::string& observable, int order, long n) {
             std::vector<ObsId> xs(static_cast<size_t>(order), m->lookup(observable));
             return finite_n_moment(*m, {xs, n}).to_complex();
           },
           py::arg("observable"), py::arg("order"), py::arg("N"))
      .def("asymptotic_moment",
           [](ModelPtr m, const std::string& observable, int order, bool ordered) {
             std::vector<ObsId> xs(static_cast<size_t>(order), m->lookup(observable));
             return asymptotic_moment_pair_sum(*m, xs, ordered).to_complex();
           },
           py::arg("observable"), py::arg("order"), py::arg("ordered") = true)
      .def("cluster_check",
           [](ModelPtr m, const std::string& condition, long horizon, double tol) {
             ClusterReport rep =
                 run_standard_condition(*m, condition, make_cfg(horizon, tol));
             py::dict d;
             d["condition"] = rep.condition;
             d["verdict"] = verdict_name(rep.verdict);
             d["max_residual"] = rep.max_residual;
             d["json"] = rep.to_json();
             return d;
           },
           py::arg("condition"), py::arg("horizon") = 256, py::arg("tol") = 1e-6);

  mod.def("load_model", &load_model, py::arg("path_or_name"),
          "model from a JSON config file or a built-in name");
  mod.def("model_from_json", &model_from_json_text, py::arg("text"));

  mod.def("catalan",
          [](int n) { return catalan(n).convert_to<double>(); }, py::arg("n"));
  mod.def("gaussian_moment", &gaussian_moment, py::arg("n"), py::arg("sigma") = 1.0);
  mod.def("semicircle_moment", &semicircle_moment, py::arg("n"), py::arg("sigma") = 1.0);
  mod.def("pair_partitions",
          [](int n, bool ordered) {
            std::vector<std::vector<std::pair<int, int>>> out;
            for (const auto& p : enumerate_pair_partitions(n, ordered))
              out.push_back(p.pairs);
            return out;
          },
          py::arg("n"), py::arg("ordered") = true);
  mod.def("crossing_number",
          [](const std::vector<std::pair<int, int>>& pairs) {
            return crossing_number(PairPartition{pairs});
          },
          py::arg("pairs"));
}
