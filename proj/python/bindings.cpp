#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cqg/classical_eval.hpp"
#include "cqg/experiments.hpp"
#include "cqg/l2_operators.hpp"
#include "cqg/quantum_examples.hpp"
#include "cqg/random_series.hpp"

namespace py = pybind11;
using namespace cqg;

namespace {

std::string run_experiment_json(const std::string& name, const py::dict& options) {
  ExperimentConfig cfg;
  for (const auto& [key_obj, value] : options) {
    const std::string key = py::str(key_obj);
    if (key == "seed") cfg.seed = value.cast<std::uint64_t>();
    else if (key == "trials") cfg.trials = value.cast<int>();
    else if (key == "cases") cfg.cases = value.cast<int>();
    else if (key == "kmax") cfg.kmax = value.cast<int>();
    else if (key == "dual") cfg.dual = value.cast<std::string>();
    else if (key == "q") cfg.q = value.cast<double>();
    else if (key == "N") cfg.N = value.cast<int>();
    else if (key == "nmax") cfg.nmax = value.cast<int>();
    else if (key == "eps") cfg.eps = value.cast<double>();
    else if (key == "resolution") cfg.resolution = value.cast<int>();
    else throw py::key_error("unknown option '" + key + "'");
  }
  const ExperimentOutput out = run_experiment(name, cfg);
  Json doc = {{"name", out.name},
              {"config", out.config},
              {"records", out.records},
              {"failures", out.failures},
              {"summary", out.summary},
              {"pass", out.pass()},
              {"elapsed_ms", out.elapsed_ms}};
  return doc.dump();
}

}  // namespace

PYBIND11_MODULE(_cqg, m) {
  m.doc() = "Fourier analysis on compact quantum group duals";
  m.def("version", [] { return std::string(kToolkitVersion); });

  py::class_<IrrepData>(m, "IrrepData")
      .def_property_readonly("label", &IrrepData::label)
      .def_property_readonly("n", &IrrepData::n)
      .def_property_readonly("d", &IrrepData::d)
      .def_property_readonly("q_diag", &IrrepData::q_diag)
      .def_property_readonly("kac", &IrrepData::kac);

  py::class_<DualDescriptor, std::shared_ptr<DualDescriptor>>(m, "Dual")
      .def_property_readonly("name", &DualDescriptor::name)
      .def_property_readonly("kac", &DualDescriptor::kac)
      .def("__len__", &DualDescriptor::size)
      .def("irrep", &DualDescriptor::irrep, py::return_value_policy::reference_internal)
      .def("index_of", &DualDescriptor::index_of)
      .def("to_json", [](const DualDescriptor& d) { return to_json(d).dump(); });

  const auto wrap = [](DualPtr p) { return std::const_pointer_cast<DualDescriptor>(p); };
  m.def("trivial_dual", [wrap] { return wrap(make_trivial_dual()); });
  m.def("su2_dual", [wrap](int kmax) { return wrap(make_su2_dual(kmax)); }, py::arg("kmax"));
  m.def("suq2_dual", [wrap](double q, int kmax) { return wrap(make_suq2_dual(q, kmax)); },
        py::arg("q"), py::arg("kmax"));
  m.def("onplus_dual", [wrap](int N, int kmax) { return wrap(make_onplus_dual(N, kmax)); },
        py::arg("N"), py::arg("kmax"));
  m.def("kac_dual",
        [wrap](const std::string& name, const std::vector<int>& dims) {
          return wrap(make_kac_dual(name, dims));
        },
        py::arg("name"), py::arg("dims"));
  m.def("dual_from_json",
        [wrap](const std::string& text) { return wrap(dual_from_json(Json::parse(text))); });

  py::class_<FourierCoeffs>(m, "FourierCoeffs")
      .def(py::init([](std::shared_ptr<DualDescriptor> d) { return FourierCoeffs(d); }),
           py::arg("dual"))
      .def_property_readonly(
          "dual", [](const FourierCoeffs& f) { return std::const_pointer_cast<DualDescriptor>(f.dual()); })
      .def("set", py::overload_cast<std::size_t, MatrixC>(&FourierCoeffs::set))
      .def("at", &FourierCoeffs::at)
      .def("support", [](const FourierCoeffs& f) { return f.support(); })
      .def("scaled", &FourierCoeffs::scaled)
      .def("__add__", &FourierCoeffs::operator+)
      .def("__sub__", &FourierCoeffs::operator-)
      .def("to_json", [](const FourierCoeffs& f) { return to_json(f).dump(); });

  m.def("ell_infty_norm", &ell_infty_norm);
  m.def("ell2_norm", &ell2_norm);
  m.def("ell1_norm", &ell1_norm);
  m.def("pairing", &pairing);
  m.def("convolve", &convolve);
  m.def("convolution_unit",
        [](std::shared_ptr<DualDescriptor> d) { return convolution_unit(d); });
  m.def("plancherel_gram_norm", &plancherel_gram_norm);

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("stream") = 0)
      .def("uniform", &Rng::uniform)
      .def("normal", &Rng::normal)
      .def("split", &Rng::split);

  m.def("gaussian_matrix", &gaussian_matrix);
  m.def("haar_unitary", &haar_unitary);
  m.def("ginibre_matrix", &ginibre_matrix);
  m.def("random_coeffs",
        [](std::shared_ptr<DualDescriptor> d, Rng& rng) { return random_coeffs(d, rng); });
  m.def("expected_operator_norm", [](int n, int trials, Rng& rng) {
    const MonteCarloEstimate e = expected_operator_norm(n, trials, rng);
    return py::make_tuple(e.mean, e.std_error);
  });
  m.def("four_unitary_decomposition", [](const MatrixC& x) {
    const auto v = four_unitary_decomposition(x);
    return std::vector<MatrixC>(v.begin(), v.end());
  });

  m.def("tb_block_norm", &tb_block_norm);
  m.def("aligned_unitary", &aligned_unitary);
  m.def("trace_norm_duality", [](const MatrixC& a, int trials, Rng& rng) {
    const TraceNormDuality t = trace_norm_duality(a, trials, rng);
    return py::dict(py::arg("exact") = t.exact, py::arg("aligned") = t.aligned,
                    py::arg("random_sup") = t.random_sup);
  });
  m.def("central_sum_check", [](const std::vector<cd>& c, std::shared_ptr<DualDescriptor> d) {
    const CentralSum s = central_sum_check(c, d);
    return py::dict(py::arg("ell2_sq") = s.ell2_sq, py::arg("sum_c_sq") = s.sum_c_sq,
                    py::arg("deviation") = s.deviation);
  });

  m.def("character_l1", &character_l1);
  m.def("su2_irrep_matrix", &su2_irrep_matrix);
  m.def("su2_element", &su2_element);

  m.def("nonkac_quantity", &nonkac_quantity);
  m.def("suq2_log_dimension", &suq2_log_dimension);
  m.def("corollary_chain_check", [](double q, double eps, const FourierCoeffs& f, int kmax) {
    const CorollaryChain c = corollary_chain_check(q, eps, f, kmax);
    return py::dict(py::arg("lhs") = c.lhs, py::arg("rhs") = c.rhs,
                    py::arg("termwise_ok") = c.termwise_ok);
  });
  m.def("growth_csv", [](std::shared_ptr<DualDescriptor> d, int kmax, std::optional<double> q) {
    return growth_csv(growth_report(*d, kmax, q));
  }, py::arg("dual"), py::arg("kmax"), py::arg("q") = py::none());

  m.def("experiment_names", &experiment_names);
  m.def("_run_experiment", &run_experiment_json);

}
