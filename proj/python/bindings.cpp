#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fockwit/cross_check.hpp"
#include "fockwit/error.hpp"
#include "fockwit/ppt_oracle.hpp"
#include "fockwit/state_catalog.hpp"
#include "fockwit/version.hpp"
#include "fockwit/witnesses.hpp"

namespace py = pybind11;
using namespace fockwit;

namespace {

py::dict report_dict(const WitnessReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["kind"] = std::string(to_string(r.kind));
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["margin"] = r.margin;
  d["verdict"] = std::string(to_string(r.verdict));
  d["leakage"] = r.leakage;
  d["anchor"] = r.anchor;
  d["reference_rhs"] = r.reference_rhs ? py::cast(*r.reference_rhs) : py::none();
  d["message"] = r.message;
  return d;
}

WitnessConfig make_config(double boundary_tol, double phi, double leak_warn, double leak_error) {
  WitnessConfig cfg;
  cfg.boundary_tol = boundary_tol;
  cfg.phi = phi;
  cfg.leakage.warn = leak_warn;
  cfg.leakage.error = leak_error;
  return cfg;
}

// Opaque holder; a bare std::variant would be picked up by the stl.h caster.
struct PyState {
  State s;
};

FockSpace space_from(const std::vector<int>& cutoffs) {
  return make_space(cutoffs.size(), cutoffs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Truncated Fock-space entanglement witnesses";
  m.attr("__version__") = kVersion;

  static py::exception<LeakageError> leakage_exc(m, "LeakageError", PyExc_RuntimeError);
  static py::exception<OracleCapExceeded> cap_exc(m, "OracleCapExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const LeakageError& e) {
      PyErr_SetString(leakage_exc.ptr(), e.what());
    } catch (const OracleCapExceeded& e) {
      PyErr_SetString(cap_exc.ptr(), e.what());
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  py::class_<PyState>(m, "State")
      .def_property_readonly("cutoffs", [](const PyState& p) { return space_of(p.s).cutoffs(); })
      .def_property_readonly("dim", [](const PyState& p) { return space_of(p.s).dim(); })
      .def_property_readonly("is_pure",
                             [](const PyState& p) { return std::holds_alternative<StateVector>(p.s); })
      .def_property_readonly("amplitudes",
                             [](const PyState& p) -> py::object {
                               if (const auto* v = std::get_if<StateVector>(&p.s)) {
                                 return py::cast(Eigen::VectorXcd(v->amplitudes()));
                               }
                               return py::none();
                             })
      .def_property_readonly("density",
                             [](const PyState& p) { return Eigen::MatrixXcd(to_density(p.s).matrix()); })
      .def_property_readonly("leakage", [](const PyState& p) { return truncation_leakage(p.s); })
      .def("__repr__", [](const PyState& p) {
        return std::string("<fockwit.State ") +
               (std::holds_alternative<StateVector>(p.s) ? "pure" : "mixed") +
               " dim=" + std::to_string(space_of(p.s).dim()) + ">";
      });

  m.def(
      "build_state_json",
      [](const std::string& spec_json, double leakage_limit, std::uint64_t seed) {
        BuildOptions opts;
        opts.leakage_limit = leakage_limit;
        opts.seed = seed;
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(spec_json);
        } catch (const nlohmann::json::exception& e) {
          throw InvalidArgument(std::string("spec is not valid JSON: ") + e.what());
        }
        StateSpec spec = parse_state_spec(j);
        if (spec.cutoffs.empty()) spec.cutoffs = default_cutoffs(spec.family);
        return PyState{build_state(spec, opts)};
      },
      py::arg("spec_json"), py::arg("leakage_limit") = kCatalogLeakageLimit,
      py::arg("seed") = 0);

  m.def("fock", [](const std::vector<int>& cutoffs, const std::vector<int>& occ) {
    return PyState{fock(space_from(cutoffs), occ)};
  }, py::arg("cutoffs"), py::arg("occ"));
  m.def("bell_su2", [](const std::vector<int>& cutoffs) {
    return PyState{bell_su2(space_from(cutoffs))};
  }, py::arg("cutoffs") = std::vector<int>{6, 6});
  m.def("bell_su11", [](const std::vector<int>& cutoffs) {
    return PyState{bell_su11(space_from(cutoffs))};
  }, py::arg("cutoffs") = std::vector<int>{6, 6});
  m.def("three_mode_hz", [](const std::vector<int>& cutoffs) {
    return PyState{three_mode_hz(space_from(cutoffs))};
  }, py::arg("cutoffs") = std::vector<int>{4, 4, 4});
  m.def("coherent_product",
        [](const std::vector<int>& cutoffs, const std::vector<Complex>& amps, double limit) {
          return PyState{coherent_product(space_from(cutoffs), amps, limit)};
        },
        py::arg("cutoffs"), py::arg("amplitudes"), py::arg("leakage_limit") = kCatalogLeakageLimit);
  m.def("tmsv", [](const std::vector<int>& cutoffs, double x, double limit) {
    return PyState{tmsv(space_from(cutoffs), x, limit)};
  }, py::arg("cutoffs"), py::arg("x"), py::arg("leakage_limit") = kCatalogLeakageLimit);
  m.def("random_pure", [](const std::vector<int>& cutoffs, std::uint64_t seed) {
    return PyState{random_pure(space_from(cutoffs), seed)};
  }, py::arg("cutoffs"), py::arg("seed"));
  m.def("random_separable", [](const std::vector<int>& cutoffs, std::uint64_t seed, int terms) {
    return PyState{random_separable(space_from(cutoffs), seed, terms)};
  }, py::arg("cutoffs"), py::arg("seed"), py::arg("terms") = 4);

  m.def("witness_names", [] {
    std::vector<std::string> out;
    for (auto n : witness_names()) out.emplace_back(n);
    return out;
  });
  m.def(
      "evaluate_witness",
      [](const std::string& name, const PyState& p, double tol, double phi, double warn,
         double error) {
        return report_dict(evaluate_witness(name, p.s, make_config(tol, phi, warn, error)));
      },
      py::arg("name"), py::arg("state"), py::arg("boundary_tol") = 1e-9,
      py::arg("phi") = WitnessConfig{}.phi, py::arg("leak_warn") = 1e-8,
      py::arg("leak_error") = 1e-4);
  m.def(
      "evaluate_all",
      [](const PyState& p, double tol, double phi, double warn, double error) {
        py::list out;
        for (const auto& r : evaluate_all(p.s, make_config(tol, phi, warn, error))) {
          out.append(report_dict(r));
        }
        return out;
      },
      py::arg("state"), py::arg("boundary_tol") = 1e-9, py::arg("phi") = WitnessConfig{}.phi,
      py::arg("leak_warn") = 1e-8, py::arg("leak_error") = 1e-4);

  m.def(
      "ppt_analysis",
      [](const PyState& p, std::size_t mode, std::size_t cap) {
        JacobiOptions opts;
        opts.max_dim = cap;
        const PptAnalysis a = ppt_analysis(to_density(p.s), mode, opts);
        py::dict d;
        d["min_eigenvalue"] = a.min_eigenvalue;
        d["negativity"] = a.negativity;
        d["verdict"] = a.ppt ? "PPT" : "NPT";
        d["residual"] = a.residual;
        d["sweeps"] = a.sweeps;
        return d;
      },
      py::arg("state"), py::arg("mode") = 1, py::arg("oracle_cap") = 1024);
  m.def(
      "cross_check",
      [](const PyState& p) {
        const CrossCheck cc = cross_check(p.s);
        py::dict d;
        d["violated"] = cc.violated;
        d["discrepancies"] = cc.discrepancies;
        d["consistent"] = cc.consistent();
        return d;
      },
      py::arg("state"));
  m.def(
      "hermitian_eigenvalues",
      [](const Eigen::MatrixXcd& h, std::size_t cap) {
        JacobiOptions opts;
        opts.max_dim = cap;
        const Spectrum sp = hermitian_eigenvalues(h, opts);
        return py::make_tuple(sp.eigenvalues, sp.residual, sp.sweeps);
      },
      py::arg("matrix"), py::arg("oracle_cap") = 1024,
      "Ascending eigenvalues, reconstruction residual and sweep count.");
}
