#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mcx/cli.hpp"
#include "mcx/estimate.hpp"
#include "mcx/verify.hpp"

namespace py = pybind11;
using namespace mcx;

namespace {

Mat2 to_unitary(const py::object& u) {
  if (u.is_none()) return mat_x();
  if (py::isinstance<py::str>(u)) return cli::parse_unitary(u.cast<std::string>());
  return u.cast<Mat2>();
}

est::MethodId make_method(const std::string& method, std::uint64_t ancillae, double epsilon,
                          const py::object& unitary, bool conjugate_order) {
  est::MethodId m;
  m.kind = est::parse_method(method);
  m.ancillae = ancillae;
  m.epsilon = epsilon;
  m.u = to_unitary(unitary);
  m.su2_conjugate_second = conjugate_order;
  return m;
}

py::object run_verify(const est::MethodId& method, std::uint64_t n, std::uint32_t threshold,
                      double tolerance, std::uint64_t seed) {
  const Circuit c = est::materialize(method, n, threshold);
  const verify::IdealSpec spec = verify::spec_from_roles(c, method.u);
  if (method.kind == est::Method::Approx) {
    return py::cast(verify::spectral_error(c, spec));
  }
  verify::VerifyMode mode;
  if (c.width <= verify::kExhaustiveWidth) {
    mode = verify::VerifyMode::Exhaustive;
  } else if (c.width <= verify::kStateWidth) {
    mode = verify::VerifyMode::Randomized;
  } else {
    throw std::invalid_argument("verify: width " + std::to_string(c.width) +
                                " exceeds the simulation limit");
  }
  return py::cast(verify::verify_exact(c, spec, mode, tolerance, seed));
}

}  // namespace

PYBIND11_MODULE(_mcxsynth, m) {
  m.doc() = "multi-controlled gate synthesis, verification and resource estimation";

  py::class_<Circuit>(m, "Circuit")
      .def_readonly("width", &Circuit::width)
      .def_readonly("global_phase", &Circuit::global_phase)
      .def("__len__", [](const Circuit& c) { return c.size(); })
      .def("depth", [](const Circuit& c) { return asap_depth(c); })
      .def("gate_counts",
           [](const Circuit& c) {
             const GateCounts gc = gate_counts(c);
             return py::make_tuple(gc.cnots, gc.singles);
           })
      .def("qasm", [](const Circuit& c) { return export_qasm(c); })
      .def("inverse", [](const Circuit& c) { return inverse(c); })
      .def("__repr__", [](const Circuit& c) {
        std::ostringstream s;
        s << "Circuit(width=" << c.width << ", gates=" << c.size() << ")";
        return s.str();
      });

  py::class_<est::ResourceProfile>(m, "ResourceProfile")
      .def_readonly("depth", &est::ResourceProfile::depth)
      .def_readonly("cnots", &est::ResourceProfile::cnots)
      .def_readonly("singles", &est::ResourceProfile::singles)
      .def_readonly("zeroed", &est::ResourceProfile::zeroed)
      .def_readonly("borrowed", &est::ResourceProfile::borrowed)
      .def_readonly("error_bound", &est::ResourceProfile::error_bound)
      .def_property_readonly("size", &est::ResourceProfile::size)
      .def("__repr__", [](const est::ResourceProfile& rp) {
        std::ostringstream s;
        s << "ResourceProfile(depth=" << rp.depth << ", cnots=" << rp.cnots
          << ", singles=" << rp.singles << ")";
        return s.str();
      });

  py::class_<verify::VerificationReport>(m, "VerificationReport")
      .def_readonly("passed", &verify::VerificationReport::passed)
      .def_readonly("max_deviation", &verify::VerificationReport::max_deviation)
      .def_readonly("tolerance", &verify::VerificationReport::tolerance)
      .def_readonly("global_phase", &verify::VerificationReport::global_phase)
      .def_readonly("seed", &verify::VerificationReport::seed)
      .def_property_readonly("mode",
                             [](const verify::VerificationReport& r) {
                               return r.mode == verify::VerifyMode::Exhaustive ? "exhaustive"
                                                                               : "randomized";
                             })
      .def_property_readonly(
          "failures",
          [](const verify::VerificationReport& r) { return r.failures.size(); })
      .def("__repr__", [](const verify::VerificationReport& r) {
        std::ostringstream s;
        s << "VerificationReport(passed=" << (r.passed ? "True" : "False")
          << ", max_deviation=" << r.max_deviation << ")";
        return s.str();
      });

  py::class_<verify::SpectralResult>(m, "SpectralResult")
      .def_readonly("value", &verify::SpectralResult::value)
      .def_readonly("converged", &verify::SpectralResult::converged)
      .def_readonly("iterations", &verify::SpectralResult::iterations)
      .def("__repr__", [](const verify::SpectralResult& r) {
        std::ostringstream s;
        s << "SpectralResult(value=" << r.value << ")";
        return s.str();
      });

  m.def(
      "synthesize",
      [](const std::string& method, std::uint64_t n, std::uint64_t ancillae, double epsilon,
         const py::object& unitary, std::uint32_t threshold, bool conjugate_order) {
        return est::materialize(make_method(method, ancillae, epsilon, unitary, conjugate_order),
                                n, threshold);
      },
      py::arg("method"), py::arg("n"), py::kw_only(), py::arg("ancillae") = 2,
      py::arg("epsilon") = 1e-3, py::arg("unitary") = py::none(), py::arg("threshold") = 30,
      py::arg("conjugate_order") = true,
      "Build the full circuit for a method; wire roles annotate controls, "
      "ancillae and target.");

  m.def(
      "estimate",
      [](const std::string& method, std::uint64_t n, std::uint64_t ancillae, double epsilon,
         const py::object& unitary, std::uint32_t threshold, bool conjugate_order) {
        return est::estimate(make_method(method, ancillae, epsilon, unitary, conjugate_order), n,
                             threshold);
      },
      py::arg("method"), py::arg("n"), py::kw_only(), py::arg("ancillae") = 2,
      py::arg("epsilon") = 1e-3, py::arg("unitary") = py::none(), py::arg("threshold") = 30,
      py::arg("conjugate_order") = true,
      "Resource profile without materializing; exact counts at any size, "
      "measured depth up to the counting cutoff and the recurrence model above it.");

  m.def(
      "verify",
      [](const std::string& method, std::uint64_t n, std::uint64_t ancillae, double epsilon,
         const py::object& unitary, std::uint32_t threshold, bool conjugate_order,
         double tolerance, std::uint64_t seed) {
        return run_verify(make_method(method, ancillae, epsilon, unitary, conjugate_order), n,
                          threshold, tolerance, seed);
      },
      py::arg("method"), py::arg("n"), py::kw_only(), py::arg("ancillae") = 2,
      py::arg("epsilon") = 1e-3, py::arg("unitary") = py::none(), py::arg("threshold") = 30,
      py::arg("conjugate_order") = true, py::arg("tolerance") = 1e-8, py::arg("seed") = 7,
      "Synthesize then check against the ideal controlled gate. Returns a "
      "VerificationReport (exact methods) or SpectralResult (approximate).");

  m.def(
      "sweep_csv",
      [](const std::vector<std::string>& methods, std::uint64_t n_lo, std::uint64_t n_hi,
         std::uint32_t points, const std::vector<std::uint64_t>& ms,
         const std::vector<double>& epsilons, std::uint32_t threshold) {
        est::SweepSpec spec;
        spec.threshold = threshold;
        spec.ns = est::log_spaced(n_lo, n_hi, points);
        spec.ms = ms;
        spec.epsilons = epsilons;
        for (const std::string& name : methods) {
          est::MethodId method;
          method.kind = est::parse_method(name);
          spec.methods.push_back(method);
        }
        std::ostringstream out;
        est::write_sweep_csv(out, est::sweep(spec));
        return out.str();
      },
      py::arg("methods"), py::arg("n_lo") = 100, py::arg("n_hi") = 10'000'000,
      py::arg("points") = 25, py::kw_only(), py::arg("ms") = std::vector<std::uint64_t>{},
      py::arg("epsilons") = std::vector<double>{}, py::arg("threshold") = 30,
      "Depth/size sweep over a log-spaced n grid, returned as CSV text.");

  m.def("stage_serial_depth", &est::stage_serial_depth, py::arg("n"), py::arg("threshold") = 30,
        py::arg("zeroed") = false,
        "Partition-recurrence depth table entry for the polylog construction.");

  m.def(
      "literature",
      [] {
        py::list rows;
        for (const est::LiteratureRow& row : est::literature_table()) {
          py::dict d;
          d["name"] = row.name;
          d["expression"] = row.expression;
          d["ancillae"] = row.ancillae;
          d["note"] = row.note;
          rows.append(std::move(d));
        }
        return rows;
      },
      "Published depth expressions used by the compare command.");

  m.def(
      "methods",
      [] {
        std::vector<std::string> names;
        for (const est::Method kind :
             {est::Method::PolylogBorrowed, est::Method::PolylogZeroed, est::Method::Approx,
              est::Method::Adjustable, est::Method::Ladder, est::Method::Split,
              est::Method::LogTree, est::Method::McuZeroed, est::Method::McSu2})
          names.emplace_back(est::method_name(kind));
        return names;
      },
      "Names accepted by the method argument.");
}
