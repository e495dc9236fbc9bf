#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mmsp/errors.hpp"
#include "mmsp/model.hpp"
#include "mmsp/nu.hpp"
#include "mmsp/oracle.hpp"
#include "mmsp/spectrum.hpp"
#include "mmsp/wavefunction.hpp"

namespace py = pybind11;
using namespace mmsp;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Modified Mobius Square potential bound-state toolkit";

    py::register_exception<SupercriticalError>(m, "SupercriticalError");
    py::register_exception<NoBoundStateError>(m, "NoBoundStateError");
    py::register_exception<NoBoundLevelsError>(m, "NoBoundLevelsError");
    py::register_exception<InvalidStateError>(m, "InvalidStateError");

    py::class_<PotentialParams>(m, "PotentialParams")
        .def(py::init([](double v0, double a, double b, double alpha) {
                 PotentialParams p{v0, a, b, alpha};
                 p.validate();
                 return p;
             }),
             py::arg("v0"), py::arg("a"), py::arg("b"), py::arg("alpha"))
        .def_readonly("v0", &PotentialParams::v0)
        .def_readonly("a", &PotentialParams::a_coef)
        .def_readonly("b", &PotentialParams::b_coef)
        .def_readonly("alpha", &PotentialParams::alpha);

    py::class_<PhysicalContext>(m, "PhysicalContext")
        .def(py::init([](double mu, double hbar) {
                 PhysicalContext c{mu, hbar};
                 c.validate();
                 return c;
             }),
             py::arg("mu") = 1.0, py::arg("hbar") = 1.0)
        .def_readonly("mu", &PhysicalContext::mu)
        .def_readonly("hbar", &PhysicalContext::hbar);

    py::class_<ApproximationScheme>(m, "ApproximationScheme")
        .def_static("pekeris", &ApproximationScheme::pekeris, py::arg("c0") = kDefaultC0)
        .def_static("greene_aldrich", &ApproximationScheme::greene_aldrich)
        .def_property_readonly("name", &ApproximationScheme::name)
        .def_property_readonly("c0_eff", &ApproximationScheme::c0_eff);

    py::class_<ValidityFlags>(m, "ValidityFlags")
        .def_readonly("valid", &ValidityFlags::valid)
        .def_readonly("non_normalizable", &ValidityFlags::non_normalizable)
        .def_readonly("above_threshold", &ValidityFlags::above_threshold);

    py::class_<SpectrumRecord>(m, "SpectrumRecord")
        .def_property_readonly("n", [](const SpectrumRecord& r) { return r.qn.n; })
        .def_property_readonly("l", [](const SpectrumRecord& r) { return r.qn.l; })
        .def_readonly("energy", &SpectrumRecord::energy)
        .def_readonly("chi", &SpectrumRecord::chi)
        .def_readonly("s_exponent", &SpectrumRecord::s_exponent)
        .def_readonly("validity", &SpectrumRecord::validity)
        .def_property_readonly("scheme",
                               [](const SpectrumRecord& r) { return r.scheme.name(); });

    py::class_<RadialFunctionTable>(m, "RadialFunctionTable")
        .def_readonly("grid", &RadialFunctionTable::grid)
        .def_readonly("values", &RadialFunctionTable::values)
        .def_readonly("norm_constant", &RadialFunctionTable::norm_constant)
        .def_readonly("node_count", &RadialFunctionTable::node_count);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("energies", &OracleResult::energies)
        .def_readonly("richardson_estimate", &OracleResult::richardson_estimate)
        .def_readonly("convergence_gap", &OracleResult::convergence_gap);

    m.def("eval_potential", &eval_potential, py::arg("params"), py::arg("r"));
    m.def("centrifugal_approx", &centrifugal_approx, py::arg("scheme"), py::arg("alpha"),
          py::arg("r"));
    m.def(
        "energy_level",
        [](const PotentialParams& p, const PhysicalContext& ctx, int n, int l,
           const ApproximationScheme& s) { return energy_level(p, ctx, {n, l}, s); },
        py::arg("params"), py::arg("ctx"), py::arg("n"), py::arg("l"), py::arg("scheme"));
    m.def(
        "enumerate_spectrum",
        [](const PotentialParams& p, const PhysicalContext& ctx, int l,
           const ApproximationScheme& s, int n_limit) {
            const auto res = enumerate_spectrum(p, ctx, l, s, n_limit);
            return py::make_tuple(res.records, res.n_max);
        },
        py::arg("params"), py::arg("ctx"), py::arg("l"), py::arg("scheme"),
        py::arg("n_limit"));
    m.def("solve_quantization", &solve_quantization, py::arg("params"), py::arg("ctx"),
          py::arg("n"), py::arg("l"), py::arg("scheme"));
    m.def(
        "jacobi_p",
        [](int n, double a, double b, double x) { return jacobi_p({n, a, b}, x); },
        py::arg("n"), py::arg("a"), py::arg("b"), py::arg("x"));
    m.def(
        "radial_table",
        [](const PotentialParams& p, const PhysicalContext& ctx, int n, int l,
           const ApproximationScheme& s, int points) {
            return normalize_radial(make_radial_table(p, ctx, {n, l}, s, points));
        },
        py::arg("params"), py::arg("ctx"), py::arg("n"), py::arg("l"), py::arg("scheme"),
        py::arg("points") = 10001);
    m.def(
        "oracle_solve",
        [](const PotentialParams& p, const PhysicalContext& ctx, int l, int k,
           int points, double r_max) {
            RadialGridSpec g = RadialGridSpec::default_for(p);
            if (points > 0) g.points = points;
            if (r_max > 0) g.r_max = r_max;
            return oracle_solve(p, ctx, l, g, k);
        },
        py::arg("params"), py::arg("ctx"), py::arg("l"), py::arg("k") = 1,
        py::arg("points") = 0, py::arg("r_max") = 0.0);
}
