// Python bindings for the core operations: curves and admissibility,
// circulant algebra, motion frames with poles and acceleration centers,
// and the spherical/Darboux layer.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "cyclokin/circulant.hpp"
#include "cyclokin/curve.hpp"
#include "cyclokin/errors.hpp"
#include "cyclokin/expr.hpp"
#include "cyclokin/jet.hpp"
#include "cyclokin/motion.hpp"
#include "cyclokin/spherical.hpp"

namespace py = pybind11;
using namespace cyclokin;

namespace {

std::vector<std::vector<double>> dense_rows(const Mat3& m) {
    std::vector<std::vector<double>> rows(3, std::vector<double>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) rows[i][j] = m(i, j);
    return rows;
}

// f, f', ..., f^(order) of an expression of t, from one jet evaluation.
std::vector<double> derivatives(const std::string& src, double t, int order) {
    const Jet jet = jet_eval(parse_expression(src), t, order);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) out.push_back(jet.derivative(k));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cyclic (circulant) motions in E^3";

    // Base first so the more specific translators, registered later,
    // run first.
    const auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<OrderError>(m, "OrderError", base);
    py::register_exception<ParseError>(m, "ExpressionParseError", base);
    py::register_exception<SchemaError>(m, "SchemaError", base);
    const auto singular = py::register_exception<SingularError>(m, "SingularError", base);
    py::register_exception<SingularPoleError>(m, "SingularPoleError", singular);
    py::register_exception<OriginError>(m, "OriginError", base);
    py::register_exception<NotAdmissibleError>(m, "NotAdmissibleError", base);
    py::register_exception<NotSphericalError>(m, "NotSphericalError", base);
    py::register_exception<UnknownNameError>(m, "UnknownNameError", base);

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def(py::init([](const py::sequence& s) {
            if (py::len(s) != 3) throw py::value_error("expected a sequence of 3 numbers");
            return Vec3{s[0].cast<double>(), s[1].cast<double>(), s[2].cast<double>()};
        }))
        .def_readonly("x", &Vec3::x)
        .def_readonly("y", &Vec3::y)
        .def_readonly("z", &Vec3::z)
        .def("norm", &Vec3::norm)
        .def("__iter__",
             [](const Vec3& v) {
                 return py::iter(py::make_tuple(v.x, v.y, v.z));
             })
        .def("__repr__", [](const Vec3& v) {
            return "Vec3(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ", " +
                   std::to_string(v.z) + ")";
        });
    py::implicitly_convertible<py::sequence, Vec3>();

    py::class_<Circulant3>(m, "Circulant3")
        .def(py::init<double, double, double>(), py::arg("a1"), py::arg("a2"), py::arg("a3"))
        .def_readonly("a1", &Circulant3::a1)
        .def_readonly("a2", &Circulant3::a2)
        .def_readonly("a3", &Circulant3::a3)
        .def_static("identity", &Circulant3::identity)
        .def_static("diagonal", &Circulant3::diagonal, py::arg("d"))
        .def("dense", [](const Circulant3& c) { return dense_rows(c.dense()); })
        .def("transposed", &Circulant3::transposed)
        .def("apply", &Circulant3::apply, py::arg("v"))
        .def("__repr__", [](const Circulant3& c) {
            return "Circulant3(" + std::to_string(c.a1) + ", " + std::to_string(c.a2) + ", " +
                   std::to_string(c.a3) + ")";
        });

    m.def("det", &det, py::arg("c"));
    m.def("mul", &mul, py::arg("x"), py::arg("y"));
    m.def("inverse", &inverse, py::arg("c"));
    m.def("cross_sum", &cross_sum, py::arg("c"));
    m.def("is_umbrella", &is_umbrella, py::arg("c"), py::arg("tol") = 1e-9);

    py::class_<Decomposition>(m, "Decomposition")
        .def_readonly("h", &Decomposition::h)
        .def_readonly("A", &Decomposition::A);
    m.def("decompose", &decompose, py::arg("c"));

    py::class_<Curve>(m, "Curve")
        .def_readonly("t_lo", &Curve::t_lo)
        .def_readonly("t_hi", &Curve::t_hi)
        .def("point", &Curve::point, py::arg("t"))
        .def("translation_point", &Curve::translation_point, py::arg("t"));
    m.def("parse_curve", [](const std::string& doc) { return parse_curve(doc); },
          py::arg("document"));
    m.def("load_curve", &load_curve, py::arg("path"));
    m.def("builtin", &builtin, py::arg("name"));
    m.def("spherical_circle", &spherical_circle, py::arg("sign"), py::arg("phase") = 0.0);

    py::enum_<CrossSumStatus>(m, "CrossSumStatus")
        .value("EXACTLY_ZERO", CrossSumStatus::ExactlyZero)
        .value("NUMERICALLY_ZERO", CrossSumStatus::NumericallyZero)
        .value("VIOLATED", CrossSumStatus::Violated);

    py::class_<AdmissibilityReport>(m, "AdmissibilityReport")
        .def_readonly("cross_sum", &AdmissibilityReport::cross_sum)
        .def_readonly("max_abs", &AdmissibilityReport::max_abs)
        .def_readonly("worst_t", &AdmissibilityReport::worst_t)
        .def_readonly("worst_value", &AdmissibilityReport::worst_value)
        .def_readonly("norm_min", &AdmissibilityReport::norm_min)
        .def_readonly("spherical", &AdmissibilityReport::spherical)
        .def_property_readonly("cross_sum_numerator",
                               [](const AdmissibilityReport& r)
                                   -> std::optional<std::vector<double>> {
                                   if (!r.cross_sum_numerator) return std::nullopt;
                                   return r.cross_sum_numerator->coefficients();
                               })
        .def("admissible", &AdmissibilityReport::admissible);
    m.def("validate", &validate, py::arg("curve"), py::arg("samples") = 256);

    py::class_<MotionFrame>(m, "MotionFrame")
        .def(py::init<const Curve&, double, int>(), py::arg("curve"), py::arg("t"),
             py::arg("order") = 1)
        .def_property_readonly("t", &MotionFrame::t)
        .def_property_readonly("order", &MotionFrame::order)
        .def("B_derivative", &MotionFrame::B_derivative, py::arg("r"))
        .def_property_readonly("B", &MotionFrame::B)
        .def("C_derivative", &MotionFrame::C_derivative, py::arg("r"))
        .def_property_readonly("C", &MotionFrame::C)
        .def_property_readonly("h", &MotionFrame::h)
        .def_property_readonly("A", &MotionFrame::A)
        .def_property_readonly("lambda_", &MotionFrame::lambda)
        .def_property_readonly("psi", &MotionFrame::psi);
    m.def("evaluate_frame", &evaluate_frame, py::arg("curve"), py::arg("t"),
          py::arg("order") = 1);

    m.def("transform_point", &transform_point, py::arg("frame"), py::arg("X"));
    m.def("inverse_transform", &inverse_transform, py::arg("frame"), py::arg("Y"));

    py::class_<VelocityTriple>(m, "VelocityTriple")
        .def_readonly("absolute", &VelocityTriple::absolute)
        .def_readonly("sliding", &VelocityTriple::sliding)
        .def_readonly("relative", &VelocityTriple::relative);
    m.def("velocities", &velocities, py::arg("frame"), py::arg("X"), py::arg("Xdot"));

    py::class_<PolePair>(m, "PolePair")
        .def_readonly("p", &PolePair::p)
        .def_readonly("q", &PolePair::q);
    m.def("pole_point", &pole_point, py::arg("frame"));

    py::class_<PoleSample>(m, "PoleSample")
        .def_readonly("t", &PoleSample::t)
        .def_readonly("det_Bdot", &PoleSample::det_Bdot)
        .def_readonly("singular", &PoleSample::singular)
        .def_readonly("pole", &PoleSample::pole);
    m.def("pole_curves", &pole_curves, py::arg("curve"), py::arg("t_samples"));

    m.def("regularity", &regularity, py::arg("frame"));
    m.def("acceleration_center", &acceleration_center, py::arg("frame"), py::arg("r"));

    py::class_<SphericalFrame>(m, "SphericalFrame")
        .def_readonly("t", &SphericalFrame::t)
        .def_readonly("S", &SphericalFrame::S)
        .def_readonly("S_dot", &SphericalFrame::S_dot);
    m.def("spherical_frame", &spherical_frame, py::arg("curve"), py::arg("t"));
    m.def("singularity", &singularity, py::arg("curve"), py::arg("t"));

    py::class_<DarbouxFrame>(m, "DarbouxFrame")
        .def_readonly("t", &DarbouxFrame::t)
        .def_property_readonly("Omega",
                               [](const DarbouxFrame& f) { return dense_rows(f.Omega); })
        .def_readonly("omega_vec", &DarbouxFrame::omega_vec)
        .def_readonly("omega_scalar", &DarbouxFrame::omega_scalar);
    m.def("darboux",
          [](const Curve& curve, double t) { return darboux(curve, t); }, py::arg("curve"),
          py::arg("t"));

    py::class_<HelicalAxis>(m, "HelicalAxis")
        .def_readonly("axis", &HelicalAxis::axis)
        .def_readonly("max_deviation", &HelicalAxis::max_deviation);
    m.def("helical_axis", &helical_axis, py::arg("frames"));

    m.def("derivatives", &derivatives, py::arg("expression"), py::arg("t"), py::arg("order"),
          "Value and derivatives 1..order of an expression of t at t, via jets.");
}
