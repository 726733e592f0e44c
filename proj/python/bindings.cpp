#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spoly/experiments.hpp"
#include "spoly/io.hpp"

namespace py = pybind11;
using namespace spoly;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Points to_points(const Array& a) {
    if (a.ndim() != 2 || (a.shape(1) != 2 && a.shape(1) != 3))
        throw InvalidArgument("points must be an (n, 2) or (n, 3) array");
    const auto r = a.unchecked<2>();
    Points out;
    for (py::ssize_t i = 0; i < r.shape(0); ++i) out.emplace_back(r(i, 0), r(i, 1), r.shape(1) == 3 ? r(i, 2) : 0.0);
    return out;
}

Array to_array(const Points& pts, int dim) {
    Array a({static_cast<py::ssize_t>(pts.size()), static_cast<py::ssize_t>(dim)});
    auto w = a.mutable_unchecked<2>();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (int k = 0; k < dim; ++k) w(static_cast<py::ssize_t>(i), k) = pts[i][k];
    return a;
}

Vec3 to_vec(const std::vector<double>& v) {
    if (v.size() < 2 || v.size() > 3) throw InvalidArgument("expected 2 or 3 coordinates");
    return {v[0], v[1], v.size() == 3 ? v[2] : 0.0};
}

} // namespace

PYBIND11_MODULE(_spoly, m) {
    m.doc() = "Float-format B-spline control polygons";

    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    auto numeric = py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<NoExactFloatForm>(m, "NoExactFloatForm", numeric.ptr());
    py::register_exception<RegularityError>(m, "RegularityError", numeric.ptr());
    py::register_exception<CurvatureSingularity>(m, "CurvatureSingularity", numeric.ptr());

    py::class_<ControlPolygon>(m, "Polygon")
        .def_static(
            "float_", [](const Array& pts, int degree, int dim) { return ControlPolygon::make_float(to_points(pts), degree, dim); },
            py::arg("points"), py::arg("degree"), py::arg("dim") = 2)
        .def_static(
            "clamped",
            [](const Array& pts, std::vector<double> knots, int degree, int dim) {
                return ControlPolygon::make_clamped(to_points(pts), KnotVector(std::move(knots), degree), dim);
            },
            py::arg("points"), py::arg("knots"), py::arg("degree"), py::arg("dim") = 2)
        .def_static("from_json", &polygon_from_json)
        .def("to_json", &polygon_to_json)
        .def_property_readonly("degree", &ControlPolygon::degree)
        .def_property_readonly("dim", &ControlPolygon::dim)
        .def_property_readonly("format", [](const ControlPolygon& p) { return std::string(to_string(p.format())); })
        .def_property_readonly("points", [](const ControlPolygon& p) { return to_array(p.vertices(), p.dim()); })
        .def_property_readonly("knots", [](const ControlPolygon& p) { return p.knots().values(); })
        .def("__len__", &ControlPolygon::size)
        .def("__repr__", [](const ControlPolygon& p) {
            return "<Polygon degree=" + std::to_string(p.degree()) + " " + to_string(p.format()) + " " +
                   std::to_string(p.size()) + " points>";
        });

    m.def("regular_polygon", [](int n, double radius, double start_deg, bool clockwise) {
        return to_array(regular_polygon_vertices(n, radius, start_deg * kDegree, clockwise ? Orientation::Cw : Orientation::Ccw), 2);
    }, py::arg("n"), py::arg("radius") = 1.0, py::arg("start_deg") = 0.0, py::arg("clockwise") = false);

    m.def("to_clamped", [](const ControlPolygon& p) { return to_clamped(p).polygon; });
    m.def("to_float", [](const ControlPolygon& p) {
        const ConversionResult r = to_float(p);
        return py::make_tuple(r.polygon, r.report.max_extrapolation_ratio);
    });
    m.def("bezier_segments", [](const ControlPolygon& p) { return extract_bezier_segments(curve_of(p)); });

    m.def("domain", [](const ControlPolygon& p) {
        const BSplineCurve c = curve_of(p);
        return py::make_tuple(c.domain_start(), c.domain_end());
    });
    m.def("evaluate", [](const ControlPolygon& p, const std::vector<double>& ts) {
        const CurveEvaluator e(curve_of(p), 0);
        Points out;
        for (double t : ts) out.push_back(e.derivative(t, 0));
        return to_array(out, p.dim());
    }, py::arg("polygon"), py::arg("t"));
    m.def("curvature", [](const ControlPolygon& p, const std::vector<double>& ts) {
        const CurveEvaluator e(curve_of(p));
        std::vector<double> out;
        for (double t : ts) out.push_back(frenet(e, t).curvature);
        return out;
    }, py::arg("polygon"), py::arg("t"));
    m.def("max_evolute_deviation", [](const ControlPolygon& p, const std::vector<double>& center, int samples) {
        const EvoluteDeviation d = max_evolute_deviation(curve_of(p), to_vec(center), samples);
        return py::make_tuple(d.deviation, d.argmax_t);
    }, py::arg("polygon"), py::arg("center") = std::vector<double>{0.0, 0.0}, py::arg("samples_per_segment") = kDefaultSamplesPerSegment);
    m.def("discrete_curvature", [](const ControlPolygon& p) {
        std::vector<double> out;
        for (const auto& v : discrete_geometry(p).vertices) out.push_back(v.curvature);
        return out;
    });

    m.def("mineur_farin", [](double q, double theta_deg, int count, int degree, double first_leg, double twist_deg) {
        MineurFarinParams mf;
        mf.ratio = q;
        mf.turn = theta_deg * kDegree;
        mf.count = count;
        mf.degree = degree;
        mf.first_leg = first_leg;
        mf.twist = twist_deg * kDegree;
        mf.dim = twist_deg != 0.0 ? 3 : 2;
        return mineur_farin_polygon(mf);
    }, py::arg("q"), py::arg("theta_deg"), py::arg("count"), py::arg("degree"), py::arg("first_leg") = 1.0,
          py::arg("twist_deg") = 0.0);
    m.def("join", [](const ControlPolygon& a, const ControlPolygon& b, const Array& bridge) {
        const Points pts = bridge.size() == 0 ? Points{} : to_points(bridge);
        return join_float_polygons(a, b, pts);
    }, py::arg("a"), py::arg("b"), py::arg("bridge") = Array());

    // Experiments return their JSON reports; the Python layer decodes them.
    m.def("circle_test_json", [](int degree, int samples) {
        CircleTestParams p;
        p.degree = degree;
        p.samples_per_segment = samples;
        return report_json(circle_test(p));
    }, py::arg("degree") = 9, py::arg("samples") = kDefaultSamplesPerSegment);
    m.def("perturb_test_json", [](int decimals) {
        PerturbParams p;
        p.decimals = decimals;
        return report_json(perturb_test(p));
    }, py::arg("decimals") = 3);
    m.def("fig2_compare_json", [](double q, double theta_deg, int count) {
        Fig2Params p;
        p.ratio = q;
        p.turn = theta_deg * kDegree;
        p.count = count;
        return report_json(fig2_compare(p));
    }, py::arg("q") = 2.0, py::arg("theta_deg") = 90.0, py::arg("count") = 5);
    m.def("spiral_approx_json", [](int degree, double s0, double step, int count) {
        SpiralParams p;
        p.degree = degree;
        p.s0 = s0;
        p.step = step;
        p.count = count;
        return report_json(spiral_approx(p));
    }, py::arg("degree") = 8, py::arg("s0") = 0.0, py::arg("step") = 1.0, py::arg("count") = 20);
    m.def("position_dodecagon_json", []() { return report_json(dodecagon_positioning_task().result); });
}
