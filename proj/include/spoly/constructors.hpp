#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spoly/geometry.hpp"
#include "spoly/spline_eval.hpp"

namespace spoly {

/// Legs growing geometrically by q, turning by a constant angle, with an
/// optional constant twist about each new leg.
struct MineurFarinParams {
    double first_leg = 1.0;   // L0
    double ratio = 1.0;       // q, elongation coefficient
    double turn = 0.0;        // radians between consecutive legs
    double twist = 0.0;       // radians, 3D only
    int count = 2;            // vertices
    int degree = 1;           // degree of the resulting float polygon
    int dim = 2;
    Vec3 start = Vec3::Zero();
    Vec3 start_dir = Vec3::UnitX();
    Vec3 plane_normal = Vec3::UnitZ();  // turning axis of the first joint
};

ControlPolygon mineur_farin_polygon(const MineurFarinParams& p);

struct BezierArc {
    ControlPolygon polygon;
    std::optional<std::string> warning;
};

/// Degree-n B-polygon from A to B around a centre: equal legs, the first and
/// last along the circle tangents, turning uniformly by delta/(n-1) at each of
/// the n-1 joints. The result closes exactly on B.
BezierArc bezier_arc_polygon(const Vec3& a, const Vec3& b, const Vec3& center, int degree);

/// Closed-form curve with derivatives up to order 3.
struct AnalyticCurve {
    std::string name;
    int dim = 3;
    double domain_start = 0.0;
    double domain_end = 0.0;
    DerivativeFn eval;

    Vec3 point(double s) const { return eval(s)[0]; }
};

/// (2 + s sin s, 2 + s cos s, s).
AnalyticCurve conical_spiral();

/// Planar circle of the given radius about the origin, parameter = angle.
AnalyticCurve circle(double radius = 1.0);

/// Straight line from `origin` along `direction`.
AnalyticCurve line(const Vec3& origin, const Vec3& direction, int dim = 2);

/// Lookup by CLI name: "conical-spiral", "circle", "line".
AnalyticCurve analytic_curve_by_name(const std::string& name);
std::vector<std::string> analytic_curve_names();

struct SamplingSpec {
    double start = 0.0;
    double step = 1.0;
    int count = 2;
};

/// Float polygon with vertices c(start + k*step), k = 0..count-1.
ControlPolygon sample_analytic_to_polygon(const AnalyticCurve& c, const SamplingSpec& spec, int degree);

} // namespace spoly
