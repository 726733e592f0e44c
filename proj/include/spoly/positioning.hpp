#pragma once

#include <span>
#include <string>
#include <vector>

#include "spoly/geometry.hpp"
#include "spoly/shape_metrics.hpp"

namespace spoly {

enum class End { Start, Finish };
const char* to_string(End e);

/// Desired end point and unit tangent (direction of travel) at one end.
struct EndTarget {
    Vec3 endpoint = Vec3::Zero();
    Vec3 tangent_dir = Vec3::UnitX();
    End which_end = End::Start;
};

/// Difference between the actual and desired end conditions. `offset` moves the
/// actual end point onto the target; rotating the actual tangent by `angle`
/// about `axis` aligns it with the target tangent.
struct EndMismatch {
    Vec3 offset = Vec3::Zero();
    double angle = 0.0;  // (-pi, pi]
    Vec3 axis = Vec3::UnitZ();
    Vec3 target = Vec3::Zero();
};

/// Reads the end point and end tangent off the closed (clamped) form.
EndMismatch measure_end_mismatch(const ControlPolygon& polygon, const EndTarget& target);

/// Translate the m terminal vertices by the offset, then rotate them about the
/// target end point by the angle. m_count <= 0 means the degree; with that
/// choice a single correction is exact.
ControlPolygon apply_end_correction(const ControlPolygon& polygon, const EndMismatch& m, End end, int m_count = 0,
                                    double damping = 1.0);

struct PositioningOptions {
    double tol_pos = -1.0;  // negative: 1e-9 * polygon diameter
    double tol_ang = 1e-9;
    int max_iter = 100;
    bool fair = true;
    double fair_strength = 0.25;
    double damping = 1.0;
    int m_count = 0;        // <= 0: degree
};

struct EndStatus {
    End end = End::Start;
    double position_error = 0.0;
    double angle_error = 0.0;
};

struct PositioningReport {
    int iterations = 0;
    bool converged = false;
    std::vector<EndStatus> ends;
    bool harmonic = false;
    std::vector<std::string> harmonicity_reasons;
};

struct PositioningResult {
    ControlPolygon polygon;
    PositioningReport report;
};

/// Measure, correct both ends, optionally smooth the untouched interior, and
/// repeat until the ends are within tolerance and the polygon is harmonious.
/// On failure the best iterate is returned with converged = false.
PositioningResult position_endpoints(const ControlPolygon& polygon, std::span<const EndTarget> targets,
                                     const HarmonicitySpec& spec, const PositioningOptions& options = {});

/// One Laplacian smoothing pass over vertex indices [first, last].
ControlPolygon fair_interior(const ControlPolygon& polygon, int first, int last, double strength);

/// Concatenation a ++ bridge ++ b as one float polygon.
ControlPolygon join_float_polygons(const ControlPolygon& a, const ControlPolygon& b, std::span<const Vec3> bridge);

/// Heuristic bridge: `count` points blending the ray leaving a's last leg with
/// the ray entering b's first leg, spaced uniformly along the gap.
Points default_bridge(const ControlPolygon& a, const ControlPolygon& b, int count);

/// Relative one-sided derivative jumps at an interior knot for orders 1..max_order.
/// Each jump is |C^(k)(t0+) - C^(k)(t0-)| divided by the largest control point of
/// the order-k derivative spline.
std::vector<double> junction_smoothness_check(const BSplineCurve& curve, double t0, int max_order);

} // namespace spoly
