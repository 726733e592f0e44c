#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "spoly/geometry.hpp"

namespace spoly {

inline constexpr double kRegularityEps = 1e-12;
inline constexpr double kCurvatureEps = 1e-12;
inline constexpr int kDefaultSamplesPerSegment = 10000;

/// Which polynomial piece to use when t sits exactly on an interior knot.
enum class Side { Left, Right };

/// Index k with knots[k] <= t < knots[k+1], restricted to nonempty spans of the domain.
/// At the right domain end the last nonempty span is returned.
int find_span(const BSplineCurve& curve, double t, Side side = Side::Right);

/// Curve point by the de Boor triangle of convex combinations.
Vec3 de_boor_point(const BSplineCurve& curve, double t);

/// Point and derivatives up to a fixed order, from precomputed derivative nets
/// (differenced control points on the trimmed knot vector).
class CurveEvaluator {
public:
    explicit CurveEvaluator(const BSplineCurve& curve, int max_order = 3);

    const BSplineCurve& curve() const { return curve_; }
    int max_order() const { return max_order_; }

    /// C(t) and its first three derivatives; orders above the degree or
    /// max_order are zero.
    std::array<Vec3, 4> evaluate(double t, Side side = Side::Right) const;

    /// Control points of the order-k derivative spline.
    const Points& net(int order) const { return nets_[static_cast<std::size_t>(order)]; }

    /// Single derivative of the given order (0 = point).
    Vec3 derivative(double t, int order, Side side = Side::Right) const;

private:
    BSplineCurve curve_;
    int max_order_;
    std::vector<Points> nets_;                 // control points of the k-th derivative spline
    std::vector<std::vector<double>> knots_;   // its knots: k trimmed from each end
};

/// [C, C', ..., C^(order)] at t. order must not exceed the degree or 3.
std::vector<Vec3> derivatives(const BSplineCurve& curve, double t, int order);

struct FrenetData {
    Vec3 point = Vec3::Zero();
    Vec3 velocity = Vec3::Zero();
    Vec3 acceleration = Vec3::Zero();
    Vec3 jerk = Vec3::Zero();
    double curvature = 0.0;
    std::optional<double> torsion;  // dim 3 only
    Vec3 tangent = Vec3::Zero();
    std::optional<Vec3> normal;     // absent where the curvature vanishes
};

/// Frenet data from raw derivatives; shared by splines and analytic curves.
FrenetData frenet_from_derivatives(const std::array<Vec3, 4>& d, int dim, double eps_reg = kRegularityEps);

FrenetData frenet(const BSplineCurve& curve, double t, double eps_reg = kRegularityEps);
FrenetData frenet(const CurveEvaluator& eval, double t, double eps_reg = kRegularityEps);

/// Centre of curvature C + N / kappa.
Vec3 evolute_point(const BSplineCurve& curve, double t, double eps_k = kCurvatureEps);
Vec3 evolute_point(const CurveEvaluator& eval, double t, double eps_k = kCurvatureEps);

struct EvoluteDeviation {
    double deviation = 0.0;
    double argmax_t = 0.0;
    Vec3 evolute = Vec3::Zero();
};

/// Largest distance between the evolute and a centre over the whole domain:
/// uniform-in-t scan then a golden-section pass around the discrete argmax.
/// Ties go to the smallest t.
EvoluteDeviation max_evolute_deviation(const BSplineCurve& curve, const Vec3& center,
                                       int samples_per_segment = kDefaultSamplesPerSegment);

struct ProfileSample {
    double t = 0.0;
    double s = 0.0;
    double kappa = 0.0;
    std::optional<double> tau;
};

struct CurvatureProfile {
    int dim = 2;
    double t_start = 0.0;
    double t_end = 0.0;
    std::vector<ProfileSample> samples;
};

/// Any parametric curve given by its derivatives up to order 3.
using DerivativeFn = std::function<std::array<Vec3, 4>(double)>;

/// Uniform-in-t samples; arc length by 5-point Gauss-Legendre on |C'| per interval.
CurvatureProfile sampled_profile(const DerivativeFn& fn, int dim, double t0, double t1, int sample_count);

CurvatureProfile profile(const BSplineCurve& curve, int sample_count);

/// Arc length of |C'| over [t0, t1] with `pieces` Gauss-Legendre panels.
double arc_length(const DerivativeFn& fn, double t0, double t1, int pieces = 1);

} // namespace spoly
