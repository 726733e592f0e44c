#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "spoly/constructors.hpp"
#include "spoly/format_convert.hpp"
#include "spoly/geometry.hpp"
#include "spoly/positioning.hpp"
#include "spoly/shape_metrics.hpp"
#include "spoly/spline_eval.hpp"

namespace spoly {

inline constexpr double kDegree = std::numbers::pi / 180.0;

// ---- circle approximation ---------------------------------------------------

struct CircleTestParams {
    int degree = 9;
    int vertex_count = 0;  // 0: 6 for degree 3, otherwise 12
    double radius = 10.0;
    double start_angle = 225.0 * kDegree;
    Orientation orientation = Orientation::Cw;
    int samples_per_segment = kDefaultSamplesPerSegment;
};

struct CircleTestResult {
    int degree = 0;
    int vertex_count = 0;
    double radius = 0.0;
    ControlPolygon polygon;
    double effective_radius = 0.0;  // distance of the curve's span ends from the centre
    EvoluteDeviation bspline;
    // Bezier arc over one span, endpoints on the effective circle.
    ControlPolygon bezier;
    EvoluteDeviation bezier_deviation;
    // Same arc with the endpoints pushed out to the nominal radius.
    ControlPolygon bezier_nominal;
    EvoluteDeviation bezier_nominal_deviation;
};

CircleTestResult circle_test(const CircleTestParams& params);

// ---- unclamping sensitivity -------------------------------------------------

struct PerturbParams {
    int vertex = 1;    // clamped vertex to coarsen
    int decimals = 3;  // digits kept, truncating toward zero
    int samples_per_segment = kDefaultSamplesPerSegment;
};

struct PerturbResult {
    ControlPolygon float_polygon;    // ten dodecagon vertices, one span
    ControlPolygon clamped_polygon;  // its B-polygon
    ControlPolygon perturbed_float;
    std::vector<double> leg_lengths;
    std::vector<double> turning_angles;
    double baseline_deviation = 0.0;
    double roundtrip_error = 0.0;
    double max_extrapolation_ratio = 0.0;
    Vec3 original_vertex = Vec3::Zero();
    Vec3 coarsened_vertex = Vec3::Zero();
    double perturbation = 0.0;
    Points displacements;
    double max_displacement = 0.0;
    double amplification = 0.0;
    double perturbed_deviation = 0.0;
};

PerturbResult perturb_test(const PerturbParams& params = {});

// ---- Bezier vs B-spline on a Mineur-Farin polygon ----------------------------

struct Fig2Params {
    double ratio = 2.0;
    double turn = 90.0 * kDegree;
    int count = 5;
    int samples = kDefaultSamplesPerSegment;
    double noise_floor = kDefaultNoiseFloor;
};

struct CurvatureVerdict {
    CurvatureProfile profile;
    ShapeSignature signature;
    bool monotone = false;
    bool constant = false;         // relative spread below the noise floor
    double relative_spread = 0.0;  // (max kappa - min kappa) / max kappa
};

struct Fig2Result {
    ControlPolygon polygon;
    ControlPolygon bezier;
    CurvatureVerdict bezier_curvature;
    CurvatureVerdict bspline_curvature;
};

Fig2Result fig2_compare(const Fig2Params& params = {});

// ---- conical spiral approximation -------------------------------------------

struct SpiralParams {
    int degree = 8;
    double s0 = 0.0;
    double step = 1.0;
    int count = 20;
    int samples_per_segment = 400;
    double noise_floor = kDefaultNoiseFloor;
};

struct QuantityComparison {
    std::string name;
    SampledFunction spiral;
    SampledFunction spline;
    ShapeSignature spiral_signature;
    ShapeSignature spline_signature;
    bool equivalent = false;
};

struct SpiralResult {
    ControlPolygon polygon;
    double s_start = 0.0;  // spiral parameter range matched to the spline domain
    double s_end = 0.0;
    CurvatureProfile spiral_profile;
    CurvatureProfile spline_profile;
    std::vector<QuantityComparison> quantities;  // kappa, tau, kappa2, kappa_tau2

    bool all_equivalent() const;
};

SpiralResult spiral_approx(const SpiralParams& params = {});

// ---- positioning -----------------------------------------------------------

/// Targets for both ends on the nominal circle: same polar angle as the
/// curve's current end points, circle tangents in the direction of travel.
std::vector<EndTarget> circle_targets(const ControlPolygon& polygon, double radius, Orientation orientation);

struct PositioningTask {
    ControlPolygon initial;
    std::vector<EndTarget> targets;
    HarmonicitySpec spec;
    PositioningOptions options;
    PositioningResult result;
    double radius = 0.0;
};

/// Degree-9 dodecagon polygon whose curve ends are pulled onto the R = 10
/// circle. End blocks are 6 vertices so the two blocks do not overlap.
PositioningOptions dodecagon_positioning_options();
HarmonicitySpec dodecagon_harmonicity_spec();
PositioningTask dodecagon_positioning_task(const PositioningOptions& options = dodecagon_positioning_options());

// ---- composites --------------------------------------------------------------

struct KnotJumps {
    double knot = 0.0;
    std::vector<double> jumps;  // orders 1..degree
};

struct JoinResult {
    ControlPolygon polygon;
    int bridge_count = 0;
    bool default_bridge = false;
    std::vector<KnotJumps> knots;       // every interior knot of the composite
    std::vector<double> max_jump;       // per order over all knots
};

JoinResult join_experiment(const ControlPolygon& a, const ControlPolygon& b, const std::optional<Points>& bridge,
                           int default_bridge_count = 2);

// ---- typical curves ---------------------------------------------------------

struct TypicalResult {
    ControlPolygon polygon;
    CurvatureVerdict curvature;
    HarmonicityReport harmonicity;
    std::optional<CurvatureVerdict> torsion;
};

TypicalResult typical_curve(const MineurFarinParams& params, int samples, double noise_floor = kDefaultNoiseFloor);

// ---- conversion -------------------------------------------------------------

struct ConvertResult {
    ControlPolygon input;
    ConversionResult converted;
    double roundtrip_error = 0.0;  // max vertex distance after converting back
    double scale = 0.0;            // largest vertex distance from the origin
};

ConvertResult convert_polygon(const ControlPolygon& polygon);

// ---- reports ----------------------------------------------------------------

std::string report_json(const CircleTestResult& r);
std::string report_json(const PerturbResult& r);
std::string report_json(const Fig2Result& r);
std::string report_json(const SpiralResult& r);
std::string report_json(const PositioningResult& r);
std::string report_json(const JoinResult& r);
std::string report_json(const TypicalResult& r);
std::string report_json(const ConvertResult& r);

} // namespace spoly
