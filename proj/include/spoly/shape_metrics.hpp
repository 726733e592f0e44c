#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "spoly/geometry.hpp"
#include "spoly/spline_eval.hpp"

namespace spoly {

/// Central divided differences at one interior polygon vertex.
struct DiscreteVertex {
    int index = 0;
    Vec3 first = Vec3::Zero();   // (S[i+1] - S[i-1]) / 2
    Vec3 second = Vec3::Zero();  // S[i+1] - 2 S[i] + S[i-1]
    std::optional<Vec3> third;   // (S[i+2] - 2 S[i+1] + 2 S[i-1] - S[i-2]) / 2, 3D only
    double curvature = 0.0;      // |t x c| / |t|^3
    double signed_curvature = 0.0;  // planar: sign of the turn
    std::optional<double> torsion;
    bool degenerate = false;
};

struct DiscreteGeometry {
    int dim = 2;
    std::vector<DiscreteVertex> vertices;  // indices 1 .. count-2
};

DiscreteGeometry discrete_geometry(const ControlPolygon& polygon, double eps_reg = kRegularityEps);

/// Bounds that make the "harmonious, regular" polygon criterion concrete.
struct HarmonicitySpec {
    int max_curvature_sign_changes = 0;
    int max_monotone_runs = 1;
    double min_leg_length = 0.0;
    double max_turning_angle = std::numbers::pi;
};

enum class RunDirection { Constant, Increasing, Decreasing };
const char* to_string(RunDirection d);

/// Vertex-index range [start, end] over which the discrete curvature is monotone.
struct MonotoneRun {
    int start = 0;
    int end = 0;
    RunDirection direction = RunDirection::Constant;
};

struct HarmonicityReport {
    std::vector<double> leg_lengths;
    std::vector<double> turning_angles;
    std::vector<double> torsion_angles;  // 3D: dihedral angle between consecutive leg planes
    std::vector<double> discrete_curvatures;
    std::vector<MonotoneRun> monotone_runs;
    int sign_changes = 0;
    bool pass = false;
    std::vector<std::string> reasons;
};

inline constexpr double kPlateauTolerance = 1e-12;
inline constexpr double kDefaultNoiseFloor = 1e-6;

HarmonicityReport harmonicity_report(const ControlPolygon& polygon, const HarmonicitySpec& spec);

/// Maximal monotone runs of a sequence; steps below tol * max|v| count as flat.
std::vector<MonotoneRun> monotone_runs(const std::vector<double>& values, double tol = kPlateauTolerance);

/// f sampled on a strictly increasing grid s. low_confidence marks samples that
/// depend on one-sided differences.
struct SampledFunction {
    std::vector<double> s;
    std::vector<double> f;
    std::vector<bool> low_confidence;

    std::size_t size() const { return s.size(); }
};

SampledFunction make_sampled(std::vector<double> s, std::vector<double> f);

/// Curvature of the plane graph (s, f(s)): f'' / (1 + f'^2)^(3/2), by
/// three-point differences on the nonuniform grid.
SampledFunction graph_curvature(const SampledFunction& f);

enum class CurvatureSource { Curvature, Torsion };

/// Level 1 is kappa(s) or tau(s); level n applies graph_curvature to level n-1.
SampledFunction level_curvature(const CurvatureProfile& profile, CurvatureSource source, int level);

enum class EventKind { Max, Min, Inflection };
const char* to_string(EventKind k);

struct ShapeEvent {
    EventKind kind = EventKind::Max;
    double s = 0.0;
};

struct ShapeSignature {
    std::vector<ShapeEvent> events;

    std::size_t extremum_count() const;
    std::size_t inflection_count() const;
};

/// Extrema and inflections of a sampled function, in order of s. Events whose
/// persistence is below noise_floor times the function's range are dropped;
/// low-confidence samples are ignored.
ShapeSignature shape_signature(const SampledFunction& f, double noise_floor = kDefaultNoiseFloor);

/// Same number and order of extrema and inflections; locations are ignored.
bool shape_equivalent(const ShapeSignature& a, const ShapeSignature& b);

} // namespace spoly
