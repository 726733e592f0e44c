#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "spoly/format_convert.hpp"
#include "spoly/geometry.hpp"
#include "spoly/shape_metrics.hpp"
#include "spoly/spline_eval.hpp"

namespace spoly {

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// {"degree", "format", "dim", "points", "knots" (clamped only)}; doubles are
/// written with round-trip precision.
std::string polygon_to_json(const ControlPolygon& polygon);
ControlPolygon polygon_from_json(const std::string& text);

/// A bare JSON array of points, or an object with a "points" member.
Points points_from_json(const std::string& text);

/// Header t,s,kappa,tau; tau is left empty for planar profiles.
std::string profile_csv(const CurvatureProfile& profile);

/// Header s,f.
std::string sampled_csv(const SampledFunction& f);

std::string signature_json(const ShapeSignature& signature);
std::string conversion_report_json(const ConversionReport& report);

struct SvgOptions {
    int samples = 400;
    bool polygon = true;
    bool evolute = true;
    bool comb = true;
    double comb_scale = 0.0;  // <= 0: chosen from the curve's extent
    int comb_teeth = 80;
};

/// Plan view (x, y) of a curve with its control polygon, evolute trace and
/// curvature comb.
std::string curve_svg(const BSplineCurve& curve, const SvgOptions& options = {});

/// Plan view of several polylines, each with its own stroke colour.
struct SvgPolyline {
    Points points;
    std::string color = "#000";
    double width = 1.0;
};
std::string polylines_svg(const std::vector<SvgPolyline>& lines);

std::string read_text(const std::filesystem::path& path);

/// Write to a temporary sibling and rename over the target, so a failed write
/// never leaves a partial file behind.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace spoly
