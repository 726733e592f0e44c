#pragma once

#include <vector>

#include "spoly/geometry.hpp"

namespace spoly {

enum class ConversionDirection { FloatToClamped, ClampedToFloat, SegmentExtraction };

const char* to_string(ConversionDirection d);

/// What a conversion did and how well-conditioned it was. A ratio of 0 means
/// only convex (dividing) steps were used.
struct ConversionReport {
    ConversionDirection direction = ConversionDirection::FloatToClamped;
    std::vector<double> inserted_knots;
    std::vector<double> removed_knots;
    double max_extrapolation_ratio = 0.0;
};

struct ConversionResult {
    ControlPolygon polygon;
    ConversionReport report;
};

/// Boehm insertion of one knot. Every new vertex is a convex combination of two
/// old ones.
BSplineCurve insert_knot(const BSplineCurve& curve, double t);

/// Raise the end knots of any curve to multiplicity degree+1 and drop the
/// vertices that no longer influence the domain.
BSplineCurve clamp_ends(const BSplineCurve& curve, ConversionReport* report = nullptr);

/// Float polygon -> closed (clamped) polygon over the same parameterization.
ConversionResult to_clamped(const ControlPolygon& polygon);

/// Clamped polygon with uniformly spaced simple interior knots -> the unique
/// float polygon of the same curve, by peeling the left end fully and then the
/// right end. No regularization: conditioning is reported, not hidden.
ConversionResult to_float(const ControlPolygon& polygon);

/// One clamped B-polygon per polynomial span, in parameter order.
std::vector<ControlPolygon> extract_bezier_segments(const BSplineCurve& curve);

} // namespace spoly
