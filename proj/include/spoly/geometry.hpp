#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <span>
#include <vector>

#include "spoly/errors.hpp"

namespace spoly {

/// Points and vectors are stored in 3D; planar data keeps z = 0 and is
/// tagged dim = 2 by the owning container.
using Vec3 = Eigen::Vector3d;
using Points = std::vector<Vec3>;

enum class Format { Float, Clamped };
enum class Orientation { Cw, Ccw };

const char* to_string(Format f);

/// Nondecreasing knot sequence of a degree-n spline.
class KnotVector {
public:
    KnotVector(std::vector<double> knots, int degree);

    /// Knots 0, 1, ..., count + degree for an unclamped uniform polygon.
    static KnotVector uniform_float(int count, int degree);

    /// Multiplicity degree+1 at both ends of [a, b], interior knots as given.
    static KnotVector clamped(double a, double b, std::span<const double> interior, int degree);

    int degree() const { return degree_; }
    int size() const { return static_cast<int>(knots_.size()); }
    double operator[](int i) const { return knots_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return knots_; }

    int multiplicity(double t) const;
    bool is_uniform_float() const;
    bool is_clamped() const;

    bool operator==(const KnotVector&) const = default;

private:
    std::vector<double> knots_;
    int degree_;
};

class ControlPolygon {
public:
    /// Float-format polygon; knots 0..count+degree are implied.
    static ControlPolygon make_float(Points vertices, int degree, int dim);
    static ControlPolygon make_clamped(Points vertices, KnotVector knots, int dim);

    int degree() const { return degree_; }
    Format format() const { return format_; }
    int dim() const { return dim_; }
    const Points& vertices() const { return vertices_; }
    const Vec3& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(vertices_.size()); }

    /// Explicit knots: stored for clamped, generated for float.
    KnotVector knots() const;

    /// Number of polynomial spans (count - degree for float polygons).
    int segment_count() const;

    bool operator==(const ControlPolygon& o) const;

private:
    ControlPolygon(Points v, int degree, Format f, int dim, std::vector<double> knots);

    Points vertices_;
    int degree_;
    Format format_;
    int dim_;
    std::vector<double> knots_;  // empty for float
};

class BSplineCurve {
public:
    BSplineCurve(KnotVector knots, Points points, int dim);

    int degree() const { return knots_.degree(); }
    int dim() const { return dim_; }
    const KnotVector& knots() const { return knots_; }
    const Points& points() const { return points_; }
    int size() const { return static_cast<int>(points_.size()); }

    double domain_start() const { return knots_[degree()]; }
    double domain_end() const { return knots_[size()]; }
    bool in_domain(double t) const { return t >= domain_start() && t <= domain_end(); }

    /// Distinct knot values strictly inside the domain.
    std::vector<double> interior_knots() const;

private:
    KnotVector knots_;
    Points points_;
    int dim_;
};

/// N vertices of a regular polygon of circumradius R centred at the origin.
Points regular_polygon_vertices(int n, double radius, double start_angle, Orientation orientation);

ControlPolygon make_float_polygon(Points points, int degree, int dim = 2);

BSplineCurve curve_of(const ControlPolygon& polygon);

/// Inverse of curve_of: uniform 0..N+n knots give a float polygon, clamped knots a
/// clamped one. Anything else is rejected.
ControlPolygon polygon_of(const BSplineCurve& curve);

/// Largest distance between two vertices.
double diameter(std::span<const Vec3> points);

/// Largest distance of a vertex from the origin.
double max_radius(std::span<const Vec3> points);

} // namespace spoly
