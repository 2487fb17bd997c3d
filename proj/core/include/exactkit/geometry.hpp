#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exactkit/rational.hpp"

namespace exactkit {

struct Vec3 {
  Rational x;
  Rational y;
  Rational z;

  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
  const Rational& operator[](std::size_t i) const { return i == 0 ? x : i == 1 ? y : z; }
  Rational& operator[](std::size_t i) { return i == 0 ? x : i == 1 ? y : z; }
  /// "(x, y, z)"
  std::string str() const;
  static Vec3 parse(std::string_view text);

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend Vec3 operator*(const Rational& k, const Vec3& a) { return {k * a.x, k * a.y, k * a.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Rational norm_sq(const Vec3& a);
double norm(const Vec3& a);
/// Angle in [0, pi]. Throws ZeroVector.
double angle(const Vec3& a, const Vec3& b);
/// Scalar projection of a onto b, (a.b)/|b|. Throws ZeroVector.
double proj_scalar(const Vec3& a, const Vec3& b);

/// (a x b) . c
Rational mixed(const Vec3& a, const Vec3& b, const Vec3& c);
bool coplanar(const Vec3& a, const Vec3& b, const Vec3& c);
bool collinear(const Vec3& a, const Vec3& b);
bool lin_indep(const Vec3& a, const Vec3& b, const Vec3& c);

/// Coefficients of target in a basis of two or three vectors. Throws
/// DependentBasis, or NotInSpan when a 2-basis does not reach the target.
std::vector<Rational> decompose(const Vec3& target, const std::vector<Vec3>& basis);

/// |a x b|^2
Rational parallelogram_area_sq(const Vec3& a, const Vec3& b);
double triangle_area(const Vec3& p1, const Vec3& p2, const Vec3& p3);
/// |(a x b) . c|
Rational parallelepiped_volume(const Vec3& a, const Vec3& b, const Vec3& c);

struct TriangleMeasures {
  /// Squared sides opposite each vertex: a = |BC|^2, b = |CA|^2, c = |AB|^2.
  Rational side_sq_a, side_sq_b, side_sq_c;
  Rational area_sq;
  double area = 0;
  double perimeter = 0;
  /// Interior angles at A, B, C in radians.
  double angle_a = 0, angle_b = 0, angle_c = 0;
  /// Squared altitudes from each vertex.
  Rational height_sq_a, height_sq_b, height_sq_c;
};

/// Throws Degenerate for collinear vertices.
TriangleMeasures triangle_measures(const Vec3& a, const Vec3& b, const Vec3& c);

struct TetraMeasures {
  Rational volume;
  Rational parallelepiped_volume;
  /// Squared height from the fourth vertex onto the face of the first three.
  Rational height_sq;
  double height = 0;
};

/// Throws Degenerate when the four points are coplanar.
TetraMeasures tetra_measures(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

/// Ax + By + Cz + D = 0 with (A, B, C) != 0.
struct Plane {
  Rational a, b, c, d;

  Plane(Rational a, Rational b, Rational c, Rational d);
  Vec3 normal() const { return {a, b, c}; }
  Rational eval(const Vec3& p) const { return a * p.x + b * p.y + c * p.z + d; }
  bool contains(const Vec3& p) const { return eval(p).is_zero(); }
  /// Scaled to coprime integers with the first nonzero normal component positive.
  Plane normalized() const;
  /// "7x - y + 5z - 6 = 0"
  std::string str() const;
  /// "A B C D"
  static Plane parse(std::string_view text);

  friend bool operator==(const Plane&, const Plane&) = default;
};

/// A(x - x0) + B(y - y0) + C(z - z0) = 0.
Plane plane_point_normal(const Vec3& point, const Vec3& normal);
/// Normalized plane through three points. Throws CollinearPoints.
Plane plane_three_points(const Vec3& p1, const Vec3& p2, const Vec3& p3);

/// x/l + y/m + z/n = 1
struct SegmentForm {
  Rational l, m, n;
};

struct HesseForm {
  double cos_a = 0, cos_b = 0, cos_g = 0;
  double p = 0;
  Rational p_sq;
};

struct PlaneParametric {
  Vec3 point;
  Vec3 u;
  Vec3 v;
};

/// Throws ZeroCoefficient when any of A, B, C, D is zero.
SegmentForm segment_form(const Plane& p);
HesseForm hesse_form(const Plane& p);
PlaneParametric parametric_form(const Plane& p);

struct Distance {
  Rational d_sq;
  double d = 0;
};

Distance point_plane_distance(const Vec3& pt, const Plane& p);

/// point + t * dir with dir != 0.
struct Line {
  Vec3 point;
  Vec3 dir;

  Line(Vec3 point, Vec3 dir);
  Vec3 at(const Rational& t) const { return point + t * dir; }
  bool contains(const Vec3& p) const;
  /// Canonical form "(x - 1)/2 = y/3 = (z + 1)/-1"; a zero direction component
  /// is written as a separate "x = x0" equation.
  std::string str() const;
  /// "point=(..) dir=(..)" or the canonical form.
  static Line parse(std::string_view text);

  friend bool operator==(const Line&, const Line&) = default;
};

/// Throws CoincidentPoints.
Line line_two_points(const Vec3& p1, const Vec3& p2);
/// Direction n1 x n2 anchored by zeroing the coordinate with the largest
/// |dir| component. Throws ParallelPlanes.
Line line_from_planes(const Plane& p1, const Plane& p2);

struct PlanesRelation {
  double cos_angle = 0;
  double angle = 0;
  bool parallel = false;
  bool perpendicular = false;
  bool identical = false;
  std::optional<Line> intersection;
};

PlanesRelation planes_relation(const Plane& p1, const Plane& p2);

enum class LinesKind { Identical, Parallel, Intersecting, Skew };
std::string_view to_string(LinesKind k);

struct LinesRelation {
  LinesKind kind = LinesKind::Skew;
  double cos_angle = 0;
  double angle = 0;
  bool perpendicular = false;
  std::optional<Vec3> point;
  /// Distance between parallel or skew lines.
  std::optional<Distance> distance;
};

LinesRelation lines_relation(const Line& l1, const Line& l2);

Distance point_line_distance(const Vec3& pt, const Line& l);

enum class LinePlaneKind { ParallelDisjoint, Contained, Intersecting };
std::string_view to_string(LinePlaneKind k);

struct LinePlaneRelation {
  LinePlaneKind kind = LinePlaneKind::ParallelDisjoint;
  bool perpendicular = false;
  std::optional<Rational> parameter;
  std::optional<Vec3> point;
  /// sin phi = (Al + Bm + Cn) / (|n| |dir|)
  double sin_angle = 0;
};

LinePlaneRelation line_plane_relation(const Line& l, const Plane& p);

}  // namespace exactkit
