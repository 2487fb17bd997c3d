#include "exactkit/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "exactkit/error.hpp"

namespace exactkit {

namespace {

double sqrt_of(const Rational& r) { return std::sqrt(r.to_double()); }

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

void require_nonzero(const Vec3& v, const char* what) {
  if (v.is_zero()) fail(ErrorCode::ZeroVector, what);
}

}  // namespace

std::string Vec3::str() const { return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")"; }

Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Rational norm_sq(const Vec3& a) { return dot(a, a); }
double norm(const Vec3& a) { return sqrt_of(norm_sq(a)); }

double angle(const Vec3& a, const Vec3& b) {
  require_nonzero(a, "angle with the null vector is undefined");
  require_nonzero(b, "angle with the null vector is undefined");
  return std::acos(clamp_unit(dot(a, b).to_double() / std::sqrt((norm_sq(a) * norm_sq(b)).to_double())));
}

double proj_scalar(const Vec3& a, const Vec3& b) {
  require_nonzero(b, "projection onto the null vector");
  if (a.is_zero()) fail(ErrorCode::ZeroVector, "projection of the null vector");
  return dot(a, b).to_double() / norm(b);
}

Rational mixed(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(cross(a, b), c); }
bool coplanar(const Vec3& a, const Vec3& b, const Vec3& c) { return mixed(a, b, c).is_zero(); }
bool collinear(const Vec3& a, const Vec3& b) { return cross(a, b).is_zero(); }
bool lin_indep(const Vec3& a, const Vec3& b, const Vec3& c) { return !coplanar(a, b, c); }

std::vector<Rational> decompose(const Vec3& target, const std::vector<Vec3>& basis) {
  if (basis.size() == 3) {
    const Rational d = mixed(basis[0], basis[1], basis[2]);
    if (d.is_zero()) fail(ErrorCode::DependentBasis, "basis vectors are coplanar");
    // Cramer's rule on the columns of the basis.
    return {mixed(target, basis[1], basis[2]) / d, mixed(basis[0], target, basis[2]) / d,
            mixed(basis[0], basis[1], target) / d};
  }
  if (basis.size() == 2) {
    const Vec3 n = cross(basis[0], basis[1]);
    if (n.is_zero()) fail(ErrorCode::DependentBasis, "basis vectors are collinear");
    if (!dot(n, target).is_zero()) fail(ErrorCode::NotInSpan, "target is not coplanar with the basis");
    const Rational nn = norm_sq(n);
    return {dot(cross(target, basis[1]), n) / nn, dot(cross(basis[0], target), n) / nn};
  }
  fail(ErrorCode::DependentBasis, "a basis needs two or three vectors");
}

Rational parallelogram_area_sq(const Vec3& a, const Vec3& b) { return norm_sq(cross(a, b)); }

double triangle_area(const Vec3& p1, const Vec3& p2, const Vec3& p3) {
  return sqrt_of(parallelogram_area_sq(p2 - p1, p3 - p1)) / 2;
}

Rational parallelepiped_volume(const Vec3& a, const Vec3& b, const Vec3& c) { return mixed(a, b, c).abs(); }

TriangleMeasures triangle_measures(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Rational par_sq = parallelogram_area_sq(b - a, c - a);
  if (par_sq.is_zero()) fail(ErrorCode::Degenerate, "vertices are collinear");
  TriangleMeasures t;
  t.side_sq_a = norm_sq(c - b);
  t.side_sq_b = norm_sq(a - c);
  t.side_sq_c = norm_sq(b - a);
  t.area_sq = par_sq / 4;
  t.area = sqrt_of(t.area_sq);
  t.perimeter = sqrt_of(t.side_sq_a) + sqrt_of(t.side_sq_b) + sqrt_of(t.side_sq_c);
  t.angle_a = angle(b - a, c - a);
  t.angle_b = angle(a - b, c - b);
  t.angle_c = angle(a - c, b - c);
  // h = 2P / side, so h^2 = |AB x AC|^2 / side^2.
  t.height_sq_a = par_sq / t.side_sq_a;
  t.height_sq_b = par_sq / t.side_sq_b;
  t.height_sq_c = par_sq / t.side_sq_c;
  return t;
}

TetraMeasures tetra_measures(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const Rational vp = parallelepiped_volume(b - a, c - a, d - a);
  if (vp.is_zero()) fail(ErrorCode::Degenerate, "points are coplanar");
  TetraMeasures t;
  t.parallelepiped_volume = vp;
  t.volume = vp / 6;
  t.height_sq = vp * vp / parallelogram_area_sq(b - a, c - a);
  t.height = sqrt_of(t.height_sq);
  return t;
}

Plane::Plane(Rational a_, Rational b_, Rational c_, Rational d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (a.is_zero() && b.is_zero() && c.is_zero()) fail(ErrorCode::ZeroVector, "plane normal must be nonzero");
}

Plane Plane::normalized() const {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  Int den = 1;
  for (const Rational* r : {&a, &b, &c, &d}) den = lcm(den, r->den());
  Int g = 0;
  for (const Rational* r : {&a, &b, &c, &d}) g = gcd(g, r->num() * (den / r->den()));
  Rational k(den, g);
  const Rational& lead = !a.is_zero() ? a : !b.is_zero() ? b : c;
  if (lead.sign() < 0) k = -k;
  return Plane(k * a, k * b, k * c, k * d);
}

std::string Plane::str() const {
  std::string out;
  auto term = [&out](const Rational& coef, const char* var) {
    if (coef.is_zero()) return;
    const Rational mag = coef.abs();
    if (out.empty()) {
      if (coef.sign() < 0) out += "-";
    } else {
      out += coef.sign() < 0 ? " - " : " + ";
    }
    if (mag != Rational(1) || var[0] == '\0') out += mag.str();
    out += var;
  };
  term(a, "x");
  term(b, "y");
  term(c, "z");
  term(d, "");
  return out + " = 0";
}

Plane plane_point_normal(const Vec3& point, const Vec3& normal) {
  return Plane(normal.x, normal.y, normal.z, -dot(normal, point));
}

Plane plane_three_points(const Vec3& p1, const Vec3& p2, const Vec3& p3) {
  const Vec3 n = cross(p2 - p1, p3 - p1);
  if (n.is_zero()) fail(ErrorCode::CollinearPoints, "the three points are collinear");
  return plane_point_normal(p1, n).normalized();
}

SegmentForm segment_form(const Plane& p) {
  if (p.a.is_zero() || p.b.is_zero() || p.c.is_zero() || p.d.is_zero()) {
    fail(ErrorCode::ZeroCoefficient, "segment form needs A, B, C, D all nonzero");
  }
  return {-p.d / p.a, -p.d / p.b, -p.d / p.c};
}

HesseForm hesse_form(const Plane& p) {
  const Vec3 n = p.normal();
  int sign = 1;
  if (!p.d.is_zero()) {
    sign = p.d.sign() > 0 ? -1 : 1;
  } else {
    const Rational& lead = !n.x.is_zero() ? n.x : !n.y.is_zero() ? n.y : n.z;
    sign = lead.sign();
  }
  const Rational nn = norm_sq(n);
  const double len = sqrt_of(nn) * sign;
  HesseForm h;
  h.cos_a = n.x.to_double() / len;
  h.cos_b = n.y.to_double() / len;
  h.cos_g = n.z.to_double() / len;
  h.p_sq = p.d * p.d / nn;
  h.p = sqrt_of(h.p_sq);
  return h;
}

PlaneParametric parametric_form(const Plane& p) {
  const Vec3 n = p.normal();
  // Foot of the perpendicular from the origin.
  const Vec3 point = (-p.d / norm_sq(n)) * n;
  // Cross with the axis where the normal is smallest so u is never zero.
  std::size_t axis = 0;
  for (std::size_t k = 1; k < 3; ++k) {
    if (n[k].abs() < n[axis].abs()) axis = k;
  }
  Vec3 e;
  e[axis] = 1;
  const Vec3 u = cross(n, e);
  return {point, u, cross(n, u)};
}

Distance point_plane_distance(const Vec3& pt, const Plane& p) {
  const Rational v = p.eval(pt);
  Distance out;
  out.d_sq = v * v / norm_sq(p.normal());
  out.d = sqrt_of(out.d_sq);
  return out;
}

Line::Line(Vec3 p, Vec3 d) : point(std::move(p)), dir(std::move(d)) {
  require_nonzero(dir, "line direction must be nonzero");
}

bool Line::contains(const Vec3& p) const { return cross(p - point, dir).is_zero(); }

std::string Line::str() const {
  static constexpr const char* kNames[] = {"x", "y", "z"};
  std::vector<std::string> ratios;
  std::vector<std::string> fixed;
  for (std::size_t k = 0; k < 3; ++k) {
    const Rational& p0 = point[k];
    std::string num = kNames[k];
    if (!p0.is_zero()) {
      num = std::string("(") + kNames[k] + (p0.sign() > 0 ? " - " : " + ") + p0.abs().str() + ")";
    }
    if (dir[k].is_zero()) {
      fixed.push_back(std::string(kNames[k]) + " = " + p0.str());
    } else {
      ratios.push_back(num + "/" + dir[k].str());
    }
  }
  std::string out;
  for (std::size_t i = 0; i < ratios.size(); ++i) out += (i ? " = " : "") + ratios[i];
  for (const auto& f : fixed) out += ", " + f;
  return out;
}

Line line_two_points(const Vec3& p1, const Vec3& p2) {
  if (p1 == p2) fail(ErrorCode::CoincidentPoints, "a line needs two distinct points");
  return Line(p1, p2 - p1);
}

Line line_from_planes(const Plane& p1, const Plane& p2) {
  const Vec3 dir = cross(p1.normal(), p2.normal());
  if (dir.is_zero()) fail(ErrorCode::ParallelPlanes, "parallel planes do not meet in a line");
  std::size_t zeroed = 0;
  for (std::size_t k = 1; k < 3; ++k) {
    if (dir[k].abs() > dir[zeroed].abs()) zeroed = k;
  }
  // The remaining 2x2 system has determinant +-dir[zeroed], nonzero by choice.
  const std::size_t i = zeroed == 0 ? 1 : 0;
  const std::size_t j = zeroed == 2 ? 1 : 2;
  const Vec3 n1 = p1.normal();
  const Vec3 n2 = p2.normal();
  const Rational det = n1[i] * n2[j] - n1[j] * n2[i];
  Vec3 anchor;
  anchor[i] = (-p1.d * n2[j] + p2.d * n1[j]) / det;
  anchor[j] = (-p2.d * n1[i] + p1.d * n2[i]) / det;
  return Line(anchor, dir);
}

PlanesRelation planes_relation(const Plane& p1, const Plane& p2) {
  const Vec3 n1 = p1.normal();
  const Vec3 n2 = p2.normal();
  PlanesRelation r;
  r.cos_angle = clamp_unit(dot(n1, n2).to_double() / std::sqrt((norm_sq(n1) * norm_sq(n2)).to_double()));
  r.angle = std::acos(r.cos_angle);
  r.parallel = cross(n1, n2).is_zero();
  r.perpendicular = dot(n1, n2).is_zero();
  if (r.parallel) {
    // Same plane iff (A, B, C, D) are proportional.
    const std::size_t k = !n1.x.is_zero() ? 0 : !n1.y.is_zero() ? 1 : 2;
    const Rational ratio = n2[k] / n1[k];
    r.identical = p2.d == ratio * p1.d;
  } else {
    r.intersection = line_from_planes(p1, p2);
  }
  return r;
}

std::string_view to_string(LinesKind k) {
  switch (k) {
    case LinesKind::Identical: return "identical";
    case LinesKind::Parallel: return "parallel";
    case LinesKind::Intersecting: return "intersecting";
    case LinesKind::Skew: return "skew";
  }
  return "unknown";
}

Distance point_line_distance(const Vec3& pt, const Line& l) {
  Distance out;
  out.d_sq = norm_sq(cross(l.dir, pt - l.point)) / norm_sq(l.dir);
  out.d = sqrt_of(out.d_sq);
  return out;
}

LinesRelation lines_relation(const Line& l1, const Line& l2) {
  LinesRelation r;
  const Rational dd = dot(l1.dir, l2.dir);
  r.cos_angle = clamp_unit(dd.to_double() / std::sqrt((norm_sq(l1.dir) * norm_sq(l2.dir)).to_double()));
  r.angle = std::acos(r.cos_angle);
  r.perpendicular = dd.is_zero();
  const Vec3 m1m2 = l2.point - l1.point;
  const Vec3 n = cross(l1.dir, l2.dir);
  if (n.is_zero()) {
    if (l1.contains(l2.point)) {
      r.kind = LinesKind::Identical;
      r.distance = Distance{};
    } else {
      r.kind = LinesKind::Parallel;
      r.distance = point_line_distance(l2.point, l1);
    }
    return r;
  }
  const Rational m = dot(n, m1m2);
  if (m.is_zero()) {
    r.kind = LinesKind::Intersecting;
    // l1.point + s dir1 = l2.point + t dir2, solved by crossing with dir2.
    const Rational s = dot(cross(m1m2, l2.dir), n) / norm_sq(n);
    r.point = l1.at(s);
    return r;
  }
  r.kind = LinesKind::Skew;
  Distance d;
  d.d_sq = m * m / norm_sq(n);
  d.d = sqrt_of(d.d_sq);
  r.distance = d;
  return r;
}

std::string_view to_string(LinePlaneKind k) {
  switch (k) {
    case LinePlaneKind::ParallelDisjoint: return "parallel";
    case LinePlaneKind::Contained: return "contained";
    case LinePlaneKind::Intersecting: return "intersecting";
  }
  return "unknown";
}

LinePlaneRelation line_plane_relation(const Line& l, const Plane& p) {
  const Vec3 n = p.normal();
  const Rational dn = dot(l.dir, n);
  LinePlaneRelation r;
  r.perpendicular = cross(l.dir, n).is_zero();
  r.sin_angle = clamp_unit(dn.to_double() / std::sqrt((norm_sq(l.dir) * norm_sq(n)).to_double()));
  if (dn.is_zero()) {
    r.kind = p.contains(l.point) ? LinePlaneKind::Contained : LinePlaneKind::ParallelDisjoint;
    return r;
  }
  r.kind = LinePlaneKind::Intersecting;
  r.parameter = -p.eval(l.point) / dn;
  r.point = l.at(*r.parameter);
  return r;
}

}  // namespace exactkit
