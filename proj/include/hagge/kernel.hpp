#pragma once

// Exact homogeneous geometry in the rational projective plane.
//
// Points and lines are stored as coprime integer triples with the first
// nonzero entry positive, so two objects are equal exactly when they
// describe the same projective element.

#include <array>
#include <string>

#include "hagge/error.hpp"
#include "hagge/scalar.hpp"

namespace hagge {

class PPoint {
 public:
  /// Throws GeomError(ZeroVector) for (0, 0, 0).
  PPoint(Scalar x, Scalar y, Scalar w);

  static PPoint affine(Scalar x, Scalar y) { return PPoint(std::move(x), std::move(y), Scalar(1)); }
  /// Point at infinity in direction (dx, dy).
  static PPoint direction(Scalar dx, Scalar dy) { return PPoint(std::move(dx), std::move(dy), Scalar(0)); }

  const Scalar& x() const { return c_[0]; }
  const Scalar& y() const { return c_[1]; }
  const Scalar& w() const { return c_[2]; }
  const std::array<Scalar, 3>& coords() const { return c_; }

  bool is_finite() const { return !is_zero(c_[2]); }

  /// Affine coordinates; throw GeomError(PointAtInfinity) when w = 0.
  Scalar ax() const;
  Scalar ay() const;

  std::string str() const;

  friend bool operator==(const PPoint& a, const PPoint& b) { return a.c_ == b.c_; }

 private:
  std::array<Scalar, 3> c_;
};

/// Line l·x + m·y + n·w = 0.
class PLine {
 public:
  PLine(Scalar l, Scalar m, Scalar n);

  const Scalar& l() const { return c_[0]; }
  const Scalar& m() const { return c_[1]; }
  const Scalar& n() const { return c_[2]; }
  const std::array<Scalar, 3>& coords() const { return c_; }

  bool is_at_infinity() const { return is_zero(c_[0]) && is_zero(c_[1]); }

  Scalar eval(const PPoint& p) const { return c_[0] * p.x() + c_[1] * p.y() + c_[2] * p.w(); }
  bool contains(const PPoint& p) const { return is_zero(eval(p)); }

  std::string str() const;

  friend bool operator==(const PLine& a, const PLine& b) { return a.c_ == b.c_; }

 private:
  std::array<Scalar, 3> c_;
};

/// Homogeneous quadratic a·x² + b·xy + c·y² + d·xw + e·yw + f·w², shared by
/// circles and general conics. Not normalized.
struct QuadraticForm {
  std::array<Scalar, 6> k;

  Scalar eval(const PPoint& p) const;
  /// Symmetric bilinear form with polar(p, p) == eval(p).
  Scalar polar(const PPoint& p, const PPoint& q) const;
};

/// The point other than `known` where `ln` meets the quadratic curve. Returns
/// `known` when the line is tangent there. Throws KnownPointNotIncident when
/// `known` is off either object, TangentialDegeneracy when the line lies
/// inside the curve.
PPoint second_point_on_quadratic(const QuadraticForm& q, const PLine& ln, const PPoint& known);

/// Circle cA(x² + y²) + cD·x + cE·y + cF = 0, normalized to cA = 1.
class Circle {
 public:
  /// Throws CollinearInput when cA = 0 (a line, not a circle) and
  /// ImaginaryCircle when the squared radius is negative.
  Circle(Scalar cA, Scalar cD, Scalar cE, Scalar cF);

  /// Circle with the given centre through `on`.
  static Circle centred_through(const PPoint& centre, const PPoint& on);

  const Scalar& cA() const { return a_; }
  const Scalar& cD() const { return d_; }
  const Scalar& cE() const { return e_; }
  const Scalar& cF() const { return f_; }

  PPoint centre() const;
  Scalar radius2() const;

  Scalar eval(const PPoint& p) const;
  bool contains(const PPoint& p) const { return is_zero(eval(p)); }

  QuadraticForm quadratic() const;
  std::string str() const;

  friend bool operator==(const Circle& a, const Circle& b) {
    return a.a_ == b.a_ && a.d_ == b.d_ && a.e_ == b.e_ && a.f_ == b.f_;
  }

 private:
  Scalar a_, d_, e_, f_;
};

// Predicates ---------------------------------------------------------------

/// 3×3 determinant of the canonical homogeneous rows; zero iff collinear.
Scalar collinear(const PPoint& p, const PPoint& q, const PPoint& r);
/// Same determinant with affine rows (x, y, 1). Requires finite points.
Scalar collinear_affine(const PPoint& p, const PPoint& q, const PPoint& r);
/// Determinant of the three coefficient rows; zero iff concurrent.
Scalar concurrent(const PLine& a, const PLine& b, const PLine& c);
/// 4×4 determinant with rows (x² + y², x, y, 1).
Scalar concyclic4(const PPoint& p1, const PPoint& p2, const PPoint& p3, const PPoint& p4);
/// Twice the signed area of the affine triangle.
Scalar orient2d(const PPoint& a, const PPoint& b, const PPoint& c);
/// Strict convexity of the quadrilateral a, b, c, d taken in that order.
bool convex_quad(const PPoint& a, const PPoint& b, const PPoint& c, const PPoint& d);

// Constructions ------------------------------------------------------------

PLine join(const PPoint& p, const PPoint& q);
PPoint meet(const PLine& a, const PLine& b);

Circle circle_through(const PPoint& p1, const PPoint& p2, const PPoint& p3);
/// Difference of the normalized equations; contains both common points.
PLine radical_line(const Circle& c1, const Circle& c2);

PPoint second_intersection_line_circle(const PLine& ln, const Circle& c, const PPoint& known);
PPoint second_intersection_circle_circle(const Circle& c1, const Circle& c2, const PPoint& known);

/// center + k·(p − center)/|p − center|².
PPoint invert_point(const PPoint& center, const Scalar& k, const PPoint& p);
PPoint point_reflection(const PPoint& center, const PPoint& p);
PPoint midpoint(const PPoint& p, const PPoint& q);
/// p + (dx, dy) for an affine p.
PPoint translate(const PPoint& p, const Scalar& dx, const Scalar& dy);
Scalar dist2(const PPoint& p, const PPoint& q);

PLine perpendicular_through(const PPoint& p, const PLine& ln);
PLine parallel_through(const PPoint& p, const PLine& ln);

}  // namespace hagge
