#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>

#include "hagge/kernel.hpp"

namespace hagge {

using Mat3 = std::array<std::array<Scalar, 3>, 3>;

PPoint apply(const Mat3& h, const PPoint& p);

/// Conic a·x² + b·xy + c·y² + d·xw + e·yw + f·w² = 0, i.e. pᵀMp = 0 with
/// M = [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]]. Coefficients are kept
/// as coprime integers with the first nonzero one positive, so proportional
/// equations compare equal.
class Conic {
 public:
  explicit Conic(std::array<Scalar, 6> coeffs);
  static Conic from_circle(const Circle& c);

  const std::array<Scalar, 6>& coeffs() const { return k_; }
  Mat3 matrix() const;
  QuadraticForm form() const { return QuadraticForm{k_}; }

  Scalar eval(const PPoint& p) const { return form().eval(p); }
  bool contains(const PPoint& p) const { return is_zero(eval(p)); }

  /// det M; zero for line pairs.
  Scalar determinant() const;
  /// b² − 4ac; negative for ellipses, positive for hyperbolas.
  Scalar discriminant() const { return k_[1] * k_[1] - 4 * k_[0] * k_[2]; }
  /// "ellipse", "parabola", "hyperbola" or "degenerate"; cosmetic only.
  std::string kind() const;

  /// Image of the zero set under p ↦ H·p, given H⁻¹: M' = H⁻ᵀ M H⁻¹.
  Conic transformed(const Mat3& h_inverse) const;

  std::string str() const;

  friend bool operator==(const Conic& a, const Conic& b) { return a.k_ == b.k_; }

 private:
  std::array<Scalar, 6> k_;
};

inline bool conic_contains(const Conic& c, const PPoint& p) { return c.contains(p); }

Conic conic_through_5(std::span<const PPoint, 5> pts);

PPoint second_intersection_line_conic(const PLine& ln, const Conic& c, const PPoint& known);

/// The second factor of a conic known to contain `factor` as a component.
/// Throws TangentialDegeneracy if the conic does not split that way.
PLine residual_line(const Conic& split, const PLine& factor);

/// Core pencil step. `chord_point` lies on `chord`, which joins two common
/// points of c1 and c2; the pencil member through `chord_point` splits into
/// `chord` and a residual line through `known` and the remaining common
/// point, which is returned.
PPoint pencil_residual_point(const Conic& c1, const Conic& c2, const PLine& chord, const PPoint& chord_point,
                             const PPoint& known);

/// Fourth common point of two conics through three given common points.
PPoint fourth_intersection(const Conic& c1, const Conic& c2, const std::array<PPoint, 3>& shared);

/// Second common point of two circles via the pencil route: the shared
/// chord is the line at infinity (through the circular points), so the
/// residual line is the common chord through `known`.
PPoint fourth_intersection_circles(const Circle& c1, const Circle& c2, const PPoint& known);

/// Projective parameter [t : 1], or [1 : 0] for the designated infinite value.
class ParamPoint {
 public:
  static ParamPoint finite(Scalar t) { return ParamPoint(std::move(t), Scalar(1)); }
  static ParamPoint infinity() { return ParamPoint(Scalar(1), Scalar(0)); }

  bool is_infinite() const { return is_zero(den_); }
  /// Throws PointAtInfinity for the infinite parameter.
  Scalar value() const;
  const Scalar& num() const { return num_; }
  const Scalar& den() const { return den_; }
  std::string str() const { return is_infinite() ? "inf" : to_string(value()); }

  friend bool operator==(const ParamPoint& a, const ParamPoint& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  ParamPoint(Scalar n, Scalar d) : num_(std::move(n)), den_(std::move(d)) {}
  Scalar num_, den_;
};

/// Pairing l·hk + m(h + k) + n = 0 with m² ≠ nl.
class Involution {
 public:
  Involution(Scalar l, Scalar m, Scalar n);

  const Scalar& l() const { return l_; }
  const Scalar& m() const { return m_; }
  const Scalar& n() const { return n_; }

  ParamPoint partner(const ParamPoint& h) const;
  Scalar pairing(const Scalar& h, const Scalar& k) const { return l_ * h * k + m_ * (h + k) + n_; }

 private:
  Scalar l_, m_, n_;
};

using ParamPair = std::pair<ParamPoint, ParamPoint>;

/// det of rows (hk, h + k, 1); zero iff the pairs share an involution.
Scalar involution_residual(const std::array<std::pair<Scalar, Scalar>, 3>& pairs);
/// Homogeneous rows (h₀k₀, h₀k₁ + h₁k₀, h₁k₁), the limit form for infinite
/// parameters.
Scalar involution_residual(const std::array<ParamPair, 3>& pairs);

Involution involution_fit(const std::array<std::pair<Scalar, Scalar>, 2>& pairs);
Involution involution_fit(const std::array<ParamPair, 2>& pairs);

struct PascalResult {
  PPoint first;   ///< side 12 ∧ side 45
  PPoint second;  ///< side 23 ∧ side 56
  PPoint third;   ///< side 34 ∧ side 61
  PLine line;
  Scalar residual;  ///< collinear(first, second, third)
};

PascalResult pascal_line(const std::array<PPoint, 6>& hexagon, const Conic& carrier);

}  // namespace hagge
