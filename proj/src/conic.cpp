#include "hagge/conic.hpp"

#include "hagge/linalg.hpp"

namespace hagge {

PPoint apply(const Mat3& h, const PPoint& p) {
  const auto& v = p.coords();
  std::array<Scalar, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = h[i][0] * v[0] + h[i][1] * v[1] + h[i][2] * v[2];
  return PPoint(out[0], out[1], out[2]);
}

Conic::Conic(std::array<Scalar, 6> coeffs) : k_(std::move(coeffs)) {
  if (!canonicalize_projective(k_)) throw GeomError(ErrorCode::ZeroVector, "conic with all-zero coefficients");
}

Conic Conic::from_circle(const Circle& c) { return Conic(c.quadratic().k); }

Mat3 Conic::matrix() const {
  return {{{k_[0], k_[1] / 2, k_[3] / 2}, {k_[1] / 2, k_[2], k_[4] / 2}, {k_[3] / 2, k_[4] / 2, k_[5]}}};
}

Scalar Conic::determinant() const {
  const Mat3 m = matrix();
  return linalg::det3(m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2]);
}

std::string Conic::kind() const {
  if (is_zero(determinant())) return "degenerate";
  const int s = sign(discriminant());
  return s < 0 ? "ellipse" : s == 0 ? "parabola" : "hyperbola";
}

Conic Conic::transformed(const Mat3& g) const {
  const Mat3 m = matrix();
  Mat3 r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Scalar s = 0;
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) s += g[a][i] * m[a][b] * g[b][j];
      }
      r[i][j] = s;
    }
  }
  return Conic({r[0][0], 2 * r[0][1], r[1][1], 2 * r[0][2], 2 * r[1][2], r[2][2]});
}

std::string Conic::str() const {
  static const char* terms[6] = {"x^2", "xy", "y^2", "x", "y", "1"};
  std::string s;
  for (int i = 0; i < 6; ++i) {
    if (is_zero(k_[i])) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(k_[i]) + ")" + terms[i];
  }
  return s + " = 0";
}

Conic conic_through_5(std::span<const PPoint, 5> pts) {
  linalg::Matrix rows;
  for (const auto& p : pts) {
    const auto& [x, y, w] = p.coords();
    rows.push_back({x * x, x * y, y * y, x * w, y * w, w * w});
  }
  auto ns = linalg::null_space(std::move(rows));
  if (ns.rank < 5) {
    throw GeomError(ErrorCode::DependentConstraints,
                    "five points impose only " + std::to_string(ns.rank) + " conditions");
  }
  if (ns.basis.size() != 1) throw GeomError(ErrorCode::NoConic, "unexpected null space dimension");
  const auto& v = ns.basis.front();
  return Conic({v[0], v[1], v[2], v[3], v[4], v[5]});
}

PPoint second_intersection_line_conic(const PLine& ln, const Conic& c, const PPoint& known) {
  return second_point_on_quadratic(c.form(), ln, known);
}

PLine residual_line(const Conic& split, const PLine& factor) {
  const auto& [a, b, c, d, e, f] = split.coeffs();
  const Scalar &l = factor.l(), &m = factor.m(), &n = factor.n();
  Scalar p, q, r;
  if (!is_zero(l)) {
    p = a / l;
    q = (b - m * p) / l;
    r = (d - n * p) / l;
  } else if (!is_zero(m)) {
    q = c / m;
    p = b / m;
    r = (e - n * q) / m;
  } else {
    p = d / n;
    q = e / n;
    r = f / n;
  }
  const bool splits = l * p == a && l * q + m * p == b && m * q == c && l * r + n * p == d &&
                      m * r + n * q == e && n * r == f;
  if (!splits || (is_zero(p) && is_zero(q) && is_zero(r))) {
    throw GeomError(ErrorCode::TangentialDegeneracy, split.str() + " does not contain line " + factor.str());
  }
  return PLine(p, q, r);
}

PPoint pencil_residual_point(const Conic& c1, const Conic& c2, const PLine& chord, const PPoint& chord_point,
                             const PPoint& known) {
  if (c1 == c2) throw GeomError(ErrorCode::CoincidentConics, c1.str());
  const Scalar v1 = c1.eval(chord_point);
  const Scalar v2 = c2.eval(chord_point);
  if (is_zero(v1) && is_zero(v2)) {
    throw GeomError(ErrorCode::TangentialDegeneracy, "both conics contain the chord " + chord.str());
  }
  std::array<Scalar, 6> g;
  for (int i = 0; i < 6; ++i) g[i] = v2 * c1.coeffs()[i] - v1 * c2.coeffs()[i];
  const PLine rest = residual_line(Conic(g), chord);
  if (!rest.contains(known)) {
    throw GeomError(ErrorCode::TangentialDegeneracy, "remaining shared point " + known.str() + " lies on the chord");
  }
  // A line-pair c1 may contain the residual line itself; the other conic
  // then cuts it properly.
  try {
    return second_intersection_line_conic(rest, c1, known);
  } catch (const GeomError& e) {
    if (e.code() != ErrorCode::TangentialDegeneracy) throw;
  }
  return second_intersection_line_conic(rest, c2, known);
}

PPoint fourth_intersection(const Conic& c1, const Conic& c2, const std::array<PPoint, 3>& shared) {
  for (const auto& s : shared) {
    if (!c1.contains(s) || !c2.contains(s)) {
      throw GeomError(ErrorCode::SharedPointNotIncident, s.str() + " is not on both conics");
    }
  }
  if (c1 == c2) throw GeomError(ErrorCode::CoincidentConics, c1.str());
  const PLine chord = join(shared[0], shared[1]);
  // shared[0] + 2·(shared[1] − shared[0]); for points at infinity the same
  // combination of canonical representatives.
  const auto& s0 = shared[0];
  const auto& s1 = shared[1];
  const PPoint third = (s0.is_finite() && s1.is_finite())
                           ? PPoint::affine(2 * s1.ax() - s0.ax(), 2 * s1.ay() - s0.ay())
                           : PPoint(2 * s1.x() - s0.x(), 2 * s1.y() - s0.y(), 2 * s1.w() - s0.w());
  const PPoint out = pencil_residual_point(c1, c2, chord, third, shared[2]);
  for (const auto& s : shared) {
    if (out == s) throw GeomError(ErrorCode::TangentialDegeneracy, "fourth point coincides with " + s.str());
  }
  return out;
}

PPoint fourth_intersection_circles(const Circle& c1, const Circle& c2, const PPoint& known) {
  if (c1 == c2) throw GeomError(ErrorCode::IdenticalCircles, c1.str());
  if (!c1.contains(known) || !c2.contains(known)) {
    throw GeomError(ErrorCode::KnownPointNotIncident, known.str() + " not on both circles");
  }
  return pencil_residual_point(Conic::from_circle(c1), Conic::from_circle(c2), PLine(0, 0, 1),
                               PPoint::direction(1, 0), known);
}

// Involutions ----------------------------------------------------------------

Scalar ParamPoint::value() const {
  if (is_infinite()) throw GeomError(ErrorCode::PointAtInfinity, "infinite parameter");
  return num_ / den_;
}

Involution::Involution(Scalar l, Scalar m, Scalar n) {
  std::array<Scalar, 3> c{std::move(l), std::move(m), std::move(n)};
  if (!canonicalize_projective(c)) throw GeomError(ErrorCode::UnderDetermined, "zero involution");
  if (c[1] * c[1] == c[2] * c[0]) throw GeomError(ErrorCode::DegenerateInvolution, "m^2 = nl");
  l_ = c[0];
  m_ = c[1];
  n_ = c[2];
}

ParamPoint Involution::partner(const ParamPoint& h) const {
  const Scalar k0 = -(m_ * h.num() + n_ * h.den());
  const Scalar k1 = l_ * h.num() + m_ * h.den();
  if (is_zero(k1)) return ParamPoint::infinity();
  return ParamPoint::finite(k0 / k1);
}

namespace {

std::array<Scalar, 3> pair_row(const ParamPair& pr) {
  const auto& [h, k] = pr;
  return {h.num() * k.num(), h.num() * k.den() + h.den() * k.num(), h.den() * k.den()};
}

std::array<ParamPair, 3> lift3(const std::array<std::pair<Scalar, Scalar>, 3>& pairs) {
  return {ParamPair{ParamPoint::finite(pairs[0].first), ParamPoint::finite(pairs[0].second)},
          ParamPair{ParamPoint::finite(pairs[1].first), ParamPoint::finite(pairs[1].second)},
          ParamPair{ParamPoint::finite(pairs[2].first), ParamPoint::finite(pairs[2].second)}};
}

}  // namespace

Scalar involution_residual(const std::array<ParamPair, 3>& pairs) {
  const auto r0 = pair_row(pairs[0]);
  const auto r1 = pair_row(pairs[1]);
  const auto r2 = pair_row(pairs[2]);
  return linalg::det3(r0[0], r0[1], r0[2], r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]);
}

Scalar involution_residual(const std::array<std::pair<Scalar, Scalar>, 3>& pairs) {
  return involution_residual(lift3(pairs));
}

Involution involution_fit(const std::array<ParamPair, 2>& pairs) {
  const auto a = pair_row(pairs[0]);
  const auto b = pair_row(pairs[1]);
  const Scalar l = a[1] * b[2] - a[2] * b[1];
  const Scalar m = a[2] * b[0] - a[0] * b[2];
  const Scalar n = a[0] * b[1] - a[1] * b[0];
  if (is_zero(l) && is_zero(m) && is_zero(n)) {
    throw GeomError(ErrorCode::UnderDetermined, "the two pairs give proportional conditions");
  }
  return Involution(l, m, n);
}

Involution involution_fit(const std::array<std::pair<Scalar, Scalar>, 2>& pairs) {
  return involution_fit(std::array<ParamPair, 2>{
      ParamPair{ParamPoint::finite(pairs[0].first), ParamPoint::finite(pairs[0].second)},
      ParamPair{ParamPoint::finite(pairs[1].first), ParamPoint::finite(pairs[1].second)}});
}

// Pascal ---------------------------------------------------------------------

PascalResult pascal_line(const std::array<PPoint, 6>& h, const Conic& carrier) {
  for (const auto& p : h) {
    if (!carrier.contains(p)) throw GeomError(ErrorCode::PointNotOnConic, p.str());
  }
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (h[i] == h[j]) throw GeomError(ErrorCode::CoincidentPoints, "hexagon vertex " + h[i].str() + " repeated");
    }
  }
  PPoint first = meet(join(h[0], h[1]), join(h[3], h[4]));
  PPoint second = meet(join(h[1], h[2]), join(h[4], h[5]));
  PPoint third = meet(join(h[2], h[3]), join(h[5], h[0]));
  const PLine line = first == second ? join(first, third) : join(first, second);
  Scalar residual = collinear(first, second, third);
  return PascalResult{std::move(first), std::move(second), std::move(third), line, std::move(residual)};
}

}  // namespace hagge
