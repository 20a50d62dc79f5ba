#include "hagge/four_circle.hpp"

#include <set>
#include <vector>

namespace hagge {

namespace {

const char kLetters[] = "ABCD";

Scalar sq(const Scalar& v) { return v * v; }

Circle circle_by(const std::array<PPoint, 3>& p) { return circle_through(p[0], p[1], p[2]); }

template <class F>
auto make3(F f) {
  return std::array{f(0), f(1), f(2)};
}

template <class F>
auto make4(F f) {
  return std::array{f(0), f(1), f(2), f(3)};
}

}  // namespace

void FourCircleParams::validate(bool unit_product) const {
  if (is_zero(m)) throw GeomError(ErrorCode::InvalidParams, "m = 0");
  const std::array<Scalar, 5> all{a, b, c, d, p};
  for (const auto& v : all) {
    if (is_zero(v)) throw GeomError(ErrorCode::InvalidParams, "zero parameter");
  }
  // A vertex meeting another vertex, a rotated vertex, or P.
  std::set<Scalar> seen;
  for (const auto& v : vertex()) {
    if (!seen.insert(v).second || !seen.insert(-v).second) {
      throw GeomError(ErrorCode::InvalidParams, "parameter " + to_string(v) + " repeats up to sign");
    }
  }
  if (seen.count(p)) throw GeomError(ErrorCode::InvalidParams, "p = " + to_string(p) + " clashes with a vertex");
  if (unit_product && a * b * c * d != 1) {
    throw GeomError(ErrorCode::InvalidParams, "abcd = " + to_string(a * b * c * d));
  }
}

PPoint hyperbola_point(const Scalar& m, const Scalar& t) {
  if (is_zero(m) || is_zero(t)) throw GeomError(ErrorCode::ZeroParameter, "m and t must be nonzero");
  const Scalar inv = 1 / t;
  return PPoint::affine((t - inv) / (2 * m), (t + inv) / 2);
}

Circle gamma_circle(const FourCircleParams& prm) {
  const auto& [m, a, b, c, d, p] = prm;
  if (is_zero(m)) throw GeomError(ErrorCode::InvalidParams, "m = 0");
  const Scalar e1 = a + b + c + d;
  const Scalar e2 = a * b + a * c + a * d + b * c + b * d + c * d;
  const Scalar e3 = b * d * c + a * c * d + a * b * d + a * b * c;
  const Scalar k = sq(m) + 1;
  return Circle(4 * sq(m), m * k * (e3 - e1), -k * (e3 + e1), k * e2 - 2 * (sq(m) - 1));
}

PLine chord_line(const Scalar& m, const Scalar& s, const Scalar& t) {
  if (is_zero(m) || is_zero(s) || is_zero(t)) throw GeomError(ErrorCode::ZeroParameter, "m, s, t must be nonzero");
  if (s == t) throw GeomError(ErrorCode::EqualParameters, "s = t = " + to_string(s));
  return PLine(m * (1 - s * t), 1 + s * t, -(s + t));
}

PPoint k_point(const FourCircleParams& prm, const Scalar& vertexParam, const Scalar& rotatedParam) {
  const PLine side = chord_line(prm.m, vertexParam, -rotatedParam);
  const PLine kline = chord_line(prm.m, -vertexParam, prm.p);
  if (side == kline) throw GeomError(ErrorCode::DegenerateDenominator, "chords coincide");
  PPoint x = meet(side, kline);
  if (!x.is_finite()) throw GeomError(ErrorCode::DegenerateDenominator, "chords are parallel");
  return x;
}

std::array<int, 3> FourCircleScene::others(int k) {
  std::array<int, 3> out{};
  int n = 0;
  for (int v = 0; v < 4; ++v) {
    if (v != k) out[n++] = v;
  }
  return out;
}

std::string FourCircleScene::point_name(int k, int j) {
  return std::string(1, kLetters[others(k)[j]]) + "_" + std::to_string(k + 1);
}

FourCircleScene build_four_circle(const FourCircleParams& prm) {
  prm.validate(false);
  const auto vp = prm.vertex();
  std::array<PPoint, 4> vertices{hyperbola_point(prm.m, vp[0]), hyperbola_point(prm.m, vp[1]),
                                 hyperbola_point(prm.m, vp[2]), hyperbola_point(prm.m, vp[3])};
  std::array<PPoint, 4> rotated{hyperbola_point(prm.m, -vp[0]), hyperbola_point(prm.m, -vp[1]),
                                hyperbola_point(prm.m, -vp[2]), hyperbola_point(prm.m, -vp[3])};
  const PPoint P = hyperbola_point(prm.m, prm.p);
  const Circle gamma = circle_through(vertices[0], vertices[1], vertices[2]);

  const auto pts = make4([&](int k) {
    const auto idx = FourCircleScene::others(k);
    return make3([&](int j) {
      try {
        return k_point(prm, vp[idx[j]], vp[k]);
      } catch (const GeomError& e) {
        throw GeomError(e.code(), FourCircleScene::point_name(k, j) + ": " + e.what());
      }
    });
  });
  const auto circles = make4([&](int k) {
    try {
      return circle_by(pts[k]);
    } catch (const GeomError& e) {
      throw GeomError(e.code(), "Sigma_" + std::to_string(k + 1) + ": " + e.what());
    }
  });
  const auto centres = make4([&](int k) { return circles[k].centre(); });
  const auto klines = make4([&](int k) { return chord_line(prm.m, -vp[k], prm.p); });
  const PLine qline = join(centres[0], centres[3]);
  return FourCircleScene{prm, vertices, rotated, P, gamma, pts, circles, centres, klines, qline};
}

std::array<Scalar, 4> theorem5_verdict(const FourCircleScene& s) {
  std::array<Scalar, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = concyclic4(s.pts[k][0], s.pts[k][1], s.pts[k][2], s.rotated[k]);
  return out;
}

Theorem6Verdict theorem6_verdict(const FourCircleScene& s) {
  std::vector<PPoint> partners;
  std::array<Scalar, 12> residuals;
  for (int k = 0; k < 4; ++k) {
    const auto idx = FourCircleScene::others(k);
    for (int j = 0; j < 3; ++j) {
      // The two vertices other than the point's own vertex and the rotated one.
      std::array<int, 2> rest{};
      int n = 0;
      for (int v : idx) {
        if (v != idx[j]) rest[n++] = v;
      }
      const std::string name = FourCircleScene::point_name(k, j);
      const Circle aux = [&] {
        try {
          return circle_through(s.vertices[rest[0]], s.vertices[rest[1]], s.rotated[k]);
        } catch (const GeomError& e) {
          throw GeomError(ErrorCode::AuxCircleDegenerate, name + ": " + e.what());
        }
      }();
      if (aux == s.circles[k]) throw GeomError(ErrorCode::AuxCircleDegenerate, name + ": circle equals Sigma");
      partners.push_back(second_intersection_circle_circle(aux, s.circles[k], s.rotated[k]));
      residuals[3 * k + j] = collinear_affine(s.pts[k][j], partners.back(), s.P);
    }
  }
  auto at = [&](int i) { return partners[i]; };
  return Theorem6Verdict{{at(0), at(1), at(2), at(3), at(4), at(5), at(6), at(7), at(8), at(9), at(10), at(11)},
                         residuals};
}

Theorem7Verdict theorem7_verdict(const FourCircleScene& s) {
  Theorem7Verdict out;
  int slot = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j, ++slot) {
      out.collinear[slot] = collinear_affine(s.centres[i], s.centres[j], s.P);
      out.cross[slot] = s.circles[i].radius2() * dist2(s.P, s.centres[j]) -
                        s.circles[j].radius2() * dist2(s.P, s.centres[i]);
    }
  }
  const Scalar dx = s.centres[3].ax() - s.centres[0].ax();
  const Scalar dy = s.centres[3].ay() - s.centres[0].ay();
  for (int k = 0; k < 4; ++k) {
    out.offsets[k] = (s.centres[k].ax() - s.P.ax()) * dx + (s.centres[k].ay() - s.P.ay()) * dy;
  }
  // Triangle A₁B₁C₁ on Σ₁ against A₄B₄C₄ on Σ₄.
  const std::array<PPoint, 3> t1{s.rotated[0], s.pts[0][0], s.pts[0][1]};
  const std::array<PPoint, 3> t4{s.pts[3][0], s.pts[3][1], s.pts[3][2]};
  const Scalar d1 = dist2(s.P, s.centres[0]);
  const Scalar d4 = dist2(s.P, s.centres[3]);
  for (int e = 0; e < 3; ++e) {
    const int f = (e + 1) % 3;
    out.enlargement[e] = dist2(t1[e], t1[f]) * d4 - dist2(t4[e], t4[f]) * d1;
  }
  return out;
}

PPoint a4_closed_form(const FourCircleParams& prm) {
  const auto& [m, a, b, c, d, p] = prm;
  const Scalar den = 2 * a * (p - d);
  if (is_zero(den) || is_zero(m)) throw GeomError(ErrorCode::DegenerateDenominator, "p = d");
  const Scalar x = ((sq(a) + 1) * (d + p) - 2 * a * (d * p + 1)) / (den * m);
  const Scalar y = ((sq(a) - 1) * (d + p) + 2 * a * (1 - d * p)) / den;
  return PPoint::affine(x, y);
}

PPoint a4_partner_closed_form(const FourCircleParams& prm) {
  const auto& [m, a, b, c, d, p] = prm;
  const Scalar k = sq(m) + 1;
  const Scalar q = sq(a) * sq(p) * k + 2 * a * p * (sq(m) - 1) + k;
  if (is_zero(q) || is_zero(b * c * m)) throw GeomError(ErrorCode::DegenerateDenominator, "A'_4 denominator");
  const Scalar xn = sq(a) * b * c * p * k * (b * (c - p) - c * p + 1) -
                    a * (sq(b) * c * (c - p) * k -
                         b * (sq(c) * p * k - c * (3 * sq(m) * (sq(p) - 1) - sq(p) + 1) - p * k) + p * (c - p) * k) +
                    b * k * (1 - c * p) + c * k - sq(m) * p - p;
  const Scalar yn = sq(a) * b * c * p * k * (b * (c - p) - c * p - 1) +
                    a * (sq(b) * c * (c - p) * k -
                         b * (sq(c) * p * k + c * (sq(m) * (sq(p) + 1) - 3 * sq(p) - 3) + p * k) - p * (c - p) * k) -
                    b * k * (c * p + 1) - c * k + sq(m) * p + p;
  return PPoint::affine(-xn / (2 * b * c * m * q), -yn / (2 * b * c * q));
}

Scalar concyclic_closed_form_reference(const FourCircleParams& prm) {
  const auto& [m, a, b, c, d, p] = prm;
  const Scalar den = 8 * sq(a) * sq(b) * sq(c) * sq(d) * sq(sq(d - p));
  if (is_zero(den)) throw GeomError(ErrorCode::DegenerateDenominator, "p = d");
  return (a - b) * (a - c) * (a - d) * (b - c) * (b - d) * (c - d) * sq(sq(d + p)) * (1 + sq(m)) *
         (a * b * c * d - 1) / den;
}

Scalar concyclic_closed_form(const FourCircleParams& prm) {
  return concyclic_closed_form_reference(prm) / (prm.m * prm.m * prm.m);
}

Scalar centre_line_closed_form_reference(const FourCircleParams& prm) {
  const auto& [m, a, b, c, d, p] = prm;
  const Scalar k = sq(m) + 1;
  const Scalar den = 32 * a * sq(b) * sq(c) * d * (a * b * c * p - 1) * (b * c * d * p - 1);
  if (is_zero(den)) throw GeomError(ErrorCode::DegenerateDenominator, "abcp = 1 or bcdp = 1");
  const Scalar tail = b * sq(b) * sq(c) * p * k +
                      sq(b) * sq(c) * (c * p * k - 2 * (sq(m) * (sq(p) - 1) + sq(p) + 1)) -
                      b * (2 * c * (sq(m) * (sq(p) - 1) - sq(p) - 1) + p * k) - c * p * k;
  return (a - d) * k * (a * b * c * d - 1) * (b * c * d * p + 1) * tail / den;
}

Scalar centre_line_closed_form(const FourCircleParams& prm) {
  const auto& [m, a, b, c, d, p] = prm;
  return -(a * b * c * p + 1) / (m * m * m * p) * centre_line_closed_form_reference(prm);
}

Scalar centre_line_determinant_charted(const FourCircleParams& prm) {
  const auto& [m, a, b, c, d, p] = prm;
  const Scalar d4 = 1 / (a * b * c);
  const Scalar a1 = 1 / (b * c * d);
  const Circle s4 = circle_by({k_point(prm, a, d4), k_point(prm, b, d4), k_point(prm, c, d4)});
  const Circle s1 = circle_by({k_point(prm, b, a1), k_point(prm, c, a1), k_point(prm, d, a1)});
  return collinear_affine(s1.centre(), s4.centre(), hyperbola_point(m, p));
}

Scalar centre_line_determinant(const FourCircleScene& s) {
  return collinear_affine(s.centres[0], s.centres[3], s.P);
}

}  // namespace hagge
