#include "hagge/first_gen.hpp"

namespace hagge {

namespace {

const Circle& standard_sigma() {
  static const Circle c(1, 1, 1, 0);
  return c;
}

void require_off_side(const PPoint& K, const PPoint& P1, const PPoint& P2, const char* side) {
  if (is_zero(collinear(K, P1, P2))) throw GeomError(ErrorCode::KOnSideLine, std::string("K on line ") + side);
}

}  // namespace

bool is_standard_form(const PPoint& K, const Circle& sigma) {
  return K == PPoint::affine(0, 0) && sigma == standard_sigma();
}

ParamPoint slope_parameter(const PPoint& p) {
  if (is_zero(p.ax())) return ParamPoint::infinity();
  return ParamPoint::finite(p.ay() / p.ax());
}

FirstGenScene build_first_gen(const PPoint& A, const PPoint& B, const PPoint& C, const PPoint& K,
                              const Circle& sigma) {
  for (const PPoint* p : {&A, &B, &C, &K}) {
    if (!p->is_finite()) throw GeomError(ErrorCode::PointAtInfinity, p->str());
  }
  if (!sigma.contains(K)) throw GeomError(ErrorCode::KNotOnSigma, K.str() + " vs " + sigma.str());
  if (is_zero(collinear(A, B, C))) throw GeomError(ErrorCode::DegenerateTriangle, A.str() + B.str() + C.str());
  require_off_side(K, B, C, "BC");
  require_off_side(K, C, A, "CA");
  require_off_side(K, A, B, "AB");

  const Circle bkc = circle_through(B, K, C);
  const Circle cka = circle_through(C, K, A);
  const Circle akb = circle_through(A, K, B);
  PPoint U = second_intersection_circle_circle(bkc, sigma, K);
  PPoint V = second_intersection_circle_circle(cka, sigma, K);
  PPoint W = second_intersection_circle_circle(akb, sigma, K);
  PPoint X = second_intersection_line_circle(join(A, K), sigma, K);
  PPoint Y = second_intersection_line_circle(join(B, K), sigma, K);
  PPoint Z = second_intersection_line_circle(join(C, K), sigma, K);
  PPoint P = meet(join(U, X), join(V, Y));

  FirstGenScene s{A, B, C, K, sigma, U, V, W, X, Y, Z, P, std::nullopt, std::nullopt};
  if (is_standard_form(K, sigma)) {
    s.paramsUVW = std::array<ParamPoint, 3>{slope_parameter(U), slope_parameter(V), slope_parameter(W)};
    s.paramsXYZ = std::array<ParamPoint, 3>{slope_parameter(X), slope_parameter(Y), slope_parameter(Z)};
  }
  return s;
}

PPoint DirectSimilarity::apply(const PPoint& p) const {
  const Scalar x = p.ax(), y = p.ay();
  return PPoint::affine(re * x - im * y + tx, im * x + re * y + ty);
}

Circle DirectSimilarity::apply(const Circle& c) const {
  const PPoint centre = c.centre();
  const Scalar scale2 = re * re + im * im;
  const PPoint image = apply(centre);
  const Scalar cx = image.ax(), cy = image.ay();
  return Circle(1, -2 * cx, -2 * cy, cx * cx + cy * cy - c.radius2() * scale2);
}

DirectSimilarity standardizing_map(const PPoint& K, const Circle& sigma) {
  // α = (−1/2 − i/2) / (Q − K), t = −α·K.
  const PPoint q = sigma.centre();
  const Scalar vx = q.ax() - K.ax(), vy = q.ay() - K.ay();
  const Scalar n = vx * vx + vy * vy;
  if (is_zero(n)) throw GeomError(ErrorCode::ImaginaryCircle, "sigma has zero radius");
  const Scalar wr = rational(-1, 2), wi = rational(-1, 2);
  const Scalar re = (wr * vx + wi * vy) / n;
  const Scalar im = (wi * vx - wr * vy) / n;
  const Scalar kx = K.ax(), ky = K.ay();
  return DirectSimilarity{re, im, -(re * kx - im * ky), -(im * kx + re * ky)};
}

FirstGenScene standardized(const FirstGenScene& s) {
  const DirectSimilarity t = standardizing_map(s.K, s.sigma);
  return build_first_gen(t.apply(s.A), t.apply(s.B), t.apply(s.C), t.apply(s.K), t.apply(s.sigma));
}

Theorem1Verdict signed_ratio_product(const PPoint& A, const PPoint& B, const PPoint& C, const PPoint& K,
                                     const PPoint& U, const PPoint& V, const PPoint& W) {
  const std::array<const PPoint*, 6> pts{&A, &B, &C, &U, &V, &W};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (*pts[i] == *pts[j]) throw GeomError(ErrorCode::CoincidentPoints, pts[i]->str() + " repeated");
    }
  }
  Theorem1Verdict v;
  v.squared_product = (dist2(B, U) * dist2(C, V) * dist2(A, W)) / (dist2(C, U) * dist2(A, V) * dist2(B, W));
  const int su = convex_quad(K, B, U, C) ? 1 : -1;
  const int sv = convex_quad(K, C, V, A) ? 1 : -1;
  const int sw = convex_quad(K, A, W, B) ? 1 : -1;
  v.sign_product = su * sv * sw;
  return v;
}

Theorem1Verdict theorem1_verdict(const FirstGenScene& s) {
  return signed_ratio_product(s.A, s.B, s.C, s.K, s.U, s.V, s.W);
}

Scalar theorem1_oracle(const FirstGenScene& s, const Scalar& k) {
  const PPoint u = invert_point(s.K, k, s.U);
  const PPoint v = invert_point(s.K, k, s.V);
  const PPoint w = invert_point(s.K, k, s.W);
  return collinear(u, v, w);
}

Theorem2Verdict theorem2_verdict(const FirstGenScene& s) {
  Theorem2Verdict v;
  v.concurrency = concurrent(join(s.U, s.X), join(s.V, s.Y), join(s.W, s.Z));
  if (s.paramsUVW && s.paramsXYZ) {
    const auto& uvw = *s.paramsUVW;
    const auto& xyz = *s.paramsXYZ;
    v.involution = involution_residual(std::array<ParamPair, 3>{
        ParamPair{uvw[0], xyz[0]}, ParamPair{uvw[1], xyz[1]}, ParamPair{uvw[2], xyz[2]}});
    for (int i = 0; i < 3; ++i) v.infinite_parameter |= uvw[i].is_infinite() || xyz[i].is_infinite();
  }
  return v;
}

Theorem3Verdict theorem3_verdict(const FirstGenScene& s) {
  PPoint L = meet(join(s.V, s.W), join(s.A, s.K));
  PPoint M = meet(join(s.W, s.U), join(s.B, s.K));
  PPoint N = meet(join(s.U, s.V), join(s.C, s.K));
  Theorem3Verdict v{L, M, N, collinear(L, M, N), collinear(L, M, s.P), collinear(L, N, s.P), collinear(M, N, s.P)};
  return v;
}

PascalResult theorem3_pascal(const FirstGenScene& s) {
  return pascal_line({s.V, s.W, s.U, s.X, s.K, s.Y}, Conic::from_circle(s.sigma));
}

Theorem4Scene build_theorem4(const PPoint& A, const PPoint& B, const PPoint& C, const PPoint& D, const PPoint& E,
                             const PPoint& F, const Conic& sigma) {
  for (const PPoint* p : {&D, &E, &F}) {
    if (!sigma.contains(*p)) throw GeomError(ErrorCode::SharedPointNotIncident, p->str() + " not on sigma");
  }
  for (const PPoint* p : {&A, &B, &C}) {
    if (sigma.contains(*p)) throw GeomError(ErrorCode::TangentialDegeneracy, p->str() + " lies on sigma");
  }
  if (is_zero(collinear(A, B, C))) throw GeomError(ErrorCode::DegenerateTriangle, A.str() + B.str() + C.str());

  const std::array<PPoint, 3> def{D, E, F};
  const std::array<PPoint, 5> bc{B, C, D, E, F};
  const std::array<PPoint, 5> ca{C, A, D, E, F};
  const std::array<PPoint, 5> ab{A, B, D, E, F};
  std::array<Conic, 3> aux{conic_through_5(bc), conic_through_5(ca), conic_through_5(ab)};

  PPoint U = fourth_intersection(aux[0], sigma, def);
  PPoint V = fourth_intersection(aux[1], sigma, def);
  PPoint W = fourth_intersection(aux[2], sigma, def);
  PPoint X = second_intersection_line_conic(join(A, D), sigma, D);
  PPoint Y = second_intersection_line_conic(join(B, D), sigma, D);
  PPoint Z = second_intersection_line_conic(join(C, D), sigma, D);
  const PLine ux = join(U, X), vy = join(V, Y), wz = join(W, Z);
  PPoint P = meet(ux, vy);
  Scalar residual = concurrent(ux, vy, wz);
  return Theorem4Scene{A, B, C, D, E, F, sigma, aux, U, V, W, X, Y, Z, P, residual};
}

}  // namespace hagge
