#include "hagge/second_gen.hpp"

namespace hagge {

PPoint IndirectSimilarity::apply(const PPoint& p) const {
  const Scalar x = p.ax(), y = p.ay();
  return PPoint::affine(u * x + v * y + tx, v * x - u * y + ty);
}

IndirectSimilarity IndirectSimilarity::inverse() const {
  // lin² = ratio²·I, so lin⁻¹ = lin / ratio².
  const Scalar r = ratio2();
  const Scalar iu = u / r, iv = v / r;
  return IndirectSimilarity{iu, iv, -(iu * tx + iv * ty), -(iv * tx - iu * ty)};
}

Mat3 IndirectSimilarity::matrix() const { return {{{u, v, tx}, {v, -u, ty}, {Scalar(0), Scalar(0), Scalar(1)}}}; }

IndirectSimilarity fit_indirect_similarity(const std::array<PPoint, 3>& src, const std::array<PPoint, 3>& dst) {
  if (is_zero(collinear(src[0], src[1], src[2]))) {
    throw GeomError(ErrorCode::CollinearSource, src[0].str() + src[1].str() + src[2].str());
  }
  const Scalar dx = src[1].ax() - src[0].ax(), dy = src[1].ay() - src[0].ay();
  const Scalar dX = dst[1].ax() - dst[0].ax(), dY = dst[1].ay() - dst[0].ay();
  const Scalar n = dx * dx + dy * dy;
  const Scalar u = (dx * dX - dy * dY) / n;
  const Scalar v = (dy * dX + dx * dY) / n;
  if (is_zero(u) && is_zero(v)) throw GeomError(ErrorCode::NotASimilarity, "image collapses to a point");
  IndirectSimilarity sim{u, v, 0, 0};
  const PPoint base = sim.apply(src[0]);
  sim.tx = dst[0].ax() - base.ax();
  sim.ty = dst[0].ay() - base.ay();
  if (!(sim.apply(src[2]) == dst[2])) {
    throw GeomError(ErrorCode::NotASimilarity, "third pair " + src[2].str() + " -> " + dst[2].str() + " fails");
  }
  return sim;
}

PPoint fixed_point(const IndirectSimilarity& sim) {
  const Scalar det = 1 - sim.ratio2();
  if (is_zero(det)) throw GeomError(ErrorCode::NoUniqueFixedPoint, "ratio 1: reflection or glide");
  // (I − lin)⁻¹ = [[1 + u, v], [v, 1 − u]] / det
  const Scalar x = ((1 + sim.u) * sim.tx + sim.v * sim.ty) / det;
  const Scalar y = (sim.v * sim.tx + (1 - sim.u) * sim.ty) / det;
  return PPoint::affine(x, y);
}

OrthologyResult orthologic_centre(const std::array<PPoint, 3>& tri1, const std::array<PPoint, 3>& tri2) {
  for (const auto* tri : {&tri1, &tri2}) {
    if (is_zero(collinear((*tri)[0], (*tri)[1], (*tri)[2]))) {
      throw GeomError(ErrorCode::DegenerateTriangle, (*tri)[0].str() + (*tri)[1].str() + (*tri)[2].str());
    }
  }
  auto perp = [&](int i) { return perpendicular_through(tri1[i], join(tri2[(i + 1) % 3], tri2[(i + 2) % 3])); };
  const PLine l0 = perp(0), l1 = perp(1), l2 = perp(2);
  if (l0 == l1) throw GeomError(ErrorCode::ParallelPerpendiculars, "first two perpendiculars coincide");
  PPoint centre = meet(l0, l1);
  if (!centre.is_finite()) throw GeomError(ErrorCode::ParallelPerpendiculars, "first two perpendiculars are parallel");
  return OrthologyResult{centre, concurrent(l0, l1, l2)};
}

SecondGenScene build_second_gen(const PPoint& A, const PPoint& B, const PPoint& C, const PPoint& T,
                                const Circle& hcirc) {
  if (is_zero(collinear(A, B, C))) throw GeomError(ErrorCode::DegenerateTriangle, A.str() + B.str() + C.str());
  if (!hcirc.contains(T)) throw GeomError(ErrorCode::TNotOnCircle, T.str() + " vs " + hcirc.str());
  const std::array<PPoint, 3> abc{A, B, C};
  for (int i = 0; i < 3; ++i) {
    if (is_zero(collinear(T, abc[(i + 1) % 3], abc[(i + 2) % 3]))) {
      throw GeomError(ErrorCode::TOnSide, T.str() + " on a side line");
    }
  }
  const Circle circ = circle_through(A, B, C);
  auto foot_point = [&](int i) {
    return second_intersection_line_circle(perpendicular_through(T, join(abc[(i + 1) % 3], abc[(i + 2) % 3])), hcirc, T);
  };
  const PPoint X = foot_point(0), Y = foot_point(1), Z = foot_point(2);
  const IndirectSimilarity sim = fit_indirect_similarity(abc, {X, Y, Z});
  const PPoint P = fixed_point(sim);
  const PPoint J = sim.inverse().apply(T);
  const OrthologyResult ortho = orthologic_centre(abc, {X, Y, Z});
  if (!(ortho.centre == J) || !is_zero(ortho.residual)) {
    throw GeomError(ErrorCode::NotASimilarity, "orthologic centre " + ortho.centre.str() + " differs from " + J.str());
  }
  const PPoint D = second_intersection_line_circle(join(A, P), circ, A);
  const PPoint E = second_intersection_line_circle(join(B, P), circ, B);
  const PPoint F = second_intersection_line_circle(join(C, P), circ, C);
  const PPoint U = sim.apply(D), V = sim.apply(E), W = sim.apply(F);
  const PPoint Tp = point_reflection(hcirc.centre(), T);
  const PPoint Jp = point_reflection(circ.centre(), J);
  return SecondGenScene{A, B, C, T, circ, hcirc, X, Y, Z, J, P, D, E, F, U, V, W, Tp, Jp, sim};
}

std::array<Scalar, 3> theorem8_verdict(const SecondGenScene& s) {
  return {collinear(s.X, s.P, s.U), collinear(s.Y, s.P, s.V), collinear(s.Z, s.P, s.W)};
}

Theorem9Verdict theorem9_verdict(const SecondGenScene& s) {
  PPoint L = meet(join(s.V, s.W), join(s.X, s.T));
  PPoint M = meet(join(s.W, s.U), join(s.Y, s.T));
  PPoint N = meet(join(s.U, s.V), join(s.Z, s.T));
  Scalar r = collinear(L, M, N);
  return Theorem9Verdict{std::move(L), std::move(M), std::move(N), std::move(r)};
}

Theorem10Verdict theorem10_verdict(const SecondGenScene& s) {
  const std::array<PPoint, 5> five{midpoint(s.A, s.X), midpoint(s.B, s.Y), midpoint(s.C, s.Z), midpoint(s.D, s.U),
                                   midpoint(s.E, s.V)};
  Conic c = conic_through_5(five);
  Scalar r = c.eval(midpoint(s.F, s.W));
  return Theorem10Verdict{std::move(c), std::move(r)};
}

Scalar paralogy_residual(const std::array<PPoint, 3>& through, const std::array<PPoint, 3>& sides,
                         const PPoint& candidate) {
  Scalar total = 0;
  for (int i = 0; i < 3; ++i) {
    const PLine ln = parallel_through(through[i], join(sides[(i + 1) % 3], sides[(i + 2) % 3]));
    const Scalar e = ln.eval(candidate);
    total += e * e;
  }
  return total;
}

ParalogyVerdict paralogic_verdict(const SecondGenScene& s) {
  return ParalogyVerdict{paralogy_residual({s.X, s.Y, s.Z}, {s.A, s.B, s.C}, s.Tp),
                         paralogy_residual({s.A, s.B, s.C}, {s.X, s.Y, s.Z}, s.Jp)};
}

ConicImage conic_image_check(const SecondGenScene& s) {
  Conic source = conic_through_5(std::array<PPoint, 5>{s.A, s.B, s.C, s.P, s.J});
  Conic target = conic_through_5(std::array<PPoint, 5>{s.X, s.Y, s.Z, s.P, s.T});
  Conic image = source.transformed(s.sim.inverse().matrix());
  return ConicImage{std::move(source), std::move(image), std::move(target)};
}

}  // namespace hagge
