#include "doctest.h"
#include "hagge/first_gen.hpp"
#include "helpers.hpp"

using namespace hagge;
using namespace hagge::test;

namespace {

const Circle kSigma(Q(1), Q(1), Q(1), Q(0));  // x² + y² + x + y = 0

// B and C lie on x² + y² + 3x + 2y = 0, so circle BKC has p = 3, q = 2.
FirstGenScene sample_scene() { return build_first_gen(P(2, 1), P(-3, 0), P(0, -2), P(0, 0), kSigma); }

PPoint mirror(const PPoint& p) { return P(-p.ax(), p.ay()); }

// Random first-gen scene on a random circle through a random K.
std::optional<FirstGenScene> random_scene(Lattice& lat) {
  try {
    const PPoint k = lat.point(), q = lat.point();
    if (k == q) return std::nullopt;
    const Circle sigma = Circle::centred_through(q, k);
    const PPoint a = lat.point(), b = lat.point(), c = lat.point();
    for (const PPoint* p : {&a, &b, &c}) {
      if (sigma.contains(*p)) return std::nullopt;
    }
    return build_first_gen(a, b, c, k, sigma);
  } catch (const GeomError&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("build_first_gen on the normalized circle") {
  const FirstGenScene s = sample_scene();
  for (const PPoint* p : {&s.U, &s.V, &s.W, &s.X, &s.Y, &s.Z}) CHECK(s.sigma.contains(*p));
  CHECK(join(s.W, s.Z).contains(s.P));
  REQUIRE(s.paramsUVW.has_value());
  CHECK(s.U == P("1/5", "-2/5"));
  CHECK((*s.paramsUVW)[0] == ParamPoint::finite(Q(-2)));
  // a = −(p − 1)/(q − 1) with p = 3, q = 2
  CHECK((*s.paramsUVW)[0] == ParamPoint::finite(-(Q(3) - 1) / (Q(2) - 1)));

  CHECK_THROWS_WITH_AS(build_first_gen(P(2, 1), P(1, 1), P(-1, -1), P(0, 0), kSigma),
                       doctest::Contains("KOnSideLine"), GeomError);
  CHECK_THROWS_WITH_AS(build_first_gen(P(2, 1), P(-3, 0), P(0, -2), P(1, 1), kSigma),
                       doctest::Contains("KNotOnSigma"), GeomError);
  CHECK_THROWS_WITH_AS(build_first_gen(P(1, 0), P(2, 0), P(3, 0), P(0, 0), kSigma),
                       doctest::Contains("DegenerateTriangle"), GeomError);
}

TEST_CASE("theorem1_verdict and inversion oracle") {
  const FirstGenScene s = sample_scene();
  const Theorem1Verdict v = theorem1_verdict(s);
  CHECK(v.squared_product == 1);
  CHECK(v.sign_product == -1);
  for (const Scalar& k : {Q(1), Q(2), Q(5, 3), Q(7, 3)}) CHECK(theorem1_oracle(s, k) == 0);

  // Mirror image gives the same verdict.
  const Circle msigma(Q(1), Q(-1), Q(1), Q(0));
  const FirstGenScene m = build_first_gen(mirror(s.A), mirror(s.B), mirror(s.C), s.K, msigma);
  const Theorem1Verdict mv = theorem1_verdict(m);
  CHECK(mv.squared_product == 1);
  CHECK(mv.sign_product == -1);

  // Keeping U, V, W but moving K breaks the relation.
  const PPoint moved = P(s.K.ax() + Q(1, 7), s.K.ay());
  const PPoint u2 = second_intersection_line_circle(join(moved, s.U), circle_through(s.B, moved, s.C), moved);
  CHECK(signed_ratio_product(s.A, s.B, s.C, moved, u2, s.V, s.W).squared_product != 1);
}

TEST_CASE("theorem2 and theorem3 verdicts") {
  const FirstGenScene s = sample_scene();
  const Theorem2Verdict t2 = theorem2_verdict(s);
  CHECK(t2.concurrency == 0);
  REQUIRE(t2.involution.has_value());
  CHECK(*t2.involution == 0);

  const auto& uvw = *s.paramsUVW;
  const auto& xyz = *s.paramsXYZ;
  const Involution inv = involution_fit(std::array<ParamPair, 2>{ParamPair{uvw[0], xyz[0]}, ParamPair{uvw[1], xyz[1]}});
  CHECK(inv.partner(uvw[2]) == xyz[2]);

  const Theorem3Verdict t3 = theorem3_verdict(s);
  CHECK(t3.lmn == 0);
  CHECK(t3.lmp == 0);
  CHECK(t3.lnp == 0);
  CHECK(t3.mnp == 0);
  const PascalResult pr = theorem3_pascal(s);
  CHECK(pr.residual == 0);
  CHECK(pr.line.contains(t3.L));
  CHECK(pr.line.contains(t3.M));
  CHECK(pr.line.contains(s.P));

  // Concurrency without parameters on a circle not in normal form.
  const Circle other = Circle::centred_through(P(3, 1), P(0, 0));
  const FirstGenScene o = build_first_gen(P(2, 5), P(-3, 0), P(1, -4), P(0, 0), other);
  CHECK_FALSE(o.paramsUVW.has_value());
  const Theorem2Verdict t2o = theorem2_verdict(o);
  CHECK(t2o.concurrency == 0);
  CHECK_FALSE(t2o.involution.has_value());
}

TEST_CASE("first-gen properties on random scenes") {
  Lattice lat(101);
  int built = 0;
  for (int i = 0; i < 80; ++i) {
    const auto s = random_scene(lat);
    if (!s) continue;
    try {
      const Theorem1Verdict v = theorem1_verdict(*s);
      CHECK(v.squared_product == 1);
      CHECK(v.sign_product == -1);
    } catch (const GeomError& e) {
      CHECK((e.code() == ErrorCode::CoincidentPoints || e.code() == ErrorCode::DegenerateQuad));
    }
    CHECK(theorem2_verdict(*s).concurrency == 0);
    const Theorem3Verdict t3 = theorem3_verdict(*s);
    CHECK(t3.lmn == 0);
    CHECK(t3.lmp == 0);

    // Swapping U and X in every pair keeps the perspector.
    const PPoint swapped = meet(join(s->X, s->U), join(s->Y, s->V));
    CHECK(swapped == s->P);

    const FirstGenScene n = standardized(*s);
    REQUIRE(n.paramsUVW.has_value());
    CHECK(n.K == P(0, 0));
    CHECK(n.sigma == kSigma);
    const Theorem2Verdict t2 = theorem2_verdict(n);
    CHECK(t2.concurrency == 0);
    CHECK(*t2.involution == 0);
    ++built;
  }
  CHECK(built > 50);
}

TEST_CASE("build_theorem4") {
  Lattice lat(107);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    // Σ through five random points gives ellipses, hyperbolas and parabolas alike.
    const std::array<PPoint, 5> five{lat.point(), lat.point(), lat.point(), lat.point(), lat.point()};
    try {
      const Conic sigma = conic_through_5(five);
      if (is_zero(sigma.determinant())) continue;
      const Theorem4Scene t = build_theorem4(lat.point(), lat.point(), lat.point(), five[0], five[1], five[2], sigma);
      CHECK(t.residual == 0);
      for (const PPoint* p : {&t.U, &t.V, &t.W, &t.X, &t.Y, &t.Z}) CHECK(sigma.contains(*p));

      // Projective images of the inputs give the projective image of P.
      const Mat3 h{{{Q(2), Q(1), Q(0)}, {Q(0), Q(1), Q(3)}, {Q(1), Q(0), Q(1)}}};
      const Mat3 hinv{{{Q(1), Q(-1), Q(3)}, {Q(3), Q(2), Q(-6)}, {Q(-1), Q(1), Q(2)}}};
      const Theorem4Scene img = build_theorem4(apply(h, t.A), apply(h, t.B), apply(h, t.C), apply(h, t.D),
                                               apply(h, t.E), apply(h, t.F), sigma.transformed(hinv));
      CHECK(img.P == apply(h, t.P));
      ++checked;
    } catch (const GeomError&) {
      // degenerate draw
    }
  }
  CHECK(checked > 20);

  const Conic unit = Conic::from_circle(Circle(Q(1), Q(0), Q(0), Q(-1)));
  CHECK_THROWS_WITH_AS(build_theorem4(P(2, 3), P(-1, 4), P(5, -2), P(1, 0), P(0, 1), P(1, 1), unit),
                       doctest::Contains("SharedPointNotIncident"), GeomError);
}
