#include "doctest.h"
#include "helpers.hpp"

using namespace hagge;
using namespace hagge::test;

TEST_CASE("scalar literals") {
  CHECK(to_string(Q("6/4")) == "3/2");
  CHECK(to_string(Q("-10/5")) == "-2");
  CHECK(Q("7") == Q(7));
  CHECK_THROWS_AS(parse_scalar("0.5"), GeomError);
  CHECK_THROWS_AS(parse_scalar("1e3"), GeomError);
  CHECK_THROWS_AS(parse_scalar("3/0"), GeomError);
  CHECK_THROWS_AS(parse_scalar("1/-2"), GeomError);
  CHECK_THROWS_AS(parse_scalar(""), GeomError);

  Lattice lat(3);
  for (int i = 0; i < 200; ++i) {
    const Scalar q = lat.scalar(1000, 97);
    CHECK(parse_scalar(to_string(q)) == q);
  }
}

TEST_CASE("homogeneous points are canonical") {
  const PPoint a(Q(2), Q(4), Q(2));
  const PPoint b(Q(-1, 2), Q(-1), Q(-1, 2));
  CHECK(a == b);
  CHECK(a == P(1, 2));
  CHECK(a.coords() == std::array<Scalar, 3>{Q(1), Q(2), Q(1)});
  const PPoint inf = PPoint::direction(Q(-3), Q(6));
  CHECK_FALSE(inf.is_finite());
  CHECK(inf.coords() == std::array<Scalar, 3>{Q(1), Q(-2), Q(0)});
  CHECK_THROWS_AS(inf.ax(), GeomError);
  CHECK_THROWS_AS(PPoint(Q(0), Q(0), Q(0)), GeomError);
  CHECK(PLine(Q(-2), Q(4), Q(6)) == PLine(Q(1), Q(-2), Q(-3)));
}

TEST_CASE("collinear") {
  CHECK(collinear(P(0, 0), P(1, 1), P(2, 2)) == 0);
  CHECK(collinear(P(0, 0), P(1, 0), P(0, 1)) == 1);
  // Row swaps flip the sign but never the vanishing status.
  Lattice lat(11);
  for (int i = 0; i < 50; ++i) {
    const PPoint p = lat.point(), q = lat.point(), r = lat.point();
    CHECK(collinear(p, q, r) == -collinear(q, p, r));
    CHECK(collinear(p, q, r) == collinear(q, r, p));
  }
}

TEST_CASE("concurrent") {
  const PLine x0(Q(1), Q(0), Q(0));
  const PLine y0(Q(0), Q(1), Q(0));
  CHECK(concurrent(x0, y0, PLine(Q(1), Q(-1), Q(0))) == 0);
  // y = x + 1  →  canonical row (1, -1, 1); the cofactor expansion gives 1.
  const PLine shifted(Q(-1), Q(1), Q(-1));
  CHECK(shifted.coords() == std::array<Scalar, 3>{Q(1), Q(-1), Q(1)});
  CHECK(concurrent(x0, y0, shifted) == 1);
  CHECK(concurrent(y0, x0, shifted) == -1);
}

TEST_CASE("circle_through") {
  const Circle c = circle_through(P(0, 0), P(4, 0), P(0, 4));
  CHECK(c == Circle(Q(1), Q(-4), Q(-4), Q(0)));
  CHECK(circle_through(P(0, 0), P(1, 0), P(0, 1)) == Circle(Q(1), Q(-1), Q(-1), Q(0)));
  CHECK_THROWS_WITH_AS(circle_through(P(0, 0), P(1, 1), P(2, 2)), doctest::Contains("CollinearInput"), GeomError);
  CHECK_THROWS_WITH_AS(circle_through(P(0, 0), P(1, 1), PPoint::direction(Q(1), Q(0))),
                       doctest::Contains("PointAtInfinity"), GeomError);
  CHECK_THROWS_WITH_AS(Circle(Q(1), Q(0), Q(0), Q(1)), doctest::Contains("ImaginaryCircle"), GeomError);
  CHECK(c.centre() == P(2, 2));
  CHECK(c.radius2() == 8);
}

TEST_CASE("concyclic4") {
  CHECK(concyclic4(P(0, 0), P(1, 0), P(0, 1), P(1, 1)) == 0);
  CHECK(concyclic4(P(0, 0), P(1, 0), P(0, 1), P(2, 2)) == -4);

  // Zero exactly when the circle through the first three contains the fourth.
  Lattice lat(5);
  const Circle c = circle_through(P(0, 0), P(5, 0), P(0, 5));
  for (int i = 0; i < 40; ++i) {
    const PPoint a = lat.point(), b = lat.point(), d = lat.point();
    PPoint e = lat.point();
    if (i % 2 == 0) e = second_intersection_line_circle(join(P(0, 0), lat.point()), c, P(0, 0));
    try {
      const Circle abe = circle_through(a, b, d);
      CHECK(is_zero(concyclic4(a, b, d, e)) == abe.contains(e));
    } catch (const GeomError&) {
      // collinear draw
    }
  }
}

TEST_CASE("second_intersection_line_circle") {
  const Circle sigma(Q(1), Q(1), Q(1), Q(0));  // x² + y² + x + y = 0
  CHECK(second_intersection_line_circle(PLine(Q(1), Q(-1), Q(0)), sigma, P(0, 0)) == P(-1, -1));
  const Circle unit_sq(Q(1), Q(-1), Q(-1), Q(0));
  CHECK(second_intersection_line_circle(PLine(Q(0), Q(1), Q(0)), unit_sq, P(0, 0)) == P(1, 0));
  // tangent x + y = 0 at the origin
  CHECK(second_intersection_line_circle(PLine(Q(1), Q(1), Q(0)), sigma, P(0, 0)) == P(0, 0));
  CHECK_THROWS_WITH_AS(second_intersection_line_circle(PLine(Q(1), Q(-1), Q(0)), sigma, P(1, 1)),
                       doctest::Contains("KnownPointNotIncident"), GeomError);

  Lattice lat(17);
  for (int i = 0; i < 60; ++i) {
    const PPoint centre = lat.point(), on = lat.point();
    if (centre == on) continue;
    const Circle c = Circle::centred_through(centre, on);
    const PPoint dir = lat.point();
    if (dir == on) continue;
    const PLine ln = join(on, dir);
    const PPoint other = second_intersection_line_circle(ln, c, on);
    CHECK(ln.contains(other));
    CHECK(c.contains(other));
  }
}

TEST_CASE("second_intersection_circle_circle") {
  const Circle c1(Q(1), Q(-1), Q(-1), Q(0));
  const Circle c2(Q(1), Q(-2), Q(0), Q(0));
  CHECK(radical_line(c1, c2) == PLine(Q(1), Q(-1), Q(0)));
  const PPoint out = second_intersection_circle_circle(c1, c2, P(0, 0));
  CHECK(out == P(1, 1));
  CHECK(c1.contains(out));
  CHECK(c2.contains(out));
  CHECK_THROWS_WITH_AS(second_intersection_circle_circle(c1, c1, P(0, 0)), doctest::Contains("IdenticalCircles"),
                       GeomError);

  Lattice lat(23);
  for (int i = 0; i < 60; ++i) {
    const PPoint k = lat.point(), q1 = lat.point(), q2 = lat.point();
    if (k == q1 || k == q2 || q1 == q2) continue;
    const Circle a = Circle::centred_through(q1, k);
    const Circle b = Circle::centred_through(q2, k);
    const PPoint x = second_intersection_circle_circle(a, b, k);
    CHECK(a.contains(x));
    CHECK(b.contains(x));
  }
}

TEST_CASE("invert_point") {
  CHECK(invert_point(P(0, 0), Q(1), P(2, 0)) == P("1/2", "0"));
  CHECK_THROWS_WITH_AS(invert_point(P(1, 1), Q(1), P(1, 1)), doctest::Contains("CenterInversion"), GeomError);
  Lattice lat(29);
  for (int i = 0; i < 100; ++i) {
    const PPoint c = lat.point(), p = lat.point();
    const Scalar k = lat.nonzero();
    if (c == p) continue;
    CHECK(invert_point(c, k, invert_point(c, k, p)) == p);
  }
}

TEST_CASE("convex_quad") {
  CHECK(convex_quad(P(0, 0), P(1, 0), P(1, 1), P(0, 1)));
  CHECK_FALSE(convex_quad(P(0, 0), P(1, 0), P(0, 1), P(1, 1)));
  CHECK_FALSE(convex_quad(P(0, 0), P(2, 0), P(1, 1), P(1, 3)));
  CHECK(sign(orient2d(P(0, 0), P(2, 0), P(1, 1))) == 1);
  CHECK(sign(orient2d(P(2, 0), P(1, 1), P(1, 3))) == -1);
  CHECK_THROWS_WITH_AS(convex_quad(P(0, 0), P(1, 0), P(2, 0), P(0, 1)), doctest::Contains("DegenerateQuad"),
                       GeomError);
}

TEST_CASE("point_reflection and perpendiculars") {
  CHECK(point_reflection(P(0, 0), P(3, 4)) == P(-3, -4));
  CHECK(point_reflection(P(2, 5), P(2, 5)) == P(2, 5));
  CHECK(perpendicular_through(P(0, 0), PLine(Q(0), Q(1), Q(0))) == PLine(Q(1), Q(0), Q(0)));
  CHECK(perpendicular_through(P(1, 1), PLine(Q(1), Q(1), Q(-2))) == PLine(Q(1), Q(-1), Q(0)));
  CHECK(parallel_through(P(1, 1), PLine(Q(1), Q(1), Q(-2))) == PLine(Q(1), Q(1), Q(-2)));
  CHECK_THROWS_WITH_AS(perpendicular_through(P(1, 1), PLine(Q(0), Q(0), Q(1))), doctest::Contains("LineAtInfinity"),
                       GeomError);
}
