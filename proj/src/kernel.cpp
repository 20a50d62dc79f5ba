#include "hagge/kernel.hpp"

#include "hagge/linalg.hpp"

namespace hagge {

namespace {

std::array<Scalar, 3> cross(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_null(const std::array<Scalar, 3>& v) { return is_zero(v[0]) && is_zero(v[1]) && is_zero(v[2]); }

std::string triple_str(const std::array<Scalar, 3>& c) {
  return "(" + to_string(c[0]) + ", " + to_string(c[1]) + ", " + to_string(c[2]) + ")";
}

}  // namespace

// PPoint / PLine -------------------------------------------------------------

PPoint::PPoint(Scalar x, Scalar y, Scalar w) : c_{std::move(x), std::move(y), std::move(w)} {
  if (!canonicalize_projective(c_)) throw GeomError(ErrorCode::ZeroVector, "point (0, 0, 0)");
}

Scalar PPoint::ax() const {
  if (!is_finite()) throw GeomError(ErrorCode::PointAtInfinity, str());
  return c_[0] / c_[2];
}

Scalar PPoint::ay() const {
  if (!is_finite()) throw GeomError(ErrorCode::PointAtInfinity, str());
  return c_[1] / c_[2];
}

std::string PPoint::str() const {
  if (is_finite()) return "(" + to_string(ax()) + ", " + to_string(ay()) + ")";
  return "[" + to_string(c_[0]) + " : " + to_string(c_[1]) + " : 0]";
}

PLine::PLine(Scalar l, Scalar m, Scalar n) : c_{std::move(l), std::move(m), std::move(n)} {
  if (!canonicalize_projective(c_)) throw GeomError(ErrorCode::ZeroVector, "line (0, 0, 0)");
}

std::string PLine::str() const { return triple_str(c_); }

// Quadratic forms ------------------------------------------------------------

Scalar QuadraticForm::eval(const PPoint& p) const {
  const auto& [x, y, w] = p.coords();
  return k[0] * x * x + k[1] * x * y + k[2] * y * y + k[3] * x * w + k[4] * y * w + k[5] * w * w;
}

Scalar QuadraticForm::polar(const PPoint& p, const PPoint& q) const {
  const auto& [px, py, pw] = p.coords();
  const auto& [qx, qy, qw] = q.coords();
  Scalar s = k[0] * px * qx + k[2] * py * qy + k[5] * pw * qw;
  s += (k[1] * (px * qy + py * qx) + k[3] * (px * qw + pw * qx) + k[4] * (py * qw + pw * qy)) / 2;
  return s;
}

PPoint second_point_on_quadratic(const QuadraticForm& q, const PLine& ln, const PPoint& known) {
  if (!ln.contains(known)) throw GeomError(ErrorCode::KnownPointNotIncident, known.str() + " not on line " + ln.str());
  if (!is_zero(q.eval(known))) throw GeomError(ErrorCode::KnownPointNotIncident, known.str() + " not on curve");

  // Any second point R of the line; then αK + βR is on the curve for
  // α = Q(R), β = −2·B(K, R).
  static const std::array<std::array<int, 3>, 5> probes{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}}};
  for (const auto& e : probes) {
    auto r = cross(ln.coords(), {Scalar(e[0]), Scalar(e[1]), Scalar(e[2])});
    if (is_null(r) || is_null(cross(r, known.coords()))) continue;
    const PPoint other(r[0], r[1], r[2]);
    const Scalar alpha = q.eval(other);
    const Scalar beta = -2 * q.polar(known, other);
    if (is_zero(alpha) && is_zero(beta)) {
      throw GeomError(ErrorCode::TangentialDegeneracy, "line " + ln.str() + " lies on the curve");
    }
    const auto& k = known.coords();
    const auto& o = other.coords();
    return PPoint(alpha * k[0] + beta * o[0], alpha * k[1] + beta * o[1], alpha * k[2] + beta * o[2]);
  }
  throw GeomError(ErrorCode::ZeroVector, "no second point on line " + ln.str());
}

// Circle ---------------------------------------------------------------------

Circle::Circle(Scalar cA, Scalar cD, Scalar cE, Scalar cF) {
  if (is_zero(cA)) throw GeomError(ErrorCode::CollinearInput, "circle with zero quadratic coefficient");
  a_ = 1;
  d_ = cD / cA;
  e_ = cE / cA;
  f_ = cF / cA;
  if (sign(radius2()) < 0) throw GeomError(ErrorCode::ImaginaryCircle, str());
}

Circle Circle::centred_through(const PPoint& centre, const PPoint& on) {
  const Scalar cx = centre.ax(), cy = centre.ay();
  return Circle(1, -2 * cx, -2 * cy, cx * cx + cy * cy - dist2(centre, on));
}

PPoint Circle::centre() const { return PPoint::affine(-d_ / 2, -e_ / 2); }

Scalar Circle::radius2() const { return (d_ * d_ + e_ * e_ - 4 * a_ * f_) / (4 * a_ * a_); }

Scalar Circle::eval(const PPoint& p) const { return quadratic().eval(p); }

QuadraticForm Circle::quadratic() const { return QuadraticForm{{a_, Scalar(0), a_, d_, e_, f_}}; }

std::string Circle::str() const {
  return "x^2+y^2 + (" + to_string(d_) + ")x + (" + to_string(e_) + ")y + (" + to_string(f_) + ") = 0";
}

// Predicates -----------------------------------------------------------------

Scalar collinear(const PPoint& p, const PPoint& q, const PPoint& r) {
  return linalg::det3(p.x(), p.y(), p.w(), q.x(), q.y(), q.w(), r.x(), r.y(), r.w());
}

Scalar collinear_affine(const PPoint& p, const PPoint& q, const PPoint& r) {
  return linalg::det3(p.ax(), p.ay(), 1, q.ax(), q.ay(), 1, r.ax(), r.ay(), 1);
}

Scalar concurrent(const PLine& a, const PLine& b, const PLine& c) {
  return linalg::det3(a.l(), a.m(), a.n(), b.l(), b.m(), b.n(), c.l(), c.m(), c.n());
}

Scalar concyclic4(const PPoint& p1, const PPoint& p2, const PPoint& p3, const PPoint& p4) {
  linalg::Matrix m;
  for (const PPoint* p : {&p1, &p2, &p3, &p4}) {
    const Scalar x = p->ax(), y = p->ay();
    m.push_back({x * x + y * y, x, y, Scalar(1)});
  }
  return linalg::determinant(std::move(m));
}

Scalar orient2d(const PPoint& a, const PPoint& b, const PPoint& c) {
  const Scalar ax = a.ax(), ay = a.ay();
  return (b.ax() - ax) * (c.ay() - ay) - (b.ay() - ay) * (c.ax() - ax);
}

bool convex_quad(const PPoint& a, const PPoint& b, const PPoint& c, const PPoint& d) {
  const int s[4] = {sign(orient2d(a, b, c)), sign(orient2d(b, c, d)), sign(orient2d(c, d, a)),
                    sign(orient2d(d, a, b))};
  for (int v : s) {
    if (v == 0) {
      throw GeomError(ErrorCode::DegenerateQuad,
                      "orientation vanishes in " + a.str() + b.str() + c.str() + d.str());
    }
  }
  return s[0] == s[1] && s[1] == s[2] && s[2] == s[3];
}

// Constructions --------------------------------------------------------------

PLine join(const PPoint& p, const PPoint& q) {
  auto c = cross(p.coords(), q.coords());
  if (is_null(c)) throw GeomError(ErrorCode::CoincidentPoints, "join of " + p.str() + " with itself");
  return PLine(c[0], c[1], c[2]);
}

PPoint meet(const PLine& a, const PLine& b) {
  auto c = cross(a.coords(), b.coords());
  if (is_null(c)) throw GeomError(ErrorCode::CoincidentLines, "meet of " + a.str() + " with itself");
  return PPoint(c[0], c[1], c[2]);
}

Circle circle_through(const PPoint& p1, const PPoint& p2, const PPoint& p3) {
  for (const PPoint* p : {&p1, &p2, &p3}) {
    if (!p->is_finite()) throw GeomError(ErrorCode::PointAtInfinity, p->str());
  }
  const Scalar x1 = p1.ax(), y1 = p1.ay(), x2 = p2.ax(), y2 = p2.ay(), x3 = p3.ax(), y3 = p3.ay();
  const Scalar det = linalg::det3(x1, y1, 1, x2, y2, 1, x3, y3, 1);
  if (is_zero(det)) throw GeomError(ErrorCode::CollinearInput, p1.str() + p2.str() + p3.str());
  const Scalar b1 = -(x1 * x1 + y1 * y1), b2 = -(x2 * x2 + y2 * y2), b3 = -(x3 * x3 + y3 * y3);
  const Scalar d = linalg::det3(b1, y1, 1, b2, y2, 1, b3, y3, 1) / det;
  const Scalar e = linalg::det3(x1, b1, 1, x2, b2, 1, x3, b3, 1) / det;
  const Scalar f = linalg::det3(x1, y1, b1, x2, y2, b2, x3, y3, b3) / det;
  return Circle(1, d, e, f);
}

PLine radical_line(const Circle& c1, const Circle& c2) {
  if (c1 == c2) throw GeomError(ErrorCode::IdenticalCircles, c1.str());
  return PLine(c1.cD() - c2.cD(), c1.cE() - c2.cE(), c1.cF() - c2.cF());
}

PPoint second_intersection_line_circle(const PLine& ln, const Circle& c, const PPoint& known) {
  return second_point_on_quadratic(c.quadratic(), ln, known);
}

PPoint second_intersection_circle_circle(const Circle& c1, const Circle& c2, const PPoint& known) {
  if (c1 == c2) throw GeomError(ErrorCode::IdenticalCircles, c1.str());
  if (!c1.contains(known) || !c2.contains(known)) {
    throw GeomError(ErrorCode::KnownPointNotIncident, known.str() + " not on both circles");
  }
  return second_intersection_line_circle(radical_line(c1, c2), c1, known);
}

PPoint invert_point(const PPoint& center, const Scalar& k, const PPoint& p) {
  if (p == center) throw GeomError(ErrorCode::CenterInversion, p.str());
  const Scalar dx = p.ax() - center.ax(), dy = p.ay() - center.ay();
  const Scalar s = k / (dx * dx + dy * dy);
  return PPoint::affine(center.ax() + s * dx, center.ay() + s * dy);
}

PPoint point_reflection(const PPoint& center, const PPoint& p) {
  return PPoint::affine(2 * center.ax() - p.ax(), 2 * center.ay() - p.ay());
}

PPoint midpoint(const PPoint& p, const PPoint& q) {
  return PPoint::affine((p.ax() + q.ax()) / 2, (p.ay() + q.ay()) / 2);
}

PPoint translate(const PPoint& p, const Scalar& dx, const Scalar& dy) {
  return PPoint::affine(p.ax() + dx, p.ay() + dy);
}

Scalar dist2(const PPoint& p, const PPoint& q) {
  const Scalar dx = p.ax() - q.ax(), dy = p.ay() - q.ay();
  return dx * dx + dy * dy;
}

PLine perpendicular_through(const PPoint& p, const PLine& ln) {
  if (ln.is_at_infinity()) throw GeomError(ErrorCode::LineAtInfinity, "perpendicular to the line at infinity");
  return join(p, PPoint::direction(ln.l(), ln.m()));
}

PLine parallel_through(const PPoint& p, const PLine& ln) {
  if (ln.is_at_infinity()) throw GeomError(ErrorCode::LineAtInfinity, "parallel to the line at infinity");
  return join(p, PPoint::direction(ln.m(), -ln.l()));
}

}  // namespace hagge
