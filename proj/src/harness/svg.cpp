#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hagge/harness/svg.hpp"

namespace hagge::harness {

namespace {

constexpr double kWidth = 800;
constexpr int kSamples = 256;

struct Pt {
  double x, y;
};

Pt to_pt(const PPoint& p) { return {p.ax().get_d(), p.ay().get_d()}; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

class Canvas {
 public:
  void include(const PPoint& p) {
    if (p.is_finite()) pts_.push_back(to_pt(p));
  }

  void fit() {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const Pt& p : pts_) {
      x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    }
    if (pts_.empty()) x0 = y0 = -1, x1 = y1 = 1;
    double w = std::max(x1 - x0, 1e-9), h = std::max(y1 - y0, 1e-9);
    const double side = std::max(w, h);
    w = h = side;
    const double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
    xmin_ = cx - 0.6 * w, xmax_ = cx + 0.6 * w;
    ymin_ = cy - 0.6 * h, ymax_ = cy + 0.6 * h;
    scale_ = kWidth / (xmax_ - xmin_);
  }

  double sx(double x) const { return (x - xmin_) * scale_; }
  double sy(double y) const { return (ymax_ - y) * scale_; }
  bool inside(const Pt& p, double slack = 1.0) const {
    const double mx = slack * (xmax_ - xmin_), my = slack * (ymax_ - ymin_);
    return p.x > xmin_ - mx && p.x < xmax_ + mx && p.y > ymin_ - my && p.y < ymax_ + my;
  }

  void open(const std::string& id, const std::string& style) {
    out_ << "  <g id=\"" << id << "\" " << style << ">\n";
  }
  void close() { out_ << "  </g>\n"; }

  void point(const PPoint& p, const std::string& label) {
    if (!p.is_finite()) return;
    const Pt q = to_pt(p);
    out_ << "    <circle cx=\"" << fmt(sx(q.x)) << "\" cy=\"" << fmt(sy(q.y)) << "\" r=\"3\"/>"
         << "<text x=\"" << fmt(sx(q.x) + 5) << "\" y=\"" << fmt(sy(q.y) - 5) << "\">" << label << "</text>\n";
  }

  void circle(const Circle& c) {
    const Pt q = to_pt(c.centre());
    const double r = std::sqrt(c.radius2().get_d());
    out_ << "    <circle cx=\"" << fmt(sx(q.x)) << "\" cy=\"" << fmt(sy(q.y)) << "\" r=\"" << fmt(r * scale_)
         << "\"/>\n";
  }

  void polygon(const std::vector<PPoint>& v) {
    out_ << "    <polygon points=\"";
    for (const auto& p : v) {
      const Pt q = to_pt(p);
      out_ << fmt(sx(q.x)) << "," << fmt(sy(q.y)) << " ";
    }
    out_ << "\"/>\n";
  }

  // a·x + b·y + c = 0 clipped to the viewport.
  void line(double a, double b, double c) {
    std::vector<Pt> hits;
    if (std::abs(b) > 1e-12) {
      for (double x : {xmin_, xmax_}) {
        const double y = -(a * x + c) / b;
        if (y >= ymin_ - 1e-9 && y <= ymax_ + 1e-9) hits.push_back({x, y});
      }
    }
    if (std::abs(a) > 1e-12) {
      for (double y : {ymin_, ymax_}) {
        const double x = -(b * y + c) / a;
        if (x >= xmin_ - 1e-9 && x <= xmax_ + 1e-9) hits.push_back({x, y});
      }
    }
    if (hits.size() < 2) return;
    const Pt p = hits.front(), q = hits.back();
    out_ << "    <line x1=\"" << fmt(sx(p.x)) << "\" y1=\"" << fmt(sy(p.y)) << "\" x2=\"" << fmt(sx(q.x))
         << "\" y2=\"" << fmt(sy(q.y)) << "\"/>\n";
  }

  void line(const PLine& l) {
    if (l.is_at_infinity()) return;
    line(l.l().get_d(), l.m().get_d(), l.n().get_d());
  }

  void polyline(const std::vector<std::vector<Pt>>& runs) {
    for (const auto& run : runs) {
      if (run.size() < 2) continue;
      out_ << "    <polyline points=\"";
      for (const Pt& p : run) out_ << fmt(sx(p.x)) << "," << fmt(sy(p.y)) << " ";
      out_ << "\"/>\n";
    }
  }

  // Each line through a known point of the conic meets it once more.
  void conic(const Conic& c, const PPoint& on) {
    const auto& k = c.coeffs();
    double q[6];
    for (int i = 0; i < 6; ++i) q[i] = k[i].get_d();
    const Pt p = to_pt(on);
    std::vector<std::vector<Pt>> runs(1);
    for (int i = 0; i <= kSamples; ++i) {
      const double th = M_PI * i / kSamples;
      const double dx = std::cos(th), dy = std::sin(th);
      const double quad = q[0] * dx * dx + q[1] * dx * dy + q[2] * dy * dy;
      const double lin = 2 * q[0] * p.x * dx + q[1] * (p.x * dy + p.y * dx) + 2 * q[2] * p.y * dy + q[3] * dx + q[4] * dy;
      const Pt s{p.x - lin / quad * dx, p.y - lin / quad * dy};
      if (std::abs(quad) < 1e-12 || !inside(s)) {
        if (!runs.back().empty()) runs.emplace_back();
        continue;
      }
      runs.back().push_back(s);
    }
    polyline(runs);
  }

  void hyperbola(const Scalar& m) {
    const double mm = m.get_d();
    std::vector<std::vector<Pt>> runs;
    for (int branch : {1, -1}) {
      runs.emplace_back();
      for (int i = 0; i <= kSamples; ++i) {
        const double t = std::exp(-4.0 + 8.0 * i / kSamples) * branch;
        const Pt p{(t - 1 / t) / (2 * mm), (t + 1 / t) / 2};
        if (inside(p, 0.1)) runs.back().push_back(p);
        else if (!runs.back().empty()) runs.emplace_back();
      }
    }
    polyline(runs);
  }

  std::string finish(const std::string& title) {
    std::ostringstream doc;
    doc << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kWidth
        << "\" viewBox=\"0 0 " << kWidth << " " << kWidth << "\">\n"
        << "  <title>" << title << "</title>\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << out_.str() << "</svg>\n";
    return doc.str();
  }

 private:
  std::vector<Pt> pts_;
  double xmin_ = 0, xmax_ = 1, ymin_ = 0, ymax_ = 1, scale_ = 1;
  std::ostringstream out_;
};

const char* kTriangle = "fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"";
const char* kCircles = "fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\"";
const char* kLines = "stroke=\"#888\" stroke-width=\"0.8\"";
const char* kConics = "fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1\"";
const char* kPoints = "fill=\"#d62728\" font-family=\"sans-serif\" font-size=\"12\"";
const char* kAxes = "stroke=\"#9467bd\" stroke-width=\"1\" stroke-dasharray=\"6 4\"";

std::string first_gen_svg(const FirstGenInput& in) {
  const FirstGenScene f = build_first_gen(in.A, in.B, in.C, in.K, in.sigma);
  const Theorem3Verdict t3 = theorem3_verdict(f);
  Canvas cv;
  for (const PPoint* p : {&f.A, &f.B, &f.C, &f.K, &f.U, &f.V, &f.W, &f.X, &f.Y, &f.Z, &f.P}) cv.include(*p);
  cv.fit();
  cv.open("triangle", kTriangle);
  cv.polygon({f.A, f.B, f.C});
  cv.close();
  cv.open("circles", kCircles);
  cv.circle(f.sigma);
  cv.close();
  cv.open("lines", kLines);
  cv.line(join(f.U, f.X)), cv.line(join(f.V, f.Y)), cv.line(join(f.W, f.Z));
  if (!(t3.L == t3.M)) cv.line(join(t3.L, t3.M));
  cv.close();
  cv.open("points", kPoints);
  const std::pair<const PPoint*, const char*> pts[] = {{&f.A, "A"}, {&f.B, "B"}, {&f.C, "C"}, {&f.K, "K"},
                                                       {&f.U, "U"}, {&f.V, "V"}, {&f.W, "W"}, {&f.X, "X"},
                                                       {&f.Y, "Y"}, {&f.Z, "Z"}, {&f.P, "P"}, {&t3.L, "L"},
                                                       {&t3.M, "M"}, {&t3.N, "N"}};
  for (const auto& [p, n] : pts) cv.point(*p, n);
  cv.close();
  return cv.finish("triangle and circle through K");
}

std::string theorem4_svg(const Theorem4Input& in) {
  const Theorem4Scene t = build_theorem4(in.A, in.B, in.C, in.D, in.E, in.F, in.sigma);
  Canvas cv;
  for (const PPoint* p : {&t.A, &t.B, &t.C, &t.D, &t.E, &t.F, &t.U, &t.V, &t.W, &t.X, &t.Y, &t.Z, &t.P}) cv.include(*p);
  cv.fit();
  cv.open("triangle", kTriangle);
  cv.polygon({t.A, t.B, t.C});
  cv.close();
  cv.open("conics", kConics);
  cv.conic(t.sigma, t.D);
  for (const Conic& c : t.aux) cv.conic(c, t.D);
  cv.close();
  cv.open("lines", kLines);
  cv.line(join(t.U, t.X)), cv.line(join(t.V, t.Y)), cv.line(join(t.W, t.Z));
  cv.close();
  cv.open("points", kPoints);
  const std::pair<const PPoint*, const char*> pts[] = {{&t.A, "A"}, {&t.B, "B"}, {&t.C, "C"}, {&t.D, "D"}, {&t.E, "E"},
                                                       {&t.F, "F"}, {&t.U, "U"}, {&t.V, "V"}, {&t.W, "W"}, {&t.X, "X"},
                                                       {&t.Y, "Y"}, {&t.Z, "Z"}, {&t.P, "P"}};
  for (const auto& [p, n] : pts) cv.point(*p, n);
  cv.close();
  return cv.finish("triangle and conic through D, E, F");
}

std::string four_circle_svg(const FourCircleParams& prm) {
  const FourCircleScene s = build_four_circle(prm);
  Canvas cv;
  for (int v = 0; v < 4; ++v) {
    cv.include(s.vertices[v]), cv.include(s.rotated[v]);
    for (int j = 0; j < 3; ++j) cv.include(s.pts[v][j]);
  }
  cv.include(s.P);
  cv.fit();
  cv.open("quadrilateral", kTriangle);
  cv.polygon({s.vertices[0], s.vertices[1], s.vertices[2], s.vertices[3]});
  cv.close();
  cv.open("conics", kConics);
  cv.hyperbola(prm.m);
  cv.close();
  cv.open("circles", kCircles);
  cv.circle(s.gamma);
  for (const Circle& c : s.circles) cv.circle(c);
  cv.close();
  cv.open("lines", kLines);
  for (const PLine& l : s.kLines) cv.line(l);
  cv.line(s.qLine);
  cv.close();
  cv.open("points", kPoints);
  static const char* rot[4] = {"A1", "B2", "C3", "D4"};
  for (int v = 0; v < 4; ++v) {
    cv.point(s.vertices[v], std::string(1, "ABCD"[v]));
    cv.point(s.rotated[v], rot[v]);
    cv.point(s.centres[v], "Q" + std::to_string(v + 1));
    for (int j = 0; j < 3; ++j) cv.point(s.pts[v][j], FourCircleScene::point_name(v, j));
  }
  cv.point(s.P, "P");
  cv.close();
  return cv.finish("four circles on a rectangular hyperbola");
}

std::string second_gen_svg(const SecondGenInput& in) {
  const SecondGenScene g = build_second_gen(in.A, in.B, in.C, in.T, in.hcirc);
  const Theorem10Verdict t10 = theorem10_verdict(g);
  const Theorem9Verdict t9 = theorem9_verdict(g);
  Canvas cv;
  for (const PPoint* p : {&g.A, &g.B, &g.C, &g.T, &g.X, &g.Y, &g.Z, &g.J, &g.P, &g.D, &g.E, &g.F, &g.U, &g.V,
                          &g.W}) {
    cv.include(*p);
  }
  cv.fit();
  cv.open("triangle", kTriangle);
  cv.polygon({g.A, g.B, g.C});
  cv.polygon({g.X, g.Y, g.Z});
  cv.close();
  cv.open("circles", kCircles);
  cv.circle(g.circ);
  cv.circle(g.hcirc);
  cv.close();
  cv.open("lines", kLines);
  for (const auto& [a, b] : {std::pair{&g.X, &g.U}, {&g.Y, &g.V}, {&g.Z, &g.W}}) cv.line(join(*a, *b));
  if (!(t9.L == t9.M)) cv.line(join(t9.L, t9.M));
  cv.close();
  cv.open("conics", kConics);
  cv.conic(t10.conic, midpoint(g.A, g.X));
  cv.close();
  // The axes need √ratio, so they exist only in floating point.
  cv.open("axes", kAxes);
  const double phi = std::atan2(g.sim.v.get_d(), g.sim.u.get_d()) / 2;
  const Pt p = to_pt(g.P);
  for (double ang : {phi, phi + M_PI / 2}) {
    const double a = -std::sin(ang), b = std::cos(ang);
    cv.line(a, b, -(a * p.x + b * p.y));
  }
  cv.close();
  cv.open("points", kPoints);
  const std::pair<const PPoint*, const char*> pts[] = {
      {&g.A, "A"}, {&g.B, "B"}, {&g.C, "C"}, {&g.T, "T"}, {&g.X, "X"}, {&g.Y, "Y"}, {&g.Z, "Z"}, {&g.J, "J"},
      {&g.P, "P"}, {&g.D, "D"}, {&g.E, "E"}, {&g.F, "F"}, {&g.U, "U"}, {&g.V, "V"}, {&g.W, "W"}};
  for (const auto& [q, n] : pts) cv.point(*q, n);
  cv.close();
  return cv.finish("indirect similarity and midpoint conic");
}

}  // namespace

std::string render_svg(const Scene& s) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FirstGenInput>) return first_gen_svg(p);
        else if constexpr (std::is_same_v<T, Theorem4Input>) return theorem4_svg(p);
        else if constexpr (std::is_same_v<T, FourCircleParams>) return four_circle_svg(p);
        else return second_gen_svg(p);
      },
      s.payload);
}

void emit_svg(const Scene& s, const std::string& out) {
  const std::string doc = render_svg(s);
  std::ofstream f(out);
  if (!f) throw GeomError(ErrorCode::IoError, "cannot write " + out);
  f << doc;
  if (!f) throw GeomError(ErrorCode::IoError, "write failed for " + out);
}

}  // namespace hagge::harness
