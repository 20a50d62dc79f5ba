// One line per acceptance criterion. Every tolerance is exact zero unless a
// constant below says otherwise; the process fails if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "hagge/harness/report.hpp"

using namespace hagge;
using namespace hagge::harness;

namespace {

constexpr double kT1Seconds = 30;
constexpr double kFourCircleSeconds = 60;
constexpr double kControlShare = 0.99;
constexpr int kMinOffUnitDraws = 20;

int failures = 0;

void line(bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s  %-54s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  if (!ok) ++failures;
}

struct Timed {
  std::vector<VerificationReport> reports;
  double seconds;
};

Timed campaign(SceneKind kind, std::set<std::string> theorems, int count, bool controls) {
  CampaignOptions opt;
  opt.kind = kind;
  opt.theorems = std::move(theorems);
  opt.count = count;
  opt.seed_base = 1;
  opt.negative_controls = controls;
  const auto t0 = std::chrono::steady_clock::now();
  auto reports = run_campaign(opt);
  return {std::move(reports), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

struct Tally {
  int holds = 0, total = 0, scenes = 0;
  std::string first_bad;
};

// Non-control reports for one theorem.
Tally tally(const std::vector<VerificationReport>& rs, const std::string& theorem) {
  Tally t;
  for (const auto& r : rs) {
    if (r.control || r.theorem != theorem) continue;
    ++t.total;
    if (r.verdict == Verdict::Holds) ++t.holds;
    else if (t.first_bad.empty()) t.first_bad = r.scene + " " + verdict_name(r.verdict) + " " + r.note;
    if (r.verdict != Verdict::DegenerateSkipped) ++t.scenes;
  }
  return t;
}

std::string counts(const Tally& t) {
  std::string s = std::to_string(t.holds) + "/" + std::to_string(t.total) + " hold";
  if (!t.first_bad.empty()) s += "; first miss " + t.first_bad;
  return s;
}

const Scalar* residual(const VerificationReport& r, const std::string& name) {
  for (const auto& [n, v] : r.residuals) {
    if (n == name) return &v;
  }
  return nullptr;
}

void all_hold(const Timed& run, const std::string& theorem, int expected, const std::string& name) {
  const Tally t = tally(run.reports, theorem);
  line(t.total == expected && t.holds == expected, name, counts(t));
}

}  // namespace

int main() {
  // T1, T2, T3 on the same 500 first-gen scenes.
  const Timed fg = campaign(SceneKind::FirstGen, {"T1", "T2", "T3"}, 500, true);
  {
    const Tally t = tally(fg.reports, "T1");
    line(t.total == 500 && t.holds == 500, "T1 ratio product, sign and oracle (500)", counts(t));
    int controls = 0, moved = 0;
    for (const auto& r : fg.reports) {
      if (!r.control || r.theorem != "T1") continue;
      ++controls;
      const Scalar* sq = residual(r, "squared_product-1");
      if (r.verdict != Verdict::DegenerateSkipped && sq && !is_zero(*sq)) ++moved;
    }
    line(controls == 500 && moved >= kControlShare * 500, "T1 K-perturbed controls break the product",
         std::to_string(moved) + "/" + std::to_string(controls) + " with product != 1 (need 99%)");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s for T1-T3 with controls", fg.seconds);
    line(fg.seconds < kT1Seconds, "T1 suite runtime < 30 s", buf);
  }
  all_hold(fg, "T2", 500, "T2 concurrency and involution (500)");
  {
    int with_involution = 0;
    for (const auto& r : fg.reports) {
      if (!r.control && r.theorem == "T2" && residual(r, "involution")) ++with_involution;
    }
    line(with_involution == 500, "T2 involution determinant evaluated",
         std::to_string(with_involution) + "/500 scenes through the standardized twin");
  }
  all_hold(fg, "T3", 500, "T3 L, M, N, P collinear (500)");

  const Timed t4 = campaign(SceneKind::Theorem4, {"T4"}, 200, false);
  all_hold(t4, "T4", 200, "T4 concurrency and pencil incidences (200)");

  // Four-circle closed forms.
  {
    const FourCircleParams canonical{1, 2, 3, rational(1, 6), 1, 5};
    const PPoint a4 = a4_closed_form(canonical);
    const PPoint built = build_four_circle(canonical).pts[3][0];
    const PPoint want = PPoint::affine(rational(3, 8), rational(1, 8));
    line(a4 == want && built == want, "A_4 = (3/8, 1/8) at the canonical instance",
         "closed form " + a4.str() + ", construction " + built.str());
  }
  const Timed fc = campaign(SceneKind::FourCircle, {}, 200, false);
  for (const auto& [id, label] : std::vector<std::pair<std::string, std::string>>{
           {"CF-concyclic", "concyclicity det = reference closed form"},
           {"CF-concyclic-fixed", "concyclicity det = reference form / m^3"},
           {"CF-qline", "Q1 Q4 P det = reference closed form"},
           {"CF-qline-fixed", "Q1 Q4 P det = corrected closed form"}}) {
    const Tally t = tally(fc.reports, id);
    // Draws whose shifted construction degenerates are skipped, not counted.
    line(t.scenes >= kMinOffUnitDraws && t.holds == t.scenes, label + " (abcd != 1)",
         counts(t) + "; " + std::to_string(t.scenes) + " non-degenerate");
  }
  all_hold(fc, "CF-gamma", 200, "Gamma closed form through ABCD (200)");
  all_hold(fc, "CF-a4", 200, "A_4 closed form vs construction (200)");
  all_hold(fc, "CF-a4p", 200, "A_4' closed form vs construction (200)");

  {
    const Timed t = campaign(SceneKind::FourCircle, {"T5", "T6", "T7"}, 200, false);
    all_hold(t, "T5", 200, "T5 four concyclicities (200)");
    all_hold(t, "T6", 200, "T6 twelve line residuals (200)");
    all_hold(t, "T7", 200, "T7 Q-line and ratio identities (200)");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", t.seconds);
    line(t.seconds < kFourCircleSeconds, "T5-T7 suite runtime < 60 s", buf);
  }

  const Timed sg = campaign(SceneKind::SecondGen, {}, 500, true);
  all_hold(sg, "T8", 500, "T8 XPU, YPV, ZPW collinear (500)");
  all_hold(sg, "T10", 500, "T10 sixth midpoint on the conic (500)");
  all_hold(sg, "SIM", 500, "similarity exactness and conic image (500)");
  all_hold(sg, "PARA", 500, "paralogy at the antipodes (500)");
  {
    const Tally t = tally(sg.reports, "T9");
    bool flagged = true;
    for (const auto& r : sg.reports) {
      if (r.theorem == "T9") flagged = flagged && r.note.find("evidence-only") != std::string::npos;
    }
    line(t.total == 500 && t.holds == 500 && flagged, "T9 L, M, N collinear, evidence-only (500)", counts(t));
  }

  // Orthology oracle against H = A + B + C − 2O.
  {
    std::mt19937_64 rng(2024);
    auto coord = [&] { return rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 5)); };
    int ok = 0, tried = 0;
    while (tried < 100) {
      const std::array<PPoint, 3> t{PPoint::affine(coord(), coord()), PPoint::affine(coord(), coord()),
                                    PPoint::affine(coord(), coord())};
      if (is_zero(orient2d(t[0], t[1], t[2]))) continue;
      ++tried;
      const PPoint o = circle_through(t[0], t[1], t[2]).centre();
      const PPoint h = PPoint::affine(t[0].ax() + t[1].ax() + t[2].ax() - 2 * o.ax(),
                                      t[0].ay() + t[1].ay() + t[2].ay() - 2 * o.ay());
      const OrthologyResult r = orthologic_centre(t, t);
      if (r.centre == h && is_zero(r.residual)) ++ok;
    }
    line(ok == 100, "orthologic_centre(ABC, ABC) = orthocentre (100)", std::to_string(ok) + "/100");
  }

  // Determinism: the same campaign twice, with different thread counts.
  {
    bool same = true;
    for (SceneKind k : {SceneKind::FirstGen, SceneKind::Theorem4, SceneKind::FourCircle, SceneKind::SecondGen}) {
      CampaignOptions opt;
      opt.kind = k;
      opt.count = 60;
      opt.seed_base = 17;
      opt.negative_controls = true;
      opt.threads = 1;
      const std::string a = reports_to_json(run_campaign(opt)).dump();
      opt.threads = 3;
      const std::string b = reports_to_json(run_campaign(opt)).dump();
      same = same && a == b;
    }
    line(same, "repeated campaigns give byte-identical reports", "all four kinds, 1 vs 3 threads");
  }

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
