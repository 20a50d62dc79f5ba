#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <thread>

#include "hagge/harness/report.hpp"

namespace hagge::harness {

namespace {

const Scalar kOffset = rational(1, 7);

PPoint nudged(const PPoint& p) { return translate(p, kOffset, 0); }

Scalar point_gap(const PPoint& a, const PPoint& b) { return a == b ? Scalar(0) : dist2(a, b); }

struct Outcome {
  Named residuals;
  Named info;
  std::string note;
};

using Check = std::function<Outcome()>;

VerificationReport run(const Scene& s, const std::string& id, bool control, const Check& check, bool timing) {
  VerificationReport r;
  r.scene = s.id();
  r.seed = s.seed;
  r.theorem = id;
  r.control = control;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = check();
    r.residuals = std::move(o.residuals);
    r.info = std::move(o.info);
    r.note = std::move(o.note);
    bool zero = true;
    for (const auto& [name, v] : r.residuals) zero = zero && is_zero(v);
    r.verdict = zero ? Verdict::Holds : Verdict::Fails;
  } catch (const GeomError& e) {
    r.verdict = Verdict::DegenerateSkipped;
    r.note = e.what();
  }
  if (timing) {
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return r;
}

struct Plan {
  std::vector<std::pair<std::string, Check>> checks;
  std::map<std::string, Check> controls;
};

// first-gen ------------------------------------------------------------------

Plan first_gen_plan(const FirstGenInput& in) {
  auto f = std::make_shared<FirstGenScene>(build_first_gen(in.A, in.B, in.C, in.K, in.sigma));
  Plan plan;
  plan.checks.emplace_back("T1", [f] {
    const Theorem1Verdict t = theorem1_verdict(*f);
    return Outcome{{{"squared_product-1", t.squared_product - 1},
                    {"sign_product+1", Scalar(t.sign_product + 1)},
                    {"oracle(k=1)", theorem1_oracle(*f, 1)},
                    {"oracle(k=7/3)", theorem1_oracle(*f, rational(7, 3))}},
                   {},
                   ""};
  });
  plan.checks.emplace_back("T2", [f] {
    Outcome o{{{"concurrency", theorem2_verdict(*f).concurrency}}, {}, ""};
    const Theorem2Verdict twin = theorem2_verdict(standardized(*f));
    if (twin.involution) o.residuals.emplace_back("involution", *twin.involution);
    if (twin.infinite_parameter) o.note = "a parameter is infinite; homogeneous involution rows used";
    return o;
  });
  plan.checks.emplace_back("T3", [f] {
    const Theorem3Verdict t = theorem3_verdict(*f);
    return Outcome{{{"collinear(L,M,N)", t.lmn},
                    {"collinear(L,M,P)", t.lmp},
                    {"collinear(L,N,P)", t.lnp},
                    {"collinear(M,N,P)", t.mnp},
                    {"pascal", theorem3_pascal(*f).residual}},
                   {},
                   ""};
  });

  plan.controls["T1"] = [f] {
    const PPoint K = nudged(f->K);
    auto moved = [&](const PPoint& p, const PPoint& q, const PPoint& old) {
      return second_intersection_line_circle(join(K, old), circle_through(p, K, q), K);
    };
    const PPoint U = moved(f->B, f->C, f->U), V = moved(f->C, f->A, f->V), W = moved(f->A, f->B, f->W);
    const Theorem1Verdict t = signed_ratio_product(f->A, f->B, f->C, K, U, V, W);
    const Scalar oracle = collinear(invert_point(K, 1, U), invert_point(K, 1, V), invert_point(K, 1, W));
    return Outcome{{{"squared_product-1", t.squared_product - 1}, {"oracle(k=1)", oracle}},
                   {{"sign_product", Scalar(t.sign_product)}},
                   "K moved by (1/7, 0); U, V, W re-cut on circles BKC, CKA, AKB"};
  };
  plan.controls["T2"] = [f] {
    const PPoint X = nudged(f->X);
    return Outcome{{{"concurrency", concurrent(join(f->U, X), join(f->V, f->Y), join(f->W, f->Z))}},
                   {},
                   "X moved by (1/7, 0)"};
  };
  return plan;
}

// theorem 4 ------------------------------------------------------------------

Plan theorem4_plan(const Theorem4Input& in) {
  auto t = std::make_shared<Theorem4Scene>(build_theorem4(in.A, in.B, in.C, in.D, in.E, in.F, in.sigma));
  Plan plan;
  plan.checks.emplace_back("T4", [t] {
    Outcome o{{{"concurrency", t->residual}}, {}, ""};
    const std::array<const PPoint*, 3> uvw{&t->U, &t->V, &t->W};
    for (int i = 0; i < 3; ++i) {
      const std::string n(1, "UVW"[i]);
      o.residuals.emplace_back(n + " on aux", t->aux[i].eval(*uvw[i]));
      o.residuals.emplace_back(n + " on sigma", t->sigma.eval(*uvw[i]));
    }
    return o;
  });
  return plan;
}

// four-circle ----------------------------------------------------------------

std::optional<FourCircleParams> off_unit(const FourCircleParams& prm) {
  FourCircleParams q = prm;
  for (int step = 1; step <= 6; ++step) {
    q.d = prm.d + step * kOffset;
    try {
      q.validate(false);
      return q;
    } catch (const GeomError&) {
    }
  }
  return std::nullopt;
}

Plan four_circle_plan(const FourCircleParams& prm) {
  auto s = std::make_shared<FourCircleScene>(build_four_circle(prm));
  auto t6 = std::make_shared<std::optional<Theorem6Verdict>>();
  auto six = [s, t6]() -> const Theorem6Verdict& {
    if (!*t6) *t6 = theorem6_verdict(*s);
    return **t6;
  };
  Plan plan;
  plan.checks.emplace_back("T5", [s] {
    const auto r = theorem5_verdict(*s);
    Outcome o;
    for (int k = 0; k < 4; ++k) o.residuals.emplace_back("Sigma_" + std::to_string(k + 1), r[k]);
    return o;
  });
  plan.checks.emplace_back("T6", [s, six] {
    const Theorem6Verdict& v = six();
    Outcome o;
    for (int k = 0; k < 4; ++k) {
      for (int j = 0; j < 3; ++j) o.residuals.emplace_back(FourCircleScene::point_name(k, j), v.residuals[3 * k + j]);
    }
    return o;
  });
  plan.checks.emplace_back("T7", [s] {
    const Theorem7Verdict v = theorem7_verdict(*s);
    Outcome o;
    int n = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j, ++n) {
        const std::string pair = "Q" + std::to_string(i + 1) + "Q" + std::to_string(j + 1);
        o.residuals.emplace_back("collinear(" + pair + "P)", v.collinear[n]);
        o.residuals.emplace_back("ratio " + pair, v.cross[n]);
      }
    }
    static const char* sides[3] = {"AB", "BC", "CA"};
    for (int i = 0; i < 3; ++i) o.residuals.emplace_back(std::string("enlargement ") + sides[i], v.enlargement[i]);
    for (int k = 0; k < 4; ++k) o.info.emplace_back("offset Q" + std::to_string(k + 1), v.offsets[k]);
    return o;
  });
  plan.checks.emplace_back("CF-gamma", [s] {
    const Circle g = gamma_circle(s->params);
    Outcome o;
    for (int v = 0; v < 4; ++v) o.residuals.emplace_back(std::string(1, "ABCD"[v]) + " on gamma", g.eval(s->vertices[v]));
    return o;
  });
  plan.checks.emplace_back("CF-a4", [s] {
    return Outcome{{{"A_4", point_gap(a4_closed_form(s->params), s->pts[3][0])}}, {}, ""};
  });
  plan.checks.emplace_back("CF-a4p", [s, six] {
    return Outcome{{{"A_4'", point_gap(a4_partner_closed_form(s->params), six().partners[9])}}, {}, ""};
  });

  // The determinant identities are exercised off the abcd = 1 locus.
  auto shifted = [prm](const std::function<Outcome(const FourCircleParams&)>& body) -> Check {
    return [prm, body] {
      const auto q = off_unit(prm);
      if (!q) throw GeomError(ErrorCode::InvalidParams, "no valid d offset");
      Outcome o = body(*q);
      o.info.emplace_back("d", q->d);
      o.note = "evaluated with d shifted off abcd = 1";
      return o;
    };
  };
  plan.checks.emplace_back("CF-concyclic", shifted([](const FourCircleParams& q) {
    const Scalar det = theorem5_verdict(build_four_circle(q))[3];
    return Outcome{{{"det-reference", det - concyclic_closed_form_reference(q)}}, {{"det", det}}, ""};
  }));
  plan.checks.emplace_back("CF-concyclic-fixed", shifted([](const FourCircleParams& q) {
    const Scalar det = theorem5_verdict(build_four_circle(q))[3];
    return Outcome{{{"det-corrected", det - concyclic_closed_form(q)}}, {{"det", det}}, ""};
  }));
  plan.checks.emplace_back("CF-qline", shifted([](const FourCircleParams& q) {
    const Scalar det = centre_line_determinant_charted(q);
    return Outcome{{{"det-reference", det - centre_line_closed_form_reference(q)}}, {{"det", det}}, ""};
  }));
  plan.checks.emplace_back("CF-qline-fixed", shifted([](const FourCircleParams& q) {
    const Scalar det = centre_line_determinant_charted(q);
    return Outcome{{{"det-corrected", det - centre_line_closed_form(q)}}, {{"det", det}}, ""};
  }));

  plan.controls["T6"] = [s, six] {
    const Theorem6Verdict& v = six();
    const PPoint P = nudged(s->P);
    Outcome o;
    o.note = "P moved by (1/7, 0)";
    for (int k = 0; k < 4; ++k) {
      for (int j = 0; j < 3; ++j) {
        o.residuals.emplace_back(FourCircleScene::point_name(k, j), collinear_affine(s->pts[k][j], v.partners[3 * k + j], P));
      }
    }
    return o;
  };
  return plan;
}

// second-gen -----------------------------------------------------------------

Scalar conic_gap(const Conic& a, const Conic& b) {
  Scalar gap = 0;
  for (int i = 0; i < 6; ++i) gap += abs(a.coeffs()[i] - b.coeffs()[i]);
  return gap;
}

Plan second_gen_plan(const SecondGenInput& in) {
  auto g = std::make_shared<SecondGenScene>(build_second_gen(in.A, in.B, in.C, in.T, in.hcirc));
  Plan plan;
  plan.checks.emplace_back("T8", [g] {
    const auto r = theorem8_verdict(*g);
    return Outcome{{{"collinear(X,P,U)", r[0]}, {"collinear(Y,P,V)", r[1]}, {"collinear(Z,P,W)", r[2]}}, {}, ""};
  });
  plan.checks.emplace_back("T9", [g] {
    return Outcome{{{"collinear(L,M,N)", theorem9_verdict(*g).residual}}, {}, "evidence-only (no proof known)"};
  });
  plan.checks.emplace_back("T10", [g] {
    const Theorem10Verdict t = theorem10_verdict(*g);
    return Outcome{{{"midpoint(F,W) on conic", t.residual}}, {}, "midpoint conic: " + t.conic.kind()};
  });
  plan.checks.emplace_back("SIM", [g] {
    const SecondGenScene& s = *g;
    const auto& m = s.sim;
    Outcome o;
    const std::array<std::pair<const PPoint*, const PPoint*>, 7> pairs{
        {{&s.A, &s.X}, {&s.B, &s.Y}, {&s.C, &s.Z}, {&s.P, &s.P}, {&s.D, &s.U}, {&s.E, &s.V}, {&s.F, &s.W}}};
    static const char* names[7] = {"A->X", "B->Y", "C->Z", "P->P", "D->U", "E->V", "F->W"};
    for (int i = 0; i < 7; ++i) o.residuals.emplace_back(names[i], point_gap(m.apply(*pairs[i].first), *pairs[i].second));
    const Circle image = circle_through(m.apply(s.A), m.apply(s.B), m.apply(s.J));
    o.residuals.emplace_back("circ->hcirc", image == s.hcirc ? Scalar(0) : Scalar(1));
    const Scalar r2 = m.ratio2();
    o.residuals.emplace_back("|XY|^2", dist2(s.X, s.Y) - r2 * dist2(s.A, s.B));
    o.residuals.emplace_back("|YZ|^2", dist2(s.Y, s.Z) - r2 * dist2(s.B, s.C));
    o.residuals.emplace_back("|ZX|^2", dist2(s.Z, s.X) - r2 * dist2(s.C, s.A));
    const bool opposite = sign(orient2d(s.A, s.B, s.C)) * sign(orient2d(s.X, s.Y, s.Z)) < 0;
    o.residuals.emplace_back("orientation reversed", opposite ? Scalar(0) : Scalar(1));
    for (const auto& [n, p] : {std::pair{"J", &s.J}, {"D", &s.D}, {"E", &s.E}, {"F", &s.F}}) {
      o.residuals.emplace_back(std::string(n) + " on circ", s.circ.eval(*p));
    }
    for (const auto& [n, p] : {std::pair{"T", &s.T}, {"X", &s.X}, {"Y", &s.Y}, {"Z", &s.Z}, {"U", &s.U},
                               {"V", &s.V}, {"W", &s.W}}) {
      o.residuals.emplace_back(std::string(n) + " on hcirc", s.hcirc.eval(*p));
    }
    const ConicImage ci = conic_image_check(s);
    o.residuals.emplace_back("conic ABCPJ -> XYZPT", conic_gap(ci.image, ci.target));
    const OrthologyResult back = orthologic_centre({s.X, s.Y, s.Z}, {s.A, s.B, s.C});
    o.residuals.emplace_back("orthology XYZ->ABC residual", back.residual);
    o.residuals.emplace_back("orthology XYZ->ABC centre = T", point_gap(back.centre, s.T));
    o.info.emplace_back("ratio^2", r2);
    return o;
  });
  plan.checks.emplace_back("PARA", [g] {
    const ParalogyVerdict p = paralogic_verdict(*g);
    return Outcome{{{"at Tp", p.atTp}, {"at Jp", p.atJp}}, {}, "paralogy: lines through the vertices parallel to the other triangle's sides"};
  });

  plan.controls["T8"] = [g] {
    const PPoint U = g->sim.apply(nudged(g->D));
    return Outcome{{{"collinear(X,P,U)", collinear(g->X, g->P, U)}}, {}, "U replaced by sim(D + (1/7, 0))"};
  };
  plan.controls["PARA"] = [g] {
    const PPoint c = nudged(g->Tp);
    return Outcome{{{"at Tp + (1/7, 0)", paralogy_residual({g->X, g->Y, g->Z}, {g->A, g->B, g->C}, c)}}, {},
                   "candidate moved off the antipode"};
  };
  return plan;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::DegenerateSkipped: return "degenerate-skipped";
  }
  return "?";
}

std::vector<std::string> theorems_for(SceneKind kind) {
  switch (kind) {
    case SceneKind::FirstGen: return {"T1", "T2", "T3"};
    case SceneKind::Theorem4: return {"T4"};
    case SceneKind::FourCircle:
      return {"T5", "T6", "T7", "CF-gamma", "CF-a4", "CF-a4p", "CF-concyclic", "CF-concyclic-fixed", "CF-qline", "CF-qline-fixed"};
    case SceneKind::SecondGen: return {"T8", "T9", "T10", "SIM", "PARA"};
  }
  return {};
}

std::vector<VerificationReport> verify_scene(const Scene& s, const std::set<std::string>& theorems,
                                             bool negative_controls, bool timing) {
  const auto known = theorems_for(s.kind);
  for (const auto& t : theorems) {
    if (std::find(known.begin(), known.end(), t) == known.end()) {
      throw GeomError(ErrorCode::SchemaError, "theorem '" + t + "' does not apply to " + kind_name(s.kind) + " scenes");
    }
  }
  auto wanted = [&](const std::string& t) { return theorems.empty() || theorems.count(t) > 0; };

  std::vector<VerificationReport> out;
  Plan plan;
  try {
    plan = std::visit(
        [](const auto& p) -> Plan {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, FirstGenInput>) return first_gen_plan(p);
          else if constexpr (std::is_same_v<T, Theorem4Input>) return theorem4_plan(p);
          else if constexpr (std::is_same_v<T, FourCircleParams>) return four_circle_plan(p);
          else return second_gen_plan(p);
        },
        s.payload);
  } catch (const GeomError& e) {
    for (const auto& t : known) {
      if (!wanted(t)) continue;
      VerificationReport r;
      r.scene = s.id();
      r.seed = s.seed;
      r.theorem = t;
      r.verdict = Verdict::DegenerateSkipped;
      r.note = e.what();
      out.push_back(std::move(r));
    }
    return out;
  }
  for (const auto& [id, check] : plan.checks) {
    if (!wanted(id)) continue;
    out.push_back(run(s, id, false, check, timing));
    if (negative_controls) {
      if (auto it = plan.controls.find(id); it != plan.controls.end()) out.push_back(run(s, id, true, it->second, timing));
    }
  }
  return out;
}

Summary summarize(const std::vector<VerificationReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    if (r.control) {
      if (r.verdict == Verdict::Fails) ++s.control_fails;
      else if (r.verdict == Verdict::Holds) ++s.control_holds;
      continue;
    }
    switch (r.verdict) {
      case Verdict::Holds: ++s.holds; break;
      case Verdict::Fails: ++s.fails; break;
      case Verdict::DegenerateSkipped: ++s.degenerate; break;
    }
  }
  return s;
}

int exit_code(const Summary& s) {
  if (s.fails > 0) return 1;
  if (s.degenerate > 0) return 2;
  return 0;
}

json report_to_json(const VerificationReport& r) {
  auto named = [](const Named& v) {
    json arr = json::array();
    for (const auto& [n, q] : v) arr.push_back({{"name", n}, {"value", to_string(q)}});
    return arr;
  };
  json j = {{"scene", r.scene},        {"seed", r.seed},
            {"theorem", r.theorem},    {"control", r.control},
            {"verdict", verdict_name(r.verdict)}, {"residuals", named(r.residuals)}};
  if (!r.info.empty()) j["info"] = named(r.info);
  if (!r.note.empty()) j["note"] = r.note;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

json reports_to_json(const std::vector<VerificationReport>& reports) {
  const Summary s = summarize(reports);
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return {{"schema", "hagge-report/1"},
          {"summary",
           {{"holds", s.holds},
            {"fails", s.fails},
            {"degenerate", s.degenerate},
            {"control_fails", s.control_fails},
            {"control_holds", s.control_holds}}},
          {"reports", arr}};
}

std::vector<VerificationReport> run_campaign(const CampaignOptions& opt) {
  if (opt.count < 1) throw GeomError(ErrorCode::SchemaError, "count must be at least 1");
  const auto known = theorems_for(opt.kind);
  for (const auto& t : opt.theorems) {
    if (std::find(known.begin(), known.end(), t) == known.end()) {
      throw GeomError(ErrorCode::SchemaError, "theorem '" + t + "' does not apply to " + kind_name(opt.kind) + " scenes");
    }
  }
  std::vector<std::vector<VerificationReport>> slots(static_cast<std::size_t>(opt.count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < opt.count; i = next++) {
      const std::uint64_t seed = opt.seed_base + static_cast<std::uint64_t>(i);
      try {
        slots[i] = verify_scene(generate_scene(opt.kind, seed), opt.theorems, opt.negative_controls, opt.timing);
      } catch (const GeomError& e) {
        for (const auto& t : known) {
          if (!opt.theorems.empty() && !opt.theorems.count(t)) continue;
          VerificationReport r;
          r.scene = kind_name(opt.kind) + "/" + std::to_string(seed);
          r.seed = seed;
          r.theorem = t;
          r.verdict = Verdict::DegenerateSkipped;
          r.note = e.what();
          slots[i].push_back(std::move(r));
        }
      }
    }
  };
  unsigned n = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(opt.count));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<VerificationReport> out;
  for (auto& slot : slots) {
    for (auto& r : slot) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hagge::harness
