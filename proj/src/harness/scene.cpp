#include <fstream>
#include <sstream>

#include "hagge/harness/scene.hpp"

namespace hagge::harness {

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  throw GeomError(ErrorCode::SchemaError, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& field(const json& j, const std::string& where, const char* key) {
  if (!j.is_object()) schema_fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_fail(where + "/" + key, "missing field");
  return *it;
}

Scalar scalar_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) schema_fail(where, "expected a \"p/q\" string, got " + j.dump());
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const GeomError& e) {
    schema_fail(where, e.what());
  }
}

Scalar scalar_field(const json& j, const std::string& where, const char* key) {
  return scalar_from_json(field(j, where, key), where + "/" + key);
}

PPoint point_field(const json& j, const std::string& where, const char* key) {
  return point_from_json(field(j, where, key), where + "/" + key);
}

json circle_to_json(const Circle& c) {
  return {{"A", to_string(c.cA())}, {"D", to_string(c.cD())}, {"E", to_string(c.cE())}, {"F", to_string(c.cF())}};
}

Circle circle_from_json(const json& j, const std::string& where) {
  const Scalar a = j.is_object() && j.contains("A") ? scalar_field(j, where, "A") : Scalar(1);
  const Scalar d = scalar_field(j, where, "D"), e = scalar_field(j, where, "E"), f = scalar_field(j, where, "F");
  for (const auto& [k, v] : j.items()) {
    if (k != "A" && k != "D" && k != "E" && k != "F") schema_fail(where + "/" + k, "unknown field");
  }
  try {
    return Circle(a, d, e, f);
  } catch (const GeomError& ex) {
    schema_fail(where, ex.what());
  }
}

json conic_to_json(const Conic& c) {
  json arr = json::array();
  for (const auto& v : c.coeffs()) arr.push_back(to_string(v));
  return {{"coeffs", arr}};
}

Conic conic_from_json(const json& j, const std::string& where) {
  const json& arr = field(j, where, "coeffs");
  if (!arr.is_array() || arr.size() != 6) schema_fail(where + "/coeffs", "expected 6 coefficients");
  std::array<Scalar, 6> k;
  for (int i = 0; i < 6; ++i) k[i] = scalar_from_json(arr[i], where + "/coeffs/" + std::to_string(i));
  try {
    return Conic(k);
  } catch (const GeomError& ex) {
    schema_fail(where, ex.what());
  }
}

std::string invariant_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::KNotOnSigma: return "K on sigma";
    case ErrorCode::KOnSideLine: return "K off the side lines";
    case ErrorCode::DegenerateTriangle: return "ABC non-degenerate";
    case ErrorCode::TNotOnCircle: return "T on hcirc";
    case ErrorCode::TOnSide: return "T off the side lines";
    case ErrorCode::SharedPointNotIncident: return "D, E, F on sigma";
    case ErrorCode::InvalidParams: return "params valid with abcd = 1";
    default: return "construction well defined";
  }
}

using Derived = std::vector<std::pair<std::string, json>>;

Derived derived_points(const Scene& s) {
  Derived out;
  auto add = [&](const std::string& k, const PPoint& p) { out.emplace_back(k, point_to_json(p)); };
  switch (s.kind) {
    case SceneKind::FirstGen: {
      const auto& in = std::get<FirstGenInput>(s.payload);
      const FirstGenScene f = build_first_gen(in.A, in.B, in.C, in.K, in.sigma);
      add("U", f.U), add("V", f.V), add("W", f.W), add("X", f.X), add("Y", f.Y), add("Z", f.Z), add("P", f.P);
      if (f.paramsUVW) {
        json params = json::array();
        for (int i = 0; i < 3; ++i) {
          params.push_back((*f.paramsUVW)[i].str());
          params.push_back((*f.paramsXYZ)[i].str());
        }
        out.emplace_back("params", params);
      }
      break;
    }
    case SceneKind::Theorem4: {
      const auto& in = std::get<Theorem4Input>(s.payload);
      const Theorem4Scene t = build_theorem4(in.A, in.B, in.C, in.D, in.E, in.F, in.sigma);
      add("U", t.U), add("V", t.V), add("W", t.W), add("X", t.X), add("Y", t.Y), add("Z", t.Z), add("P", t.P);
      break;
    }
    case SceneKind::FourCircle: {
      const FourCircleScene f = build_four_circle(std::get<FourCircleParams>(s.payload));
      static const char* rot[4] = {"A1", "B2", "C3", "D4"};
      for (int v = 0; v < 4; ++v) {
        add(std::string(1, "ABCD"[v]), f.vertices[v]);
        add(rot[v], f.rotated[v]);
        add("Q" + std::to_string(v + 1), f.centres[v]);
      }
      add("P", f.P);
      for (int k = 0; k < 4; ++k) {
        for (int j = 0; j < 3; ++j) add(FourCircleScene::point_name(k, j), f.pts[k][j]);
      }
      break;
    }
    case SceneKind::SecondGen: {
      const auto& in = std::get<SecondGenInput>(s.payload);
      const SecondGenScene g = build_second_gen(in.A, in.B, in.C, in.T, in.hcirc);
      add("X", g.X), add("Y", g.Y), add("Z", g.Z), add("J", g.J), add("P", g.P), add("D", g.D), add("E", g.E);
      add("F", g.F), add("U", g.U), add("V", g.V), add("W", g.W), add("Tp", g.Tp), add("Jp", g.Jp);
      out.emplace_back("sim", json{{"u", to_string(g.sim.u)},
                                   {"v", to_string(g.sim.v)},
                                   {"tx", to_string(g.sim.tx)},
                                   {"ty", to_string(g.sim.ty)}});
      break;
    }
  }
  return out;
}

}  // namespace

std::string kind_name(SceneKind k) {
  switch (k) {
    case SceneKind::FirstGen: return "firstGen";
    case SceneKind::Theorem4: return "theorem4";
    case SceneKind::FourCircle: return "fourCircle";
    case SceneKind::SecondGen: return "secondGen";
  }
  return "?";
}

SceneKind parse_kind(const std::string& s) {
  for (SceneKind k : {SceneKind::FirstGen, SceneKind::Theorem4, SceneKind::FourCircle, SceneKind::SecondGen}) {
    if (kind_name(k) == s) return k;
  }
  throw GeomError(ErrorCode::SchemaError, "unknown scene kind '" + s + "'");
}

json point_to_json(const PPoint& p) {
  if (p.is_finite()) return json::array({to_string(p.ax()), to_string(p.ay())});
  return json::array({to_string(p.x()), to_string(p.y()), to_string(p.w())});
}

PPoint point_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || (j.size() != 2 && j.size() != 3)) schema_fail(where, "expected [x, y] or [x, y, w]");
  const Scalar x = scalar_from_json(j[0], where + "/0");
  const Scalar y = scalar_from_json(j[1], where + "/1");
  if (j.size() == 2) return PPoint::affine(x, y);
  const Scalar w = scalar_from_json(j[2], where + "/2");
  try {
    return PPoint(x, y, w);
  } catch (const GeomError& e) {
    schema_fail(where, e.what());
  }
}

json scene_to_json(const Scene& s) {
  json in;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FirstGenInput>) {
          in = {{"A", point_to_json(p.A)}, {"B", point_to_json(p.B)}, {"C", point_to_json(p.C)},
                {"K", point_to_json(p.K)}, {"sigma", circle_to_json(p.sigma)}};
        } else if constexpr (std::is_same_v<T, Theorem4Input>) {
          in = {{"A", point_to_json(p.A)}, {"B", point_to_json(p.B)}, {"C", point_to_json(p.C)},
                {"D", point_to_json(p.D)}, {"E", point_to_json(p.E)}, {"F", point_to_json(p.F)},
                {"sigma", conic_to_json(p.sigma)}};
        } else if constexpr (std::is_same_v<T, FourCircleParams>) {
          in = {{"m", to_string(p.m)}, {"a", to_string(p.a)}, {"b", to_string(p.b)},
                {"c", to_string(p.c)}, {"d", to_string(p.d)}, {"p", to_string(p.p)}};
        } else {
          in = {{"A", point_to_json(p.A)}, {"B", point_to_json(p.B)}, {"C", point_to_json(p.C)},
                {"T", point_to_json(p.T)}, {"hcirc", circle_to_json(p.hcirc)}};
        }
      },
      s.payload);
  json derived = json::object();
  for (auto& [k, v] : derived_points(s)) derived[k] = std::move(v);
  return {{"schema", "hagge-scene/1"}, {"kind", kind_name(s.kind)}, {"seed", s.seed},
          {"provenance", s.provenance}, {"inputs", in}, {"derived", derived}};
}

Scene scene_from_json(const json& j) {
  if (!j.is_object()) schema_fail("", "expected an object");
  const json& schema = field(j, "", "schema");
  if (schema != "hagge-scene/1") schema_fail("/schema", "expected \"hagge-scene/1\"");
  const json& kind = field(j, "", "kind");
  if (!kind.is_string()) schema_fail("/kind", "expected a string");
  Scene s{SceneKind::FirstGen, 0, json::object(), FirstGenInput{PPoint::affine(0, 0), PPoint::affine(0, 0),
                                                                PPoint::affine(0, 0), PPoint::affine(0, 0),
                                                                Circle(1, 0, 0, 0)}};
  try {
    s.kind = parse_kind(kind.get<std::string>());
  } catch (const GeomError& e) {
    schema_fail("/kind", e.what());
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) schema_fail("/seed", "expected an unsigned integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("provenance")) s.provenance = j["provenance"];
  const json& in = field(j, "", "inputs");
  const std::string w = "/inputs";
  switch (s.kind) {
    case SceneKind::FirstGen:
      s.payload = FirstGenInput{point_field(in, w, "A"), point_field(in, w, "B"), point_field(in, w, "C"),
                                point_field(in, w, "K"), circle_from_json(field(in, w, "sigma"), w + "/sigma")};
      break;
    case SceneKind::Theorem4:
      s.payload = Theorem4Input{point_field(in, w, "A"), point_field(in, w, "B"), point_field(in, w, "C"),
                                point_field(in, w, "D"), point_field(in, w, "E"), point_field(in, w, "F"),
                                conic_from_json(field(in, w, "sigma"), w + "/sigma")};
      break;
    case SceneKind::FourCircle:
      s.payload = FourCircleParams{scalar_field(in, w, "m"), scalar_field(in, w, "a"), scalar_field(in, w, "b"),
                                   scalar_field(in, w, "c"), scalar_field(in, w, "d"), scalar_field(in, w, "p")};
      break;
    case SceneKind::SecondGen:
      s.payload = SecondGenInput{point_field(in, w, "A"), point_field(in, w, "B"), point_field(in, w, "C"),
                                 point_field(in, w, "T"), circle_from_json(field(in, w, "hcirc"), w + "/hcirc")};
      break;
  }

  Derived rebuilt;
  try {
    if (s.kind == SceneKind::FourCircle) std::get<FourCircleParams>(s.payload).validate(true);
    rebuilt = derived_points(s);
  } catch (const GeomError& e) {
    throw GeomError(ErrorCode::ValidationError, "invariant '" + invariant_for(e.code()) + "' violated: " + e.what());
  }
  if (j.contains("derived")) {
    const json& d = j["derived"];
    if (!d.is_object()) schema_fail("/derived", "expected an object");
    for (const auto& [k, v] : d.items()) {
      auto it = std::find_if(rebuilt.begin(), rebuilt.end(), [&](const auto& kv) { return kv.first == k; });
      if (it == rebuilt.end()) schema_fail("/derived/" + k, "unknown derived field");
      bool same = false;
      if (k == "params" || k == "sim") {
        same = v == it->second;
      } else {
        same = point_from_json(v, "/derived/" + k) == point_from_json(it->second, "/derived/" + k);
      }
      if (!same) {
        throw GeomError(ErrorCode::ValidationError,
                        "derived '" + k + "' (/derived/" + k + ") does not match the construction " + it->second.dump());
      }
    }
  }
  return s;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeomError(ErrorCode::IoError, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw GeomError(ErrorCode::SchemaError, path + ": " + e.what());
  }
  return scene_from_json(j);
}

void save_scene(const Scene& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GeomError(ErrorCode::IoError, "cannot write " + path);
  out << scene_to_json(s).dump(2) << "\n";
  if (!out) throw GeomError(ErrorCode::IoError, "write failed for " + path);
}

Scene canonical_scene(SceneKind kind) {
  auto P = [](long x, long y) { return PPoint::affine(Scalar(x), Scalar(y)); };
  const json prov = {{"source", "canonical"}};
  switch (kind) {
    case SceneKind::FirstGen:
      return Scene{kind, 0, prov, FirstGenInput{P(2, 1), P(-3, 0), P(0, -2), P(0, 0), Circle(1, 1, 1, 0)}};
    case SceneKind::Theorem4:
      // x² − xy + y² = 1 through (1,0), (0,1), (1,1)
      return Scene{kind, 0, prov,
                   Theorem4Input{P(3, 2), P(-2, -1), P(2, -3), P(1, 0), P(0, 1), P(1, 1),
                                 Conic({Scalar(1), Scalar(-1), Scalar(1), Scalar(0), Scalar(0), Scalar(-1)})}};
    case SceneKind::FourCircle:
      return Scene{kind, 0, prov, FourCircleParams{1, 2, 3, rational(1, 6), 1, 5}};
    case SceneKind::SecondGen:
      return Scene{kind, 0, prov,
                   SecondGenInput{P(0, 0), P(4, 0), P(1, 3), P(5, 1), Circle::centred_through(P(2, 5), P(5, 1))}};
  }
  throw GeomError(ErrorCode::SchemaError, "unknown kind");
}

}  // namespace hagge::harness
