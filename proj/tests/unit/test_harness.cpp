#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"

#include "hagge/harness/report.hpp"
#include "hagge/harness/svg.hpp"

using namespace hagge;
using namespace hagge::harness;
using hagge::test::P;
using hagge::test::Q;

namespace {

const SceneKind kKinds[] = {SceneKind::FirstGen, SceneKind::Theorem4, SceneKind::FourCircle, SceneKind::SecondGen};

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hagge_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("scene generation is deterministic") {
  for (SceneKind k : kKinds) {
    CHECK(scene_to_json(generate_scene(k, 42)).dump() == scene_to_json(generate_scene(k, 42)).dump());
    CHECK(scene_to_json(generate_scene(k, 42)).dump() != scene_to_json(generate_scene(k, 43)).dump());
  }
  CHECK(generate_scene(SceneKind::FirstGen, 42).id() == "firstGen/42");
}

TEST_CASE("generated scenes satisfy their constraints") {
  const Scene fc = generate_scene(SceneKind::FourCircle, 7);
  const auto& prm = std::get<FourCircleParams>(fc.payload);
  CHECK(prm.a * prm.b * prm.c * prm.d == 1);

  const Scene sg = generate_scene(SceneKind::SecondGen, 99);
  const auto& in = std::get<SecondGenInput>(sg.payload);
  CHECK(in.hcirc.contains(in.T));

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Scene first = generate_scene(SceneKind::FirstGen, seed);
    const auto& fg = std::get<FirstGenInput>(first.payload);
    CHECK(fg.sigma.contains(fg.K));
    const Scene conic = generate_scene(SceneKind::Theorem4, seed);
    const auto& t4 = std::get<Theorem4Input>(conic.payload);
    CHECK((t4.sigma.contains(t4.D) && t4.sigma.contains(t4.E) && t4.sigma.contains(t4.F)));
    CHECK_FALSE(degeneracy(generate_scene(SceneKind::SecondGen, seed)));
  }
}

TEST_CASE("scene json roundtrip") {
  for (SceneKind k : kKinds) {
    const Scene s = canonical_scene(k);
    const std::string path = temp_path(kind_name(k) + ".json");
    save_scene(s, path);
    const std::string first = slurp(path);
    save_scene(load_scene(path), path);
    CHECK(slurp(path) == first);
    std::filesystem::remove(path);
  }
  const json j = scene_to_json(canonical_scene(SceneKind::FourCircle));
  CHECK(j["inputs"]["c"] == "1/6");
  CHECK(j["derived"]["A_4"] == json::array({"3/8", "1/8"}));
}

TEST_CASE("scene json rejects floats and broken invariants") {
  json j = scene_to_json(canonical_scene(SceneKind::FirstGen));
  json bad = j;
  bad["inputs"]["A"][0] = 2.0;
  CHECK_THROWS_WITH_AS(scene_from_json(bad), doctest::Contains("/inputs/A/0"), GeomError);
  try {
    scene_from_json(bad);
  } catch (const GeomError& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
  }
  bad = j;
  bad["inputs"]["sigma"]["D"] = "0.5";
  CHECK_THROWS_WITH_AS(scene_from_json(bad), doctest::Contains("/inputs/sigma/D"), GeomError);

  bad = j;
  bad["inputs"]["K"] = json::array({"1", "1"});
  try {
    scene_from_json(bad);
    FAIL("K off sigma accepted");
  } catch (const GeomError& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
    CHECK(std::string(e.what()).find("K on sigma") != std::string::npos);
  }

  bad = j;
  bad["derived"]["P"] = json::array({"5", "5"});
  CHECK_THROWS_WITH_AS(scene_from_json(bad), doctest::Contains("/derived/P"), GeomError);

  json fc = scene_to_json(canonical_scene(SceneKind::FourCircle));
  fc["inputs"]["d"] = "2";
  fc.erase("derived");
  CHECK_THROWS_WITH_AS(scene_from_json(fc), doctest::Contains("ValidationError"), GeomError);

  json sg = scene_to_json(canonical_scene(SceneKind::SecondGen));
  sg["inputs"]["T"] = json::array({"5", "2"});
  sg.erase("derived");
  CHECK_THROWS_WITH_AS(scene_from_json(sg), doctest::Contains("T on hcirc"), GeomError);

  j["kind"] = "fifthGen";
  CHECK_THROWS_WITH_AS(scene_from_json(j), doctest::Contains("/kind"), GeomError);
}

TEST_CASE("homogeneous points serialize with three coordinates") {
  const PPoint inf = PPoint::direction(Q(2), Q(-3));
  const json j = point_to_json(inf);
  CHECK(j.size() == 3);
  CHECK(point_from_json(j, "") == inf);
  CHECK(point_from_json(point_to_json(P("1/3", "-2/5")), "") == P("1/3", "-2/5"));
}

TEST_CASE("canonical scenes verify") {
  for (SceneKind k : kKinds) {
    const auto reports = verify_scene(canonical_scene(k), {}, true, false);
    for (const auto& r : reports) {
      CAPTURE(r.theorem);
      CAPTURE(r.note);
      if (r.control) {
        CHECK(r.verdict == Verdict::Fails);
      } else if (r.theorem == "CF-qline") {
        // the reference form is off by a parameter-dependent factor
        CHECK(r.verdict == Verdict::Fails);
      } else {
        CHECK(r.verdict == Verdict::Holds);
      }
    }
  }
  CHECK_THROWS_AS(verify_scene(canonical_scene(SceneKind::FirstGen), {"T5"}, false, false), GeomError);
  const auto only = verify_scene(canonical_scene(SceneKind::SecondGen), {"T9"}, false, false);
  REQUIRE(only.size() == 1);
  CHECK(only[0].note.find("evidence-only") != std::string::npos);
}

TEST_CASE("degenerate scenes are reported, not dropped") {
  const Scene s{SceneKind::FirstGen, 0, json::object(),
                FirstGenInput{P(1, 1), P(2, 2), P(3, 3), P(0, 0), Circle(Q(1), Q(1), Q(1), Q(0))}};
  CHECK(degeneracy(s));
  const auto reports = verify_scene(s, {}, false, false);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    CHECK(r.verdict == Verdict::DegenerateSkipped);
    CHECK(r.note.find("DegenerateTriangle") != std::string::npos);
  }
  CHECK(exit_code(summarize(reports)) == 2);
}

TEST_CASE("summary and exit codes") {
  std::vector<VerificationReport> rs(3);
  CHECK(exit_code(summarize(rs)) == 0);
  rs[0].control = true;
  rs[0].verdict = Verdict::Fails;
  CHECK(exit_code(summarize(rs)) == 0);
  rs[1].verdict = Verdict::DegenerateSkipped;
  CHECK(exit_code(summarize(rs)) == 2);
  rs[2].verdict = Verdict::Fails;
  CHECK(exit_code(summarize(rs)) == 1);
  const Summary s = summarize(rs);
  CHECK(s.control_fails == 1);
  CHECK(s.holds == 0);
}

TEST_CASE("campaigns are ordered and thread-independent") {
  CampaignOptions opt;
  opt.kind = SceneKind::SecondGen;
  opt.count = 12;
  opt.seed_base = 5;
  opt.negative_controls = true;
  opt.threads = 1;
  const std::string one = reports_to_json(run_campaign(opt)).dump();
  opt.threads = 4;
  const auto many = run_campaign(opt);
  CHECK(reports_to_json(many).dump() == one);
  CHECK(many.front().seed == 5);
  CHECK(many.back().seed == 16);
  const Summary s = summarize(many);
  CHECK(s.holds == 12 * 5);
  CHECK(s.control_fails == 12 * 2);

  const json j = report_to_json(many.front());
  CHECK(j["residuals"][0]["value"].is_string());
  CHECK_FALSE(j.contains("timing_ms"));
  opt.timing = true;
  opt.count = 1;
  CHECK(run_campaign(opt).front().timing_ms.has_value());
}

TEST_CASE("svg output") {
  for (SceneKind k : kKinds) {
    const std::string svg = render_svg(canonical_scene(k));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("id=\"points\"") != std::string::npos);
    CHECK(svg == render_svg(canonical_scene(k)));
  }
  const std::string fc = render_svg(canonical_scene(SceneKind::FourCircle));
  CHECK(fc.find(">A_4<") != std::string::npos);
  CHECK(fc.find(">Q4<") != std::string::npos);
  const std::string sg = render_svg(canonical_scene(SceneKind::SecondGen));
  CHECK(sg.find("id=\"axes\"") != std::string::npos);
  CHECK(sg.find("<polyline") != std::string::npos);

  CHECK_THROWS_WITH_AS(emit_svg(canonical_scene(SceneKind::FirstGen), "/nonexistent-dir/x.svg"),
                       doctest::Contains("IoError"), GeomError);
}
