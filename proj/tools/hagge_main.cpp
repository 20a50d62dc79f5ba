#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hagge/harness/report.hpp"
#include "hagge/harness/svg.hpp"

using namespace hagge;
using namespace hagge::harness;

namespace {

constexpr int kInputError = 3;

std::set<std::string> split_ids(const std::string& csv) {
  std::set<std::string> out;
  std::stringstream in(csv);
  for (std::string t; std::getline(in, t, ',');) {
    if (!t.empty()) out.insert(t);
  }
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HAGGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw GeomError(ErrorCode::SchemaError, std::string("HAGGE_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw GeomError(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out) throw GeomError(ErrorCode::IoError, "write failed for " + path);
}

int finish(const std::vector<VerificationReport>& reports, const std::string& report_path) {
  const json doc = reports_to_json(reports);
  if (report_path == "-") {
    std::cout << doc.dump(2) << "\n";
  } else if (!report_path.empty()) {
    write_text(report_path, doc.dump(2) + "\n");
  }
  const Summary s = summarize(reports);
  std::cerr << "holds " << s.holds << ", fails " << s.fails << ", degenerate " << s.degenerate;
  if (s.control_fails + s.control_holds > 0) {
    std::cerr << "; controls failing " << s.control_fails << ", controls holding " << s.control_holds;
  }
  std::cerr << "\n";
  for (const auto& r : reports) {
    if (!r.control && r.verdict != Verdict::Holds) {
      std::cerr << "  " << r.scene << " " << r.theorem << ": " << verdict_name(r.verdict)
                << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
    }
  }
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact incidence checks for triangle and circle configurations"};
  app.require_subcommand(1);

  std::string scene_path, report_path, theorems, out_path, kind = "firstGen";
  bool controls = false, timing = false;
  int count = 100;
  unsigned threads = 0;
  std::uint64_t seed = 0;

  auto* verify = app.add_subcommand("verify", "Verify the theorems of one scene file");
  verify->add_option("--scene", scene_path, "Scene JSON")->required();
  verify->add_option("--theorems", theorems, "Comma-separated ids, default all applicable");
  verify->add_option("--report", report_path, "Report JSON path, '-' for stdout");
  verify->add_flag("--negative-controls", controls, "Also run perturbed controls");
  verify->add_flag("--timing", timing, "Record per-check timing in the report");

  auto* fuzz = app.add_subcommand("fuzz", "Seeded campaign over generated scenes");
  fuzz->add_option("--kind", kind, "firstGen, theorem4, fourCircle or secondGen")->required();
  fuzz->add_option("--count", count, "Number of scenes")->check(CLI::PositiveNumber);
  auto* seed_opt = fuzz->add_option("--seed", seed, "First seed (default HAGGE_SEED or 1)");
  fuzz->add_option("--theorems", theorems, "Comma-separated ids, default all applicable");
  fuzz->add_option("--report", report_path, "Report JSON path, '-' for stdout");
  fuzz->add_option("--threads", threads, "Worker threads, 0 = all cores");
  fuzz->add_flag("--negative-controls", controls, "Also run perturbed controls");
  fuzz->add_flag("--timing", timing, "Record per-check timing in the report");

  auto* figure = app.add_subcommand("figure", "Render a scene as SVG");
  figure->add_option("--scene", scene_path, "Scene JSON")->required();
  figure->add_option("--out", out_path, "SVG path")->required();

  auto* gen = app.add_subcommand("generate", "Write the scene for (kind, seed)");
  gen->add_option("--kind", kind, "Scene kind")->required();
  auto* gen_seed = gen->add_option("--seed", seed, "Seed (default HAGGE_SEED or 1)");
  gen->add_option("--out", out_path, "Scene JSON path, stdout when omitted");

  std::string svg_path;
  auto* demo = app.add_subcommand("demo", "Canonical instance of a kind, verified");
  demo->add_option("--kind", kind, "Scene kind")->required();
  demo->add_option("--out", out_path, "Also write the scene JSON here");
  demo->add_option("--svg", svg_path, "Also write its figure here");
  demo->add_option("--report", report_path, "Report JSON path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*verify) {
      const Scene s = load_scene(scene_path);
      return finish(verify_scene(s, split_ids(theorems), controls, timing), report_path);
    }
    if (*fuzz) {
      CampaignOptions opt;
      opt.kind = parse_kind(kind);
      opt.theorems = split_ids(theorems);
      opt.count = count;
      opt.seed_base = seed_opt->count() ? seed : default_seed();
      opt.negative_controls = controls;
      opt.timing = timing;
      opt.threads = threads;
      return finish(run_campaign(opt), report_path);
    }
    if (*figure) {
      emit_svg(load_scene(scene_path), out_path);
      return 0;
    }
    if (*gen) {
      const Scene s = generate_scene(parse_kind(kind), gen_seed->count() ? seed : default_seed());
      if (out_path.empty()) std::cout << scene_to_json(s).dump(2) << "\n";
      else save_scene(s, out_path);
      return 0;
    }
    if (*demo) {
      const Scene s = canonical_scene(parse_kind(kind));
      if (!out_path.empty()) save_scene(s, out_path);
      if (!svg_path.empty()) emit_svg(s, svg_path);
      if (out_path.empty() && report_path.empty()) std::cout << scene_to_json(s).dump(2) << "\n";
      return finish(verify_scene(s, {}, true, false), report_path);
    }
  } catch (const GeomError& e) {
    std::cerr << "hagge: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::SchemaError:
      case ErrorCode::ValidationError:
      case ErrorCode::IoError:
        return kInputError;
      default:
        return 1;
    }
  }
  return 0;
}
