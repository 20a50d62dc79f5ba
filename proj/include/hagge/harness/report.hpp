#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hagge/harness/scene.hpp"

namespace hagge::harness {

enum class Verdict { Holds, Fails, DegenerateSkipped };

std::string verdict_name(Verdict v);

using Named = std::vector<std::pair<std::string, Scalar>>;

struct VerificationReport {
  std::string scene;
  std::uint64_t seed = 0;
  std::string theorem;  ///< T1..T10, SIM, PARA or a CF-* closed-form check
  bool control = false;  ///< a perturbed negative control; expected to fail
  Verdict verdict = Verdict::Holds;
  Named residuals;
  Named info;  ///< reported values that do not enter the verdict
  std::string note;
  std::optional<double> timing_ms;
};

/// Theorems that apply to a scene kind, in report order.
std::vector<std::string> theorems_for(SceneKind kind);

/// Verifies the requested theorems (all applicable when empty). Unknown or
/// inapplicable ids throw SchemaError.
std::vector<VerificationReport> verify_scene(const Scene& s, const std::set<std::string>& theorems,
                                             bool negative_controls, bool timing);

struct Summary {
  int holds = 0, fails = 0, degenerate = 0;
  int control_fails = 0, control_holds = 0;
};

Summary summarize(const std::vector<VerificationReport>& reports);

/// 0 when everything holds, 1 on any failure, 2 when the only issues are
/// degenerate skips. Controls do not count.
int exit_code(const Summary& s);

json report_to_json(const VerificationReport& r);
json reports_to_json(const std::vector<VerificationReport>& reports);

struct CampaignOptions {
  SceneKind kind = SceneKind::FirstGen;
  std::set<std::string> theorems;
  int count = 1;
  std::uint64_t seed_base = 1;
  bool negative_controls = false;
  bool timing = false;
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

/// Scenes seed_base .. seed_base + count − 1, verified concurrently, reports
/// sorted by seed. Generation failures appear as degenerate-skipped entries.
std::vector<VerificationReport> run_campaign(const CampaignOptions& opt);

}  // namespace hagge::harness
