#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "json.hpp"

#include "hagge/conic.hpp"
#include "hagge/first_gen.hpp"
#include "hagge/four_circle.hpp"
#include "hagge/second_gen.hpp"

namespace hagge::harness {

using nlohmann::json;

enum class SceneKind { FirstGen, Theorem4, FourCircle, SecondGen };

std::string kind_name(SceneKind k);
/// Accepts firstGen, theorem4, fourCircle, secondGen.
SceneKind parse_kind(const std::string& s);

struct FirstGenInput {
  PPoint A, B, C, K;
  Circle sigma;
};

struct Theorem4Input {
  PPoint A, B, C, D, E, F;
  Conic sigma;
};

struct SecondGenInput {
  PPoint A, B, C, T;
  Circle hcirc;
};

using Payload = std::variant<FirstGenInput, Theorem4Input, FourCircleParams, SecondGenInput>;

struct Scene {
  SceneKind kind;
  std::uint64_t seed = 0;
  json provenance = json::object();
  Payload payload;

  std::string id() const { return kind_name(kind) + "/" + std::to_string(seed); }
};

/// Deterministic scene for (kind, seed). Degenerate draws are redrawn from
/// the same stream; throws GenerationExhausted after the retry bound.
Scene generate_scene(SceneKind kind, std::uint64_t seed);

/// Hand-picked instances used by `demo` and the docs.
Scene canonical_scene(SceneKind kind);

/// Reason the scene cannot be verified, or nullopt. Covers builder errors and
/// the orientation and coincidence preconditions of the verdicts.
std::optional<std::string> degeneracy(const Scene& s);

// JSON -----------------------------------------------------------------------

/// Inputs plus the constructed points, all rationals as "p/q" strings.
json scene_to_json(const Scene& s);

/// Throws SchemaError (with a JSON pointer) on malformed input and
/// ValidationError when the scene breaks its invariants or a stored derived
/// point disagrees with the construction.
Scene scene_from_json(const json& j);

Scene load_scene(const std::string& path);
void save_scene(const Scene& s, const std::string& path);

json point_to_json(const PPoint& p);
PPoint point_from_json(const json& j, const std::string& where);

}  // namespace hagge::harness
