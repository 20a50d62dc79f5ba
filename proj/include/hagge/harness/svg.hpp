#pragma once

#include <string>

#include "hagge/harness/scene.hpp"

namespace hagge::harness {

/// SVG document for a scene. Coordinates become doubles only here.
std::string render_svg(const Scene& s);

/// Writes render_svg to `out`; throws IoError.
void emit_svg(const Scene& s, const std::string& out);

}  // namespace hagge::harness
