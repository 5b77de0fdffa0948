#pragma once

#include <map>
#include <optional>
#include <string>

#include "maintlab/bench.hpp"

namespace maintlab {

struct SvgCurveInput {
    std::string label;  // legend text, e.g. "B Health score"
    const RocCurve* curve = nullptr;
    std::optional<RocPoint> star;  // default-threshold marker
};

/// Self-contained SVG overlaying all curves on one unit square with a dashed
/// random-classifier diagonal. Output is fully deterministic (no timestamps).
std::string render_roc_svg(const std::map<std::string, SvgCurveInput>& curves,
                           const std::string& title);

}  // namespace maintlab
