#pragma once

// SVG and ASCII drawings of planar rains, with chosen points circled.

#include <cstdint>
#include <string>
#include <vector>

#include "monosimplex/rain.hpp"

namespace monosimplex {

enum class RenderFormat { Svg, Ascii };

struct RenderPlan {
  Rain2D rain;
  std::vector<Point> highlight;  // circled; must be points of `rain`
  int units_per_step = 10;       // horizontal distance between columns
  int units_per_height = 120;    // drawn height of layer k = 1
  RenderFormat format = RenderFormat::Svg;
};

inline constexpr std::uint64_t kRenderPointLimit = 100'000;

// Drawn height of each layer k = 1..L-1 (index k-1). Layer k sits at
// round(H/k), clamped to at least one unit below layer k-1 so that every layer
// stays distinct; H doubles until the last layer is at least one unit high.
std::vector<std::int64_t> layer_heights(std::uint64_t length, std::int64_t units_per_height);

std::string render(const RenderPlan& plan);

}  // namespace monosimplex
