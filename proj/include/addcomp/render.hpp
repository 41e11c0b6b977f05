#pragma once

#include <addcomp/group.hpp>
#include <addcomp/symbolic_set.hpp>

#include <optional>
#include <string>
#include <vector>

namespace addcomp {

struct RenderLayer {
  std::string name;
  SymbolicSet set;
};

// Two axes of a higher-rank group; the remaining free coordinates are fixed to `base`.
struct RenderSlice {
  std::size_t x_axis = 0;
  std::size_t y_axis = 1;
  Point base;
};

// One glyph per layer ('#', 'o', '*', '+', 'x', '@', ...); a point in several
// layers shows the last one. Rows run from the top of the window down.
std::string render_ascii(const std::vector<RenderLayer>& layers, const Window& window,
                         const std::optional<RenderSlice>& slice = std::nullopt);

std::string render_svg(const std::vector<RenderLayer>& layers, const Window& window,
                       const std::optional<RenderSlice>& slice = std::nullopt, int cell = 12);

char layer_glyph(std::size_t index);
std::string layer_color(std::size_t index);

}  // namespace addcomp
