#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schroeter/cubic.hpp"
#include "schroeter/engine.hpp"

namespace schroeter {

struct PlotOptions {
  bool tangents = false;
  int width = 640;
  int height = 640;
  int grid = 240;  // marching-squares cells per side
};

struct SvgResult {
  std::string svg;
  std::vector<std::string> warnings;  // viewport problems; never fatal
};

// Affine chart z = 1. The curve is traced numerically for display only; pair
// members are drawn first in red and second in blue. The viewport frames the
// lowest-generation points so that huge later coordinates do not flatten it.
SvgResult render_svg(const std::optional<Cubic>& curve, const std::vector<PointPair>& pairs,
                     const std::vector<std::size_t>& generation, const PlotOptions& options = {});

inline SvgResult render_svg(const ConstructionState& state, const PlotOptions& options = {}) {
  return render_svg(state.curve, state.pairs, state.generation, options);
}

}  // namespace schroeter
