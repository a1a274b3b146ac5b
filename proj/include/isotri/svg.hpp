#pragma once

#include <string>
#include <vector>

#include "isotri/geometry.hpp"

namespace isotri {

struct SvgItem {
    Triangle tri;
    std::string kind;
    double metric = 0.0;
};

// Figure with the input triangle filled and each item stroked in a palette
// color; y-up coordinates via an explicit flip, 1 unit = `scale` px.
void write_svg(const std::string& path, const Triangle& input,
               const std::vector<SvgItem>& items, double scale = 100.0);

// Type-colored phase map over (alpha, beta) cells; values are palette
// indices, -1 for empty cells.
void write_phase_svg(const std::string& path,
                     const std::vector<std::vector<int>>& cells,
                     const std::vector<std::string>& legend, double cell_px = 8.0);

}  // namespace isotri
