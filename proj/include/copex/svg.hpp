#pragma once

#include <span>
#include <string>
#include <utility>

namespace copex {

// Scatter plot of points in the unit square as a standalone SVG document.
// Output is byte-deterministic: fixed canvas, fixed float formatting, no
// timestamps or generator comments.
std::string svg_scatter(std::span<const std::pair<double, double>> pts,
                        int canvas_px = 600, double point_radius = 2.0);

}  // namespace copex
