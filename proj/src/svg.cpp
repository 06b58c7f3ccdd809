#include "copex/svg.hpp"

#include <cstdio>

namespace copex {
namespace {

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string svg_scatter(std::span<const std::pair<double, double>> pts,
                        int canvas_px, double point_radius) {
  const int margin = 20;
  const double inner = canvas_px - 2.0 * margin;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
  out += std::to_string(canvas_px);
  out += "\" height=\"";
  out += std::to_string(canvas_px);
  out += "\" viewBox=\"0 0 " + std::to_string(canvas_px) + " " +
         std::to_string(canvas_px) + "\">\n";
  out += "<rect x=\"" + std::to_string(margin) + "\" y=\"" +
         std::to_string(margin) + "\" width=\"" + px(inner) + "\" height=\"" +
         px(inner) + "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (const auto& [x, y] : pts) {
    const double cx = margin + x * inner;
    const double cy = margin + (1.0 - y) * inner;
    out += "<circle cx=\"" + px(cx) + "\" cy=\"" + px(cy) + "\" r=\"" +
           px(point_radius) + "\" fill=\"#1f4e9c\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace copex
