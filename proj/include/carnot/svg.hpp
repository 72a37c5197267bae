#ifndef CARNOT_SVG_HPP
#define CARNOT_SVG_HPP

#include <string>
#include <vector>

namespace carnot {

/// Minimal diagnostic plot: one polyline with axes and tick labels.
void write_svg_polyline(const std::string& path, const std::vector<double>& xs,
                        const std::vector<double>& ys, const std::string& title,
                        const std::string& xlabel, const std::string& ylabel);

}  // namespace carnot

#endif
