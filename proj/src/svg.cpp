#include "carnot/svg.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace carnot {

void write_svg_polyline(const std::string& path, const std::vector<double>& xs,
                        const std::vector<double>& ys, const std::string& title,
                        const std::string& xlabel, const std::string& ylabel) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_svg_polyline: cannot open " + path);

  const double W = 640, H = 480, ml = 70, mr = 20, mt = 40, mb = 50;
  double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
  if (!xs.empty()) {
    xlo = *std::min_element(xs.begin(), xs.end());
    xhi = *std::max_element(xs.begin(), xs.end());
    ylo = *std::min_element(ys.begin(), ys.end());
    yhi = *std::max_element(ys.begin(), ys.end());
  }
  if (xhi - xlo < 1e-300) xhi = xlo + 1.0;
  if (yhi - ylo < 1e-300) yhi = ylo + 1.0;
  auto px = [&](double x) { return ml + (x - xlo) / (xhi - xlo) * (W - ml - mr); };
  auto py = [&](double y) { return H - mb - (y - ylo) / (yhi - ylo) * (H - mt - mb); };

  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << W / 2 << "' y='24' text-anchor='middle' font-size='16'>" << title
      << "</text>\n"
      << "<line x1='" << ml << "' y1='" << H - mb << "' x2='" << W - mr << "' y2='" << H - mb
      << "' stroke='black'/>\n"
      << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << H - mb
      << "' stroke='black'/>\n";

  std::ostringstream ticks;
  ticks << std::setprecision(4);
  for (int k = 0; k <= 4; ++k) {
    const double x = xlo + k * (xhi - xlo) / 4, y = ylo + k * (yhi - ylo) / 4;
    ticks << "<text x='" << px(x) << "' y='" << H - mb + 18
          << "' text-anchor='middle' font-size='11'>" << x << "</text>\n"
          << "<text x='" << ml - 6 << "' y='" << py(y) + 4
          << "' text-anchor='end' font-size='11'>" << y << "</text>\n";
  }
  out << ticks.str();
  out << "<text x='" << (ml + W - mr) / 2 << "' y='" << H - 12
      << "' text-anchor='middle' font-size='13'>" << xlabel << "</text>\n"
      << "<text x='16' y='" << (mt + H - mb) / 2 << "' text-anchor='middle' font-size='13' "
      << "transform='rotate(-90 16 " << (mt + H - mb) / 2 << ")'>" << ylabel << "</text>\n";

  if (!xs.empty()) {
    out << "<polyline fill='none' stroke='#1f6fb2' stroke-width='1.5' points='";
    for (std::size_t k = 0; k < xs.size(); ++k) out << px(xs[k]) << ',' << py(ys[k]) << ' ';
    out << "'/>\n";
    for (std::size_t k = 0; k < xs.size(); ++k)
      out << "<circle cx='" << px(xs[k]) << "' cy='" << py(ys[k]) << "' r='2.5' fill='#1f6fb2'/>\n";
  }
  out << "</svg>\n";
}

}  // namespace carnot
