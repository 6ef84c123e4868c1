#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "io.hpp"

namespace bidisk::svg {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 56.0;
constexpr double kRight = 16.0;
constexpr double kTop = 16.0;
constexpr double kBottom = 40.0;

constexpr std::array<const char*, 6> kPalette{
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string num(double v) { return io::format_double(v, 6); }

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;
  double map(double v, double plo, double phi) const {
    return plo + (v - lo) / (hi - lo) * (phi - plo);
  }
};

Range padded(double lo, double hi) {
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

}  // namespace

std::string render(const std::vector<Curve>& curves) {
  if (curves.empty()) {
    throw std::invalid_argument("plot: dataset is empty");
  }
  double xlo = 0.0, xhi = 0.0, ylo = 0.0, yhi = 0.0;
  bool first = true;
  for (const Curve& c : curves) {
    if (c.points.size() < 2) {
      throw std::invalid_argument("plot: curve \"" + c.label +
                                  "\" has fewer than two points");
    }
    for (const geom::Vec2& p : c.points) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw std::invalid_argument("plot: curve \"" + c.label +
                                    "\" has a non-finite coordinate");
      }
      if (first) {
        xlo = xhi = p.x;
        ylo = yhi = p.y;
        first = false;
      } else {
        xlo = std::min(xlo, p.x);
        xhi = std::max(xhi, p.x);
        ylo = std::min(ylo, p.y);
        yhi = std::max(yhi, p.y);
      }
    }
  }
  const Range xr = padded(xlo, xhi);
  const Range yr = padded(ylo, yhi);
  const double px0 = kLeft, px1 = kWidth - kRight;
  const double py0 = kHeight - kBottom, py1 = kTop;  // y grows upward

  std::string out;
  out +=
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
      "height=\"480\" viewBox=\"0 0 640 480\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" "
         "fill=\"#ffffff\"/>\n";
  out += "<rect x=\"" + num(px0) + "\" y=\"" + num(py1) + "\" width=\"" +
         num(px1 - px0) + "\" height=\"" + num(py0 - py1) +
         "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

  // Tick marks and labels: five per axis, evenly spaced in data units.
  for (int i = 0; i <= 4; ++i) {
    const double t = static_cast<double>(i) / 4.0;
    const double xv = xr.lo + t * (xr.hi - xr.lo);
    const double yv = yr.lo + t * (yr.hi - yr.lo);
    const double px = xr.map(xv, px0, px1);
    const double py = yr.map(yv, py0, py1);
    out += "<line x1=\"" + num(px) + "\" y1=\"" + num(py0) + "\" x2=\"" +
           num(px) + "\" y2=\"" + num(py0 + 4) +
           "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + num(px) + "\" y=\"" + num(py0 + 16) +
           "\" font-family=\"sans-serif\" font-size=\"10\" "
           "text-anchor=\"middle\" fill=\"#333333\">" +
           escape(num(xv)) + "</text>\n";
    out += "<line x1=\"" + num(px0 - 4) + "\" y1=\"" + num(py) + "\" x2=\"" +
           num(px0) + "\" y2=\"" + num(py) +
           "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + num(px0 - 6) + "\" y=\"" + num(py + 3) +
           "\" font-family=\"sans-serif\" font-size=\"10\" "
           "text-anchor=\"end\" fill=\"#333333\">" +
           escape(num(yv)) + "</text>\n";
  }

  for (std::size_t i = 0; i < curves.size(); ++i) {
    const Curve& c = curves[i];
    const char* color = kPalette[i % kPalette.size()];
    std::string d;
    for (std::size_t k = 0; k < c.points.size(); ++k) {
      d += (k == 0 ? "M " : " L ");
      d += num(xr.map(c.points[k].x, px0, px1)) + " " +
           num(yr.map(c.points[k].y, py0, py1));
    }
    out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" +
           std::string(color) + "\" stroke-width=\"1.5\"/>\n";
  }

  // Legend, top-right corner of the plot area.
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    const double ly = py1 + 14 + 16 * static_cast<double>(i);
    out += "<line x1=\"" + num(px1 - 150) + "\" y1=\"" + num(ly - 3) +
           "\" x2=\"" + num(px1 - 126) + "\" y2=\"" + num(ly - 3) +
           "\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + num(px1 - 120) + "\" y=\"" + num(ly) +
           "\" font-family=\"sans-serif\" font-size=\"11\" "
           "fill=\"#333333\">" +
           escape(curves[i].label) + "</text>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace bidisk::svg
