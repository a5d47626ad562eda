#include "cli/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace bandedge::cli {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 175.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string fixed(double v, int digits = 2) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

std::string tick_label(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

std::string escape(const std::string& s) {
  std::string out;
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

double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / mag;
  return (f < 1.5 ? 1.0 : f < 3.0 ? 2.0 : f < 7.0 ? 5.0 : 10.0) * mag;
}

struct Axis {
  double lo, hi;
  bool log;
  double map(double v, double p0, double p1) const {
    const double a = log ? std::log10(lo) : lo;
    const double b = log ? std::log10(hi) : hi;
    const double x = log ? std::log10(v) : v;
    return p0 + (x - a) / (b - a) * (p1 - p0);
  }
};

std::vector<double> ticks(const Axis& ax) {
  std::vector<double> out;
  if (ax.log) {
    for (double e = std::floor(std::log10(ax.lo)); e <= std::ceil(std::log10(ax.hi)); e += 1.0) {
      const double v = std::pow(10.0, e);
      if (v >= ax.lo * (1 - 1e-12) && v <= ax.hi * (1 + 1e-12)) out.push_back(v);
    }
    return out;
  }
  const double step = nice_step(ax.hi - ax.lo, 6);
  for (double v = std::ceil(ax.lo / step) * step; v <= ax.hi + 1e-9 * step; v += step) {
    out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
  }
  return out;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const auto& s : spec.series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (spec.log_y && !(s.y[i] > 0.0)) continue;
      xlo = std::min(xlo, s.x[i]);
      xhi = std::max(xhi, s.x[i]);
      ylo = std::min(ylo, s.y[i]);
      yhi = std::max(yhi, s.y[i]);
    }
  }
  if (!(xhi > xlo)) { xlo = 0.0; xhi = 1.0; }
  if (!(yhi > ylo)) { ylo = spec.log_y ? 0.1 : 0.0; yhi = 1.0; }
  if (spec.log_y) {
    ylo = std::pow(10.0, std::floor(std::log10(ylo)));
    yhi = std::pow(10.0, std::ceil(std::log10(yhi)));
  } else {
    const double step = nice_step(yhi - ylo, 6);
    ylo = std::min(0.0, std::floor(ylo / step) * step);
    yhi = std::ceil(yhi / step) * step;
  }
  const Axis xa{xlo, xhi, false};
  const Axis ya{ylo, yhi, spec.log_y};
  const double px0 = kLeft, px1 = kWidth - kRight;
  const double py0 = kHeight - kBottom, py1 = kTop;

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (!spec.header.empty()) {
    o << "<!--\n";
    for (const auto& h : spec.header) o << "  " << escape(h) << '\n';
    o << "-->\n";
  }
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(kWidth, 0) << "\" height=\"" << fixed(kHeight, 0)
    << "\" viewBox=\"0 0 " << fixed(kWidth, 0) << ' ' << fixed(kHeight, 0) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  o << "<text x=\"" << fixed((px0 + px1) / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << escape(spec.title)
    << "</text>\n";

  o << "<g stroke=\"#dddddd\" stroke-width=\"0.5\">\n";
  for (double t : ticks(xa)) {
    const double x = xa.map(t, px0, px1);
    o << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(py0) << "\" x2=\"" << fixed(x) << "\" y2=\"" << fixed(py1) << "\"/>\n";
  }
  for (double t : ticks(ya)) {
    const double y = ya.map(t, py0, py1);
    o << "<line x1=\"" << fixed(px0) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(px1) << "\" y2=\"" << fixed(y) << "\"/>\n";
  }
  o << "</g>\n";
  o << "<rect x=\"" << fixed(px0) << "\" y=\"" << fixed(py1) << "\" width=\"" << fixed(px1 - px0) << "\" height=\""
    << fixed(py0 - py1) << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  for (double t : ticks(xa)) {
    o << "<text x=\"" << fixed(xa.map(t, px0, px1)) << "\" y=\"" << fixed(py0 + 18) << "\" text-anchor=\"middle\">"
      << tick_label(t) << "</text>\n";
  }
  for (double t : ticks(ya)) {
    o << "<text x=\"" << fixed(px0 - 6) << "\" y=\"" << fixed(ya.map(t, py0, py1) + 4) << "\" text-anchor=\"end\">"
      << tick_label(t) << "</text>\n";
  }
  o << "<text x=\"" << fixed((px0 + px1) / 2) << "\" y=\"" << fixed(kHeight - 18) << "\" text-anchor=\"middle\">"
    << escape(spec.x_label) << "</text>\n";
  o << "<text x=\"20\" y=\"" << fixed((py0 + py1) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
    << fixed((py0 + py1) / 2) << ")\">" << escape(spec.y_label) << "</text>\n";

  for (std::size_t k = 0; k < spec.series.size(); ++k) {
    const auto& s = spec.series[k];
    o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"" << fixed(s.stroke_width) << '"'
      << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << " points=\"";
    bool first = true;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (spec.log_y && !(s.y[i] > 0.0)) continue;
      const double y = std::clamp(ya.map(s.y[i], py0, py1), py1, py0);
      o << (first ? "" : " ") << fixed(xa.map(s.x[i], px0, px1)) << ',' << fixed(y);
      first = false;
    }
    o << "\"/>\n";
    const double ly = py1 + 16.0 + 20.0 * static_cast<double>(k);
    o << "<line x1=\"" << fixed(px1 + 10) << "\" y1=\"" << fixed(ly) << "\" x2=\"" << fixed(px1 + 34) << "\" y2=\"" << fixed(ly)
      << "\" stroke=\"" << s.color << "\" stroke-width=\"" << fixed(s.stroke_width) << '"'
      << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
    o << "<text x=\"" << fixed(px1 + 40) << "\" y=\"" << fixed(ly + 4) << "\">" << escape(s.label) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace bandedge::cli
