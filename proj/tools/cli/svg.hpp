#pragma once

#include <string>
#include <vector>

namespace bandedge::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#000000";
  double stroke_width = 1.5;
  bool dashed = false;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  /// Extra lines placed in an XML comment at the top of the file.
  std::vector<std::string> header;
  std::vector<Series> series;
};

/// Renders a static line plot. Non-positive values are dropped on a log axis.
std::string render_svg(const PlotSpec& spec);

}  // namespace bandedge::cli
