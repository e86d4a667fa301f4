#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dplab::cli {

// Minimal SVG 1.1 writer with fixed float formatting, so identical inputs
// produce identical bytes.
class SvgDoc {
 public:
  SvgDoc(double width, double height);

  void line(double x1, double y1, double x2, double y2, const std::string& stroke,
            double stroke_width = 1.0);
  void polyline(const std::vector<std::pair<double, double>>& points,
                const std::string& stroke, double stroke_width = 1.0);
  void rect(double x, double y, double w, double h, const std::string& fill);
  void circle(double cx, double cy, double r, const std::string& fill);
  void text(double x, double y, const std::string& content, int font_size = 12);

  std::string str() const;

 private:
  double width_, height_;
  std::string body_;
};

struct PlotSeries {
  std::vector<std::pair<double, double>> points;
  std::string color = "#1f6fb2";
};

// Simple line plot with axes, tick labels and optional horizontal marker line.
std::string render_line_plot(const std::vector<PlotSeries>& series,
                             const std::string& title, const std::string& x_label,
                             const std::string& y_label,
                             const std::vector<double>& h_lines = {},
                             const std::vector<std::pair<double, double>>& marks = {});

// Diverging blue-white-red heatmap of cell values in [-1, 1], with an overlay
// segment drawn on top.
std::string render_heatmap(const std::vector<std::vector<double>>& cells,
                           double x_min, double y_min, double cell_size,
                           const std::string& title, double seg_x0, double seg_x1,
                           double seg_y);

}  // namespace dplab::cli
