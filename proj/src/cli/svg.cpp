#include "dplab/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace dplab::cli {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

SvgDoc::SvgDoc(double width, double height) : width_(width), height_(height) {}

void SvgDoc::line(double x1, double y1, double x2, double y2,
                  const std::string& stroke, double stroke_width) {
  body_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
           "\" y2=\"" + num(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
           num(stroke_width) + "\"/>\n";
}

void SvgDoc::polyline(const std::vector<std::pair<double, double>>& points,
                      const std::string& stroke, double stroke_width) {
  body_ += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
           num(stroke_width) + "\" points=\"";
  for (const auto& [x, y] : points) body_ += num(x) + "," + num(y) + " ";
  body_ += "\"/>\n";
}

void SvgDoc::rect(double x, double y, double w, double h, const std::string& fill) {
  body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
           "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"/>\n";
}

void SvgDoc::circle(double cx, double cy, double r, const std::string& fill) {
  body_ += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) +
           "\" fill=\"" + fill + "\"/>\n";
}

void SvgDoc::text(double x, double y, const std::string& content, int font_size) {
  body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" +
           std::to_string(font_size) + "\" font-family=\"sans-serif\">" + content +
           "</text>\n";
}

std::string SvgDoc::str() const {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(width_) + "\" height=\"" + num(height_) + "\" viewBox=\"0 0 " +
         num(width_) + " " + num(height_) + "\">\n" + body_ + "</svg>\n";
}

std::string render_line_plot(const std::vector<PlotSeries>& series,
                             const std::string& title, const std::string& x_label,
                             const std::string& y_label,
                             const std::vector<double>& h_lines,
                             const std::vector<std::pair<double, double>>& marks) {
  const double w = 640, h = 420, ml = 70, mr = 20, mt = 40, mb = 50;
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const PlotSeries& s : series)
    for (const auto& [x, y] : s.points) {
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  for (double v : h_lines) {
    y_lo = std::min(y_lo, v);
    y_hi = std::max(y_hi, v);
  }
  if (!(x_hi > x_lo)) x_hi = x_lo + 1;
  if (!(y_hi > y_lo)) y_hi = y_lo + 1;
  double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;

  auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * (w - ml - mr); };
  auto py = [&](double y) {
    return h - mb - (y - y_lo) / (y_hi - y_lo) * (h - mt - mb);
  };

  SvgDoc doc(w, h);
  doc.rect(0, 0, w, h, "#ffffff");
  doc.line(ml, h - mb, w - mr, h - mb, "#000000");
  doc.line(ml, mt, ml, h - mb, "#000000");
  for (int i = 0; i <= 4; ++i) {
    double xv = x_lo + (x_hi - x_lo) * i / 4;
    double yv = y_lo + (y_hi - y_lo) * i / 4;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", xv);
    doc.text(px(xv) - 10, h - mb + 18, buf, 11);
    std::snprintf(buf, sizeof(buf), "%.3g", yv);
    doc.text(8, py(yv) + 4, buf, 11);
    doc.line(px(xv), h - mb, px(xv), h - mb + 4, "#000000");
    doc.line(ml - 4, py(yv), ml, py(yv), "#000000");
  }
  for (double v : h_lines) doc.line(ml, py(v), w - mr, py(v), "#c04040");
  for (const PlotSeries& s : series) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(s.points.size());
    for (const auto& [x, y] : s.points) pts.emplace_back(px(x), py(y));
    doc.polyline(pts, s.color, 1.5);
  }
  for (const auto& [x, y] : marks) doc.circle(px(x), py(y), 4, "#c04040");
  doc.text(ml, mt - 14, title, 14);
  doc.text(w / 2 - 20, h - 12, x_label, 12);
  doc.text(10, mt - 14, y_label, 12);
  return doc.str();
}

std::string render_heatmap(const std::vector<std::vector<double>>& cells,
                           double x_min, double y_min, double cell_size,
                           const std::string& title, double seg_x0, double seg_x1,
                           double seg_y) {
  const std::size_t ny = cells.size();
  const std::size_t nx = ny ? cells[0].size() : 0;
  const double scale = std::min(640.0 / std::max<std::size_t>(nx, 1),
                                640.0 / std::max<std::size_t>(ny, 1));
  const double mt = 36;
  const double w = nx * scale, h = ny * scale + mt;

  SvgDoc doc(w, h);
  doc.rect(0, 0, w, h, "#ffffff");
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      double v = std::clamp(cells[j][i], -1.0, 1.0);
      int r, g, b;
      if (v >= 0) {  // white to red
        r = 255;
        g = b = static_cast<int>(std::lround(255 * (1.0 - v)));
      } else {  // white to blue
        b = 255;
        r = g = static_cast<int>(std::lround(255 * (1.0 + v)));
      }
      char color[10];
      std::snprintf(color, sizeof(color), "#%02x%02x%02x", r, g, b);
      // model y points up, SVG y points down
      doc.rect(i * scale, mt + (ny - 1 - j) * scale, scale + 0.5, scale + 0.5,
               color);
    }
  auto px = [&](double x) { return (x - x_min) / cell_size * scale; };
  auto py = [&](double y) {
    return mt + (ny * cell_size - (y - y_min)) / cell_size * scale;
  };
  doc.line(px(seg_x0), py(seg_y), px(seg_x1), py(seg_y), "#000000", 2.5);
  doc.text(10, 24, title, 14);
  return doc.str();
}

}  // namespace dplab::cli
