#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include "oscinfo/errors.hpp"
#include "oscinfo/table.hpp"

namespace oscinfo {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;
constexpr int kTicks = 5;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!(lo <= hi)) lo = 0.0, hi = 1.0;
    if (lo == hi) lo -= 0.5, hi += 0.5;
  }
  double frac(double v) const { return (v - lo) / (hi - lo); }
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

double px(const Range& r, double v) { return kLeft + r.frac(v) * (kWidth - kLeft - kRight); }
double py(const Range& r, double v) { return kHeight - kBottom - r.frac(v) * (kHeight - kTop - kBottom); }

void header(std::ostream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"14\">" << escape(title) << "</text>\n";
}

void axes(std::ostream& out, const Range& x, const Range& y, const std::string& x_label,
          const std::string& y_label) {
  const double x0 = kLeft;
  const double x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom;
  const double y1 = kTop;
  out << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
      << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0 << "\"/>\n"
      << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1 << "\"/>\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = x0 + (x1 - x0) * i / kTicks;
    const double fy = y0 - (y0 - y1) * i / kTicks;
    out << "<line x1=\"" << fx << "\" y1=\"" << y0 << "\" x2=\"" << fx << "\" y2=\"" << y0 + 5 << "\"/>\n"
        << "<line x1=\"" << x0 - 5 << "\" y1=\"" << fy << "\" x2=\"" << x0 << "\" y2=\"" << fy << "\"/>\n";
  }
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"10\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = x0 + (x1 - x0) * i / kTicks;
    const double fy = y0 - (y0 - y1) * i / kTicks;
    const double vx = x.lo + (x.hi - x.lo) * i / kTicks;
    const double vy = y.lo + (y.hi - y.lo) * i / kTicks;
    out << "<text x=\"" << fx << "\" y=\"" << y0 + 17 << "\" text-anchor=\"middle\">"
        << format_number(std::round(vx * 1e4) / 1e4) << "</text>\n"
        << "<text x=\"" << x0 - 8 << "\" y=\"" << fy + 3 << "\" text-anchor=\"end\">"
        << format_number(std::round(vy * 1e4) / 1e4) << "</text>\n";
  }
  out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">"
      << escape(x_label) << "</text>\n"
      << "<text x=\"14\" y=\"" << (y0 + y1) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << (y0 + y1) / 2 << ")\">" << escape(y_label) << "</text>\n</g>\n";
}

}  // namespace

void write_line_svg(std::ostream& out, const Table& table, const std::string& title) {
  if (table.columns.size() < 2) throw InputError("line chart needs at least two columns");
  Range x;
  Range y;
  for (const auto& r : table.rows) {
    x.add(r[0]);
    for (std::size_t j = 1; j < r.size(); ++j) y.add(r[j]);
  }
  x.finish();
  y.finish();
  header(out, title);
  axes(out, x, y, table.columns[0], table.columns.size() == 2 ? table.columns[1] : "value");
  for (std::size_t j = 1; j < table.columns.size(); ++j) {
    const char* colour = kPalette[(j - 1) % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& r : table.rows) {
      if (!std::isfinite(r[j])) continue;
      if (!first) out << ' ';
      out << format_number(std::round(px(x, r[0]) * 100) / 100) << ','
          << format_number(std::round(py(y, r[j]) * 100) / 100);
      first = false;
    }
    out << "\"/>\n";
    if (table.columns.size() > 2) {
      const double ly = kTop + 12.0 * static_cast<double>(j);
      out << "<text x=\"" << kWidth - kRight - 4 << "\" y=\"" << ly << "\" text-anchor=\"end\" "
          << "font-family=\"sans-serif\" font-size=\"10\" fill=\"" << colour << "\">"
          << escape(table.columns[j]) << "</text>\n";
    }
  }
  out << "</svg>\n";
}

void write_heatmap_svg(std::ostream& out, const Table& table, const std::string& title) {
  if (table.columns.size() != 3) throw InputError("heat map needs (x, t, value) columns");
  std::map<double, std::size_t> xs;
  std::map<double, std::size_t> ts;
  Range x;
  Range t;
  Range v;
  for (const auto& r : table.rows) {
    xs.emplace(r[0], 0);
    ts.emplace(r[1], 0);
    x.add(r[0]);
    t.add(r[1]);
    v.add(r[2]);
  }
  if (xs.size() * ts.size() != table.rows.size()) throw InputError("heat map data is not a full grid");
  x.finish();
  t.finish();
  v.finish();
  header(out, title);
  const double cell_w = (kWidth - kLeft - kRight) / static_cast<double>(xs.size());
  const double cell_h = (kHeight - kTop - kBottom) / static_cast<double>(ts.size());
  std::size_t k = 0;
  for (auto& [key, idx] : xs) idx = k++;
  k = 0;
  for (auto& [key, idx] : ts) idx = k++;
  for (const auto& r : table.rows) {
    const double f = std::isfinite(r[2]) ? std::clamp(v.frac(r[2]), 0.0, 1.0) : 0.0;
    // white -> dark blue ramp
    const int red = static_cast<int>(std::lround(255.0 * (1.0 - f)));
    const int green = static_cast<int>(std::lround(255.0 * (1.0 - 0.8 * f)));
    const double cx = kLeft + static_cast<double>(xs[r[0]]) * cell_w;
    const double cy = kHeight - kBottom - static_cast<double>(ts[r[1]] + 1) * cell_h;
    out << "<rect x=\"" << format_number(std::round(cx * 100) / 100) << "\" y=\""
        << format_number(std::round(cy * 100) / 100) << "\" width=\""
        << format_number(std::ceil(cell_w * 100) / 100) << "\" height=\""
        << format_number(std::ceil(cell_h * 100) / 100) << "\" fill=\"rgb(" << red << ',' << green
        << ",255)\"/>\n";
  }
  axes(out, x, t, table.columns[0], table.columns[1]);
  out << "</svg>\n";
}

}  // namespace oscinfo
