#include "lozlab/harness/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lozlab/core/stats.hpp"
#include "lozlab/harness/report.hpp"

namespace lozlab {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMargin = 48.0;

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

void open_svg(std::ostringstream& os, double w, double h, const std::string& title) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w, 6) << "\" height=\"" << fmt(h, 6)
     << "\" viewBox=\"0 0 " << fmt(w, 6) << ' ' << fmt(h, 6) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << fmt(w / 2, 6) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
     << escape(title) << "</text>\n";
}

void axes(std::ostringstream& os, double x0, double x1, double y0, double y1, const std::string& xl0,
          const std::string& xl1, const std::string& yl) {
  os << "<line x1=\"" << fmt(x0, 6) << "\" y1=\"" << fmt(y0, 6) << "\" x2=\"" << fmt(x1, 6) << "\" y2=\"" << fmt(y0, 6)
     << "\" stroke=\"black\"/>\n"
     << "<line x1=\"" << fmt(x0, 6) << "\" y1=\"" << fmt(y0, 6) << "\" x2=\"" << fmt(x0, 6) << "\" y2=\"" << fmt(y1, 6)
     << "\" stroke=\"black\"/>\n"
     << "<text x=\"" << fmt(x0, 6) << "\" y=\"" << fmt(y0 + 16, 6)
     << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(xl0) << "</text>\n"
     << "<text x=\"" << fmt(x1, 6) << "\" y=\"" << fmt(y0 + 16, 6)
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << escape(xl1) << "</text>\n"
     << "<text x=\"" << fmt(x0 - 6, 6) << "\" y=\"" << fmt(y1 + 4, 6)
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << escape(yl) << "</text>\n";
}

}  // namespace

std::string svg_histogram(const std::vector<double>& values, double lo, double hi, double bin_width,
                          const std::string& title) {
  if (!(hi > lo)) throw std::invalid_argument("histogram range must be non-empty");
  if (bin_width <= 0.0) bin_width = (hi - lo) / 40.0;
  const auto bins = static_cast<std::size_t>(std::ceil((hi - lo) / bin_width));
  std::vector<double> counts(bins, 0.0);
  for (double v : values) {
    if (v < lo || v >= lo + static_cast<double>(bins) * bin_width) continue;
    counts[static_cast<std::size_t>((v - lo) / bin_width)] += 1.0;
  }
  const double total = std::max<double>(1.0, static_cast<double>(values.size()));
  double peak = stats::normal_pdf(0.0);
  for (double& c : counts) {
    c /= total * bin_width;
    peak = std::max(peak, c);
  }
  peak *= 1.1;

  std::ostringstream os;
  open_svg(os, kWidth, kHeight, title);
  const double x0 = kMargin, x1 = kWidth - kMargin / 2, y0 = kHeight - kMargin, y1 = kMargin;
  auto X = [&](double v) { return x0 + (v - lo) / (hi - lo) * (x1 - x0); };
  auto Y = [&](double d) { return y0 - d / peak * (y0 - y1); };
  for (std::size_t b = 0; b < bins; ++b) {
    const double a = lo + static_cast<double>(b) * bin_width;
    const double right = std::min(hi, a + bin_width);
    os << "<rect x=\"" << fmt(X(a), 6) << "\" y=\"" << fmt(Y(counts[b]), 6) << "\" width=\""
       << fmt(std::max(0.0, X(right) - X(a)), 6) << "\" height=\"" << fmt(y0 - Y(counts[b]), 6)
       << "\" fill=\"#9ecae1\" stroke=\"#3182bd\" stroke-width=\"0.5\"/>\n";
  }
  os << "<polyline fill=\"none\" stroke=\"#de2d26\" stroke-width=\"2\" points=\"";
  for (int i = 0; i <= 200; ++i) {
    const double v = lo + (hi - lo) * i / 200.0;
    os << fmt(X(v), 6) << ',' << fmt(Y(stats::normal_pdf(v)), 6) << ' ';
  }
  os << "\"/>\n";
  axes(os, x0, x1, y0, y1, fmt(lo, 4), fmt(hi, 4), fmt(peak, 3));
  os << "</svg>\n";
  return os.str();
}

std::string svg_moments(const std::vector<double>& analytic, const std::vector<double>& empirical,
                        const std::vector<double>& standard_errors, const std::string& title) {
  if (analytic.size() != empirical.size() || empirical.size() != standard_errors.size())
    throw std::invalid_argument("moment vectors must have equal length");
  const std::size_t R = analytic.size();
  double peak = 1e-12;
  for (std::size_t r = 0; r < R; ++r)
    peak = std::max({peak, std::abs(analytic[r]), std::abs(empirical[r]) + 2 * standard_errors[r]});
  peak *= 1.1;

  std::ostringstream os;
  open_svg(os, kWidth, kHeight, title);
  const double x0 = kMargin, x1 = kWidth - kMargin / 2, y0 = kHeight - kMargin, y1 = kMargin;
  auto Y = [&](double v) { return y0 - v / peak * (y0 - y1); };
  const double slot = (x1 - x0) / static_cast<double>(std::max<std::size_t>(R, 1));
  const double bar = slot * 0.35;
  for (std::size_t r = 0; r < R; ++r) {
    const double left = x0 + slot * static_cast<double>(r) + slot * 0.1;
    os << "<rect x=\"" << fmt(left, 6) << "\" y=\"" << fmt(Y(analytic[r]), 6) << "\" width=\"" << fmt(bar, 6)
       << "\" height=\"" << fmt(y0 - Y(analytic[r]), 6) << "\" fill=\"#756bb1\"/>\n";
    const double mid = left + bar * 1.5;
    os << "<rect x=\"" << fmt(left + bar, 6) << "\" y=\"" << fmt(Y(empirical[r]), 6) << "\" width=\"" << fmt(bar, 6)
       << "\" height=\"" << fmt(y0 - Y(empirical[r]), 6) << "\" fill=\"#fdae6b\"/>\n";
    const double e = 2 * standard_errors[r];
    os << "<line x1=\"" << fmt(mid, 6) << "\" y1=\"" << fmt(Y(empirical[r] - e), 6) << "\" x2=\"" << fmt(mid, 6)
       << "\" y2=\"" << fmt(Y(empirical[r] + e), 6) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fmt(left + bar, 6) << "\" y=\"" << fmt(y0 + 16, 6)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">r=" << r << "</text>\n";
  }
  axes(os, x0, x1, y0, y1, "", "", fmt(peak, 4));
  os << "<text x=\"" << fmt(x1, 6) << "\" y=\"40\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
     << "<tspan fill=\"#756bb1\">analytic</tspan> / <tspan fill=\"#e6550d\">empirical</tspan></text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string svg_tiling(const GTPattern& pattern, const std::string& title) {
  const std::size_t depth = pattern.depth();
  const long m = pattern.ceiling();
  const double w = std::sqrt(3.0) / 2.0;
  const double unit = std::clamp(520.0 / static_cast<double>(depth + static_cast<std::size_t>(m) + 1), 3.0, 40.0);
  const double width = unit * w * static_cast<double>(depth + 1) + 2 * kMargin;
  const double height = unit * (static_cast<double>(m) + static_cast<double>(depth)) + 2 * kMargin + 20;
  const double top = kMargin + 20 + unit * static_cast<double>(m) + unit * static_cast<double>(depth) / 2.0;
  // Lattice point (line k, height h) with the domain bottom sloping down half a unit per line.
  auto P = [&](double k, double h) {
    std::ostringstream s;
    s << fmt(kMargin + k * w * unit, 6) << ',' << fmt(top - (h - k / 2.0) * unit, 6);
    return s.str();
  };
  std::ostringstream os;
  open_svg(os, width, height, title);
  auto poly = [&](const std::vector<std::string>& pts, const char* fill) {
    os << "<polygon points=\"";
    for (const auto& p : pts) os << p << ' ';
    os << "\" fill=\"" << fill << "\" stroke=\"#333\" stroke-width=\"0.6\"/>\n";
  };

  std::vector<std::vector<bool>> horizontal(depth + 1);
  for (std::size_t k = 0; k <= depth; ++k) {
    horizontal[k].assign(static_cast<std::size_t>(m) + k, false);
    if (k == 0) continue;
    for (std::size_t i = 1; i <= k; ++i)
      horizontal[k][static_cast<std::size_t>(pattern.at(k, i) + static_cast<long>(k - i))] = true;
  }
  // Horizontal lozenges: two triangles glued along the unit segment [p, p+1] of line k.
  for (std::size_t k = 1; k <= depth; ++k) {
    const auto kd = static_cast<double>(k);
    for (std::size_t p = 0; p < horizontal[k].size(); ++p) {
      if (!horizontal[k][p]) continue;
      const auto pd = static_cast<double>(p);
      // Apexes: height p on line k-1 and p+1 on line k+1 (heights are per-line offsets).
      if (k < depth)
        poly({P(kd - 1, pd), P(kd, pd), P(kd + 1, pd + 1), P(kd, pd + 1)}, "#fdd49e");
      else
        poly({P(kd - 1, pd), P(kd, pd), P(kd, pd + 1)}, "#fdd49e");
    }
  }
  // Remaining triangles in the strip between lines k and k+1 pair up bottom to top.
  for (std::size_t k = 0; k < depth; ++k) {
    const auto kd = static_cast<double>(k);
    std::vector<std::size_t> right, left;  // free segments on line k and on line k+1
    for (std::size_t s = 0; s < horizontal[k].size(); ++s)
      if (!horizontal[k][s]) right.push_back(s);
    for (std::size_t t = 0; t < horizontal[k + 1].size(); ++t)
      if (!horizontal[k + 1][t]) left.push_back(t);
    const std::size_t pairs = std::min(right.size(), left.size());
    for (std::size_t i = 0; i < pairs; ++i) {
      const auto s = static_cast<double>(right[i]);
      const auto t = static_cast<double>(left[i]);
      // t is s or s+1; the two triangles share a slanted edge.
      const bool up = t > s;
      poly({P(kd, s), P(kd, s + 1), P(kd + 1, t + 1), P(kd + 1, t)}, up ? "#9ecae1" : "#a1d99b");
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace lozlab
