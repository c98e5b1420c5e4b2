#include "attrition/cli/svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "attrition/cli/format.hpp"

namespace attrition::cli {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 600;
constexpr double kLeft = 90;
constexpr double kRight = 30;
constexpr double kTop = 50;
constexpr double kBottom = 70;
constexpr int kDivisions = 5;
constexpr double kMargin = 0.05;

constexpr const char* kIndustryColor = "#1f4e9c";
constexpr const char* kPirateColor = "#c0392b";

struct Range {
  double lo;
  double hi;
};

// Data extent widened by 5% of its span on both sides.
Range padded(double lo, double hi) {
  double span = hi - lo;
  if (span <= 0.0) {
    span = std::max(1.0, std::abs(lo));
    lo -= span / 2;
    hi += span / 2;
  }
  return {lo - kMargin * span, hi + kMargin * span};
}

std::string px(double v) { return format_fixed(v, 2); }

std::string tick_label(double v, double span) {
  // Snap values that are zero up to rounding noise.
  if (std::abs(v) < 1e-12 * span) v = 0.0;
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

}  // namespace

std::string render_profit_chart(const SimulationTrace& trace) {
  const auto& rows = trace.periods;
  double t_max = rows.empty() ? 0.0 : static_cast<double>(rows.back().t);
  double y_lo = 0.0;
  double y_hi = 0.0;
  for (const auto& r : rows) {
    y_lo = std::min({y_lo, r.industry_profit, r.pirate_profit});
    y_hi = std::max({y_hi, r.industry_profit, r.pirate_profit});
  }
  const Range xr = padded(0.0, t_max);
  const Range yr = padded(y_lo, y_hi);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double t) { return kLeft + (t - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto sy = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n"
      << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">Per-period profit</text>\n";

  // Frame and ticks.
  out << "<g stroke=\"#444444\" stroke-width=\"1\" fill=\"none\">\n"
      << "<rect x=\"" << px(kLeft) << "\" y=\"" << px(kTop) << "\" width=\"" << px(plot_w)
      << "\" height=\"" << px(plot_h) << "\"/>\n";
  for (int i = 0; i <= kDivisions; ++i) {
    const double x = kLeft + plot_w * i / kDivisions;
    const double y = kTop + plot_h * i / kDivisions;
    out << "<line x1=\"" << px(x) << "\" y1=\"" << px(kTop + plot_h) << "\" x2=\"" << px(x)
        << "\" y2=\"" << px(kTop + plot_h + 5) << "\"/>\n"
        << "<line x1=\"" << px(kLeft - 5) << "\" y1=\"" << px(y) << "\" x2=\"" << px(kLeft)
        << "\" y2=\"" << px(y) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#222222\">\n";
  for (int i = 0; i <= kDivisions; ++i) {
    const double x = kLeft + plot_w * i / kDivisions;
    const double xv = xr.lo + (xr.hi - xr.lo) * i / kDivisions;
    out << "<text x=\"" << px(x) << "\" y=\"" << px(kTop + plot_h + 20)
        << "\" text-anchor=\"middle\">" << tick_label(xv, xr.hi - xr.lo) << "</text>\n";
    const double y = kTop + plot_h * i / kDivisions;
    const double yv = yr.hi - (yr.hi - yr.lo) * i / kDivisions;
    out << "<text x=\"" << px(kLeft - 8) << "\" y=\"" << px(y + 4) << "\" text-anchor=\"end\">"
        << tick_label(yv, yr.hi - yr.lo) << "</text>\n";
  }
  out << "<text x=\"" << px(kLeft + plot_w / 2) << "\" y=\"" << px(kHeight - 20)
      << "\" text-anchor=\"middle\">t (periods)</text>\n"
      << "<text x=\"20\" y=\"" << px(kTop + plot_h / 2) << "\" text-anchor=\"middle\" "
      << "transform=\"rotate(-90 20 " << px(kTop + plot_h / 2)
      << ")\">profit per period (currency)</text>\n"
      << "</g>\n";

  out << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(sy(0.0)) << "\" x2=\""
      << px(kLeft + plot_w) << "\" y2=\"" << px(sy(0.0))
      << "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"2,3\"/>\n";

  auto polyline = [&](auto value, const char* color, const char* dash) {
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"";
    if (dash) out << " stroke-dasharray=\"" << dash << "\"";
    out << " points=\"";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) out << ' ';
      out << px(sx(static_cast<double>(rows[i].t))) << ',' << px(sy(value(rows[i])));
    }
    out << "\"/>\n";
  };
  polyline([](const PeriodRecord& r) { return r.industry_profit; }, kIndustryColor, nullptr);
  polyline([](const PeriodRecord& r) { return r.pirate_profit; }, kPirateColor, "8,5");

  const double lx = kLeft + plot_w - 170;
  const double ly = kTop + 12;
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect x=\"" << px(lx) << "\" y=\"" << px(ly) << "\" width=\"160\" height=\"48\" "
      << "fill=\"#ffffff\" stroke=\"#444444\" stroke-width=\"1\"/>\n"
      << "<line x1=\"" << px(lx + 10) << "\" y1=\"" << px(ly + 16) << "\" x2=\"" << px(lx + 40)
      << "\" y2=\"" << px(ly + 16) << "\" stroke=\"" << kIndustryColor
      << "\" stroke-width=\"2\"/>\n"
      << "<text x=\"" << px(lx + 48) << "\" y=\"" << px(ly + 20) << "\">industry</text>\n"
      << "<line x1=\"" << px(lx + 10) << "\" y1=\"" << px(ly + 34) << "\" x2=\"" << px(lx + 40)
      << "\" y2=\"" << px(ly + 34) << "\" stroke=\"" << kPirateColor
      << "\" stroke-width=\"2\" stroke-dasharray=\"8,5\"/>\n"
      << "<text x=\"" << px(lx + 48) << "\" y=\"" << px(ly + 38) << "\">pirates</text>\n"
      << "</g>\n"
      << "</svg>\n";
  return out.str();
}

}  // namespace attrition::cli
