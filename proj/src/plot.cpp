#include "hausdyn/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "hausdyn/csv.hpp"

namespace hausdyn {

namespace {

constexpr int kWidth = 760;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 76;
constexpr int kMarginRight = 170;
constexpr int kMarginTop = 46;
constexpr int kMarginBottom = 58;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Series {
  std::string label;
  const std::vector<double>* values;
};

std::string render(const std::string& title, const std::vector<Series>& series) {
  const int plot_w = kWidth - kMarginLeft - kMarginRight;
  const int plot_h = kHeight - kMarginTop - kMarginBottom;

  int horizon = 0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const Series& s : series) {
    horizon = std::max(horizon, static_cast<int>(s.values->size()));
    for (double v : *s.values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  lo = std::min(lo, 0.0);  // keep the zero line in view
  hi = std::max(hi, 0.0);
  if (!(hi > lo)) {
    lo -= 1e-9;
    hi += 1e-9;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;

  const double x_max = std::max(horizon - 1, 1);
  const auto x_of = [&](double t) { return kMarginLeft + plot_w * t / x_max; };
  const auto y_of = [&](double v) {
    return kMarginTop + plot_h * (hi - v) / (hi - lo);
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
         "\" height=\"" + std::to_string(kHeight) + "\" viewBox=\"0 0 " +
         std::to_string(kWidth) + " " + std::to_string(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + px(kMarginLeft) + "\" y=\"26\" font-family=\"sans-serif\" "
         "font-size=\"15\" fill=\"#222\">" + title + "</text>\n";

  // frame
  svg += "<rect x=\"" + px(kMarginLeft) + "\" y=\"" + px(kMarginTop) + "\" width=\"" +
         px(plot_w) + "\" height=\"" + px(plot_h) +
         "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";

  // zero line
  if (lo < 0.0 && hi > 0.0) {
    const double y0 = y_of(0.0);
    svg += "<line x1=\"" + px(kMarginLeft) + "\" y1=\"" + px(y0) + "\" x2=\"" +
           px(kMarginLeft + plot_w) + "\" y2=\"" + px(y0) +
           "\" stroke=\"#bbb\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
  }

  // ticks
  const int n_ticks = 5;
  for (int i = 0; i < n_ticks; ++i) {
    const double t = x_max * i / (n_ticks - 1);
    const double x = x_of(t);
    svg += "<line x1=\"" + px(x) + "\" y1=\"" + px(kMarginTop + plot_h) + "\" x2=\"" + px(x) +
           "\" y2=\"" + px(kMarginTop + plot_h + 5) + "\" stroke=\"#444\"/>\n";
    svg += "<text x=\"" + px(x) + "\" y=\"" + px(kMarginTop + plot_h + 20) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222\" "
           "text-anchor=\"middle\">" + tick_label(std::round(t)) + "</text>\n";

    const double v = lo + (hi - lo) * i / (n_ticks - 1);
    const double y = y_of(v);
    svg += "<line x1=\"" + px(kMarginLeft - 5) + "\" y1=\"" + px(y) + "\" x2=\"" +
           px(kMarginLeft) + "\" y2=\"" + px(y) + "\" stroke=\"#444\"/>\n";
    svg += "<text x=\"" + px(kMarginLeft - 9) + "\" y=\"" + px(y + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222\" "
           "text-anchor=\"end\">" + tick_label(v) + "</text>\n";
  }

  // axis labels
  svg += "<text x=\"" + px(kMarginLeft + plot_w / 2.0) + "\" y=\"" +
         px(kHeight - 14) + "\" font-family=\"sans-serif\" font-size=\"13\" "
         "fill=\"#222\" text-anchor=\"middle\">periods</text>\n";
  svg += "<text x=\"20\" y=\"" + px(kMarginTop + plot_h / 2.0) +
         "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#222\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 20 " + px(kMarginTop + plot_h / 2.0) +
         ")\">log deviation of q</text>\n";

  // series
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof kPalette / sizeof kPalette[0])];
    std::string points;
    const std::vector<double>& values = *series[s].values;
    for (std::size_t t = 0; t < values.size(); ++t) {
      if (t > 0) points += ' ';
      points += px(x_of(static_cast<double>(t))) + "," + px(y_of(values[t]));
    }
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.8\" points=\"" + points + "\"/>\n";
  }

  // legend
  const double legend_x = kMarginLeft + plot_w + 14;
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof kPalette / sizeof kPalette[0])];
    const double y = kMarginTop + 12 + 20.0 * static_cast<double>(s);
    svg += "<line x1=\"" + px(legend_x) + "\" y1=\"" + px(y) + "\" x2=\"" +
           px(legend_x + 22) + "\" y2=\"" + px(y) + "\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"2.5\"/>\n";
    svg += "<text x=\"" + px(legend_x + 28) + "\" y=\"" + px(y + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222\">" +
           series[s].label + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

std::string tax_label(Experiment e, const TaxPolicy& tax) {
  switch (e) {
    case Experiment::fig1:
    case Experiment::fig4:
      return "τ_s=" + format_number(tax.tau_s);
    case Experiment::fig2:
    case Experiment::fig5:
      return "τ_f=" + format_number(tax.tau_f);
    case Experiment::fig3:
    case Experiment::fig6:
      return "τ_s=τ_f=" + format_number(tax.tau_s);
  }
  return "";
}

std::string shock_title(ShockKind kind) {
  return kind == ShockKind::interest_rate ? "interest-rate shock" : "population-growth shock";
}

}  // namespace

std::string sweep_svg(const SweepResult& sweep) {
  const char* varied = "";
  switch (sweep.experiment) {
    case Experiment::fig1:
    case Experiment::fig4: varied = "τ_s grid"; break;
    case Experiment::fig2:
    case Experiment::fig5: varied = "τ_f grid"; break;
    case Experiment::fig3:
    case Experiment::fig6: varied = "joint τ_s=τ_f grid"; break;
  }
  const std::string title = std::string(experiment_name(sweep.experiment)) +
                            ": housing price response, " +
                            shock_title(experiment_shock(sweep.experiment)) + ", " + varied;
  std::vector<Series> series;
  series.reserve(sweep.entries.size());
  for (const SweepEntry& entry : sweep.entries) {
    series.push_back({tax_label(sweep.experiment, entry.tax), &entry.irf.q_hat});
  }
  return render(title, series);
}

std::string irf_svg(const ImpulseResponse& irf, const TaxPolicy& tax, ShockKind shock) {
  const std::string title = "housing price response, " + shock_title(shock);
  const std::string label =
      "τ_s=" + format_number(tax.tau_s) + ", τ_f=" + format_number(tax.tau_f);
  return render(title, {{label, &irf.q_hat}});
}

void render_plot(const SweepResult& sweep, const std::filesystem::path& path) {
  write_file(path, sweep_svg(sweep));
}

void render_plot(const ImpulseResponse& irf, const TaxPolicy& tax, ShockKind shock,
                 const std::filesystem::path& path) {
  write_file(path, irf_svg(irf, tax, shock));
}

}  // namespace hausdyn
