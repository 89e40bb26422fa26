#include "econthermo/export.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "econthermo/format.hpp"

namespace econthermo {

namespace {

void row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ',';
    out << format_double(v);
    first = false;
  }
  out << '\n';
}

}  // namespace

void write_path_csv(std::ostream& out, const ProcessPath& path) {
  out << "Q,P,I,E,G\n";
  for (const auto& s : path.samples()) {
    row(out, {s.point.volume(), s.point.price(), s.point.stability(), s.entropy, s.growth});
  }
}

void write_isotherm_csv(std::ostream& out, const ProcessPath& path) {
  out << "Q,P,I\n";
  for (const auto& s : path.samples()) {
    row(out, {s.point.volume(), s.point.price(), s.point.stability()});
  }
}

std::vector<std::string> leg_labels(const CycleReport& report) {
  static const std::array<const char*, 4> forward = {"1-2", "2-3", "3-4", "4-1"};
  static const std::array<const char*, 4> backward = {"1-4", "4-3", "3-2", "2-1"};
  const auto& names = report.orientation == Orientation::Clockwise ? forward : backward;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < report.legs.size(); ++i) {
    labels.emplace_back(i < names.size() ? names[i] : "leg" + std::to_string(i + 1));
  }
  return labels;
}

void write_cycle_trace_csv(std::ostream& out, const CycleReport& report) {
  const auto labels = leg_labels(report);
  out << "leg,Q,P,I,E,G\n";
  for (std::size_t i = 0; i < report.legs.size(); ++i) {
    for (const auto& s : report.legs[i].samples()) {
      out << labels[i] << ',';
      row(out, {s.point.volume(), s.point.price(), s.point.stability(), s.entropy, s.growth});
    }
  }
}

void write_cycle_ei_csv(std::ostream& out, const CycleReport& report) {
  const auto labels = leg_labels(report);
  out << "leg,E,I\n";
  for (std::size_t i = 0; i < report.legs.size(); ++i) {
    for (const auto& s : report.legs[i].samples()) {
      out << labels[i] << ',';
      row(out, {s.entropy, s.point.stability()});
    }
  }
}

void write_surface_csv(std::ostream& out, const std::vector<SurfaceSample>& grid) {
  out << "Q,P,I\n";
  for (const auto& s : grid) row(out, {s.Q, s.P, s.I});
}

void write_bifurcation_csv(std::ostream& out, const std::vector<BifurcationSample>& grid) {
  out << "alpha,beta,root_count\n";
  for (const auto& s : grid) {
    out << format_double(s.alpha) << ',' << format_double(s.beta) << ',' << s.root_count << '\n';
  }
}

namespace {

struct Frame {
  double x_min, x_max, y_min, y_max;
  static constexpr double kWidth = 640.0;
  static constexpr double kHeight = 480.0;
  static constexpr double kMargin = 60.0;

  double sx(double x) const {
    return kMargin + (x - x_min) / (x_max - x_min) * (kWidth - 2.0 * kMargin);
  }
  double sy(double y) const {
    return kHeight - kMargin - (y - y_min) / (y_max - y_min) * (kHeight - 2.0 * kMargin);
  }
};

std::string fx(double v) { return format_fixed(v, 2); }

}  // namespace

void write_cycle_svg(std::ostream& out, const CycleReport& report, Diagram diagram) {
  const auto coords = [diagram](const ExtendedState& s) -> std::array<double, 2> {
    if (diagram == Diagram::QP) return {s.point.volume(), s.point.price()};
    return {s.entropy, s.point.stability()};
  };

  Frame f{INFINITY, -INFINITY, INFINITY, -INFINITY};
  for (const auto& leg : report.legs) {
    for (const auto& s : leg.samples()) {
      const auto [x, y] = coords(s);
      f.x_min = std::min(f.x_min, x);
      f.x_max = std::max(f.x_max, x);
      f.y_min = std::min(f.y_min, y);
      f.y_max = std::max(f.y_max, y);
    }
  }
  const auto pad = [](double& lo, double& hi) {
    const double margin = hi > lo ? 0.05 * (hi - lo) : 0.5 + 0.05 * std::abs(lo);
    lo -= margin;
    hi += margin;
  };
  pad(f.x_min, f.x_max);
  pad(f.y_min, f.y_max);

  const char* x_label = diagram == Diagram::QP ? "Q" : "E";
  const char* y_label = diagram == Diagram::QP ? "P" : "I";
  const double W = Frame::kWidth, H = Frame::kHeight, M = Frame::kMargin;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fx(W) << "\" height=\"" << fx(H)
      << "\" viewBox=\"0 0 " << fx(W) << ' ' << fx(H) << "\">\n";
  out << "<defs><marker id=\"arrow\" markerWidth=\"10\" markerHeight=\"10\" refX=\"8\" refY=\"5\" "
         "orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"black\"/></marker></defs>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << fx(M) << "\" y1=\"" << fx(H - M) << "\" x2=\"" << fx(W - M)
      << "\" y2=\"" << fx(H - M) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << fx(M) << "\" y1=\"" << fx(H - M) << "\" x2=\"" << fx(M) << "\" y2=\""
      << fx(M) << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << fx(W - M) << "\" y=\"" << fx(H - M + 30) << "\">" << x_label
      << "</text>\n";
  out << "<text x=\"" << fx(M - 30) << "\" y=\"" << fx(M) << "\">" << y_label << "</text>\n";

  const auto labels = leg_labels(report);
  for (std::size_t i = 0; i < report.legs.size(); ++i) {
    const auto& samples = report.legs[i].samples();
    out << "<polyline fill=\"none\" stroke=\"" << (i % 2 == 0 ? "firebrick" : "steelblue")
        << "\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const auto [x, y] = coords(samples[k]);
      out << (k ? " " : "") << fx(f.sx(x)) << ',' << fx(f.sy(y));
    }
    out << "\"><title>" << labels[i] << "</title></polyline>\n";

    const std::size_t mid = samples.size() / 2;
    const std::size_t prev = mid > 0 ? mid - 1 : 0;
    const auto [x0, y0] = coords(samples[prev]);
    const auto [x1, y1] = coords(samples[mid]);
    out << "<line x1=\"" << fx(f.sx(x0)) << "\" y1=\"" << fx(f.sy(y0)) << "\" x2=\""
        << fx(f.sx(x1)) << "\" y2=\"" << fx(f.sy(y1))
        << "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
  }

  for (std::size_t v = 0; v < report.vertices.size(); ++v) {
    const auto [x, y] = coords(report.vertices[v]);
    out << "<circle cx=\"" << fx(f.sx(x)) << "\" cy=\"" << fx(f.sy(y)) << "\" r=\"4\"/>\n";
    out << "<text x=\"" << fx(f.sx(x) + 6) << "\" y=\"" << fx(f.sy(y) - 6) << "\">" << v + 1
        << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace econthermo
