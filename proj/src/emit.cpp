#include "qgame/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qgame {

std::string format_sig(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string grid_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << kGridCsvHeader << "\n";
  for (const ScanRow& r : rows) {
    out << format_sig(r.gamma.gamma1) << ',' << format_sig(r.gamma.gamma2) << ','
        << format_sig(r.point.gp_plus) << ',' << format_sig(r.point.gp_minus) << ','
        << format_sig(r.h_plus) << ',' << format_sig(r.h_minus) << ',' << to_string(r.domain)
        << ',' << r.edge_mask << ',' << (r.nonedge ? '1' : '0') << ',';
    if (r.nonedge_payoff) out << format_sig(*r.nonedge_payoff);
    out << "\n";
  }
  return out.str();
}

namespace {

const char* domain_color(const std::string& name) {
  if (name == "BoS") return "#4c78a8";
  if (name == "PD") return "#e45756";
  if (name == "SH") return "#f58518";
  if (name == "Single01") return "#72b7b2";
  if (name == "Single10") return "#54a24b";
  if (name == "Pair01") return "#b279a2";
  if (name == "Pair10") return "#eeca3b";
  if (name == "Boundary") return "#9d9d9d";
  return "#d3d3d3";  // Degenerate
}

const char* const kLegendNames[] = {"BoS",    "PD",     "SH",       "Single01",  "Single10",
                                    "Pair01", "Pair10", "Boundary", "Degenerate"};

}  // namespace

std::string grid_svg(const ClassicalGame& g, int resolution) {
  if (resolution < 2) throw std::invalid_argument("grid_svg: resolution < 2");
  const GameInvariants inv = invariants(g);
  const Rectangle rect = rectangle(g);

  // View covers the rectangle and both h lines with a margin.
  const double range =
      1.25 * std::max({0.5 * rect.l_h, 0.5 * rect.l_v, std::abs(inv.tau), 1.0});
  const double scale = 360.0 / range;
  auto px = [scale](double x) { return 400.0 + x * scale; };
  auto py = [scale](double y) { return 400.0 - y * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\" font-family=\"monospace\" font-size=\"12\">\n";
  out << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

  // Domain-colored sampling of the reachable rectangle. Collapsed directions
  // keep a visible strip.
  const double x0 = -0.5 * rect.l_h, y0 = -0.5 * rect.l_v;
  const double dx = rect.l_h / resolution, dy = rect.l_v / resolution;
  const double wpx = std::max(dx * scale, 2.0), hpx = std::max(dy * scale, 2.0);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j) {
      const PhasePoint p{x0 + (i + 0.5) * dx, y0 + (j + 0.5) * dy};
      out << "<rect x=\"" << format_sig(px(p.gp_plus) - 0.5 * wpx) << "\" y=\""
          << format_sig(py(p.gp_minus) - 0.5 * hpx) << "\" width=\"" << format_sig(wpx)
          << "\" height=\"" << format_sig(hpx) << "\" fill=\""
          << domain_color(to_string(classify_point(inv, p))) << "\"/>\n";
    }

  // Axes.
  out << "<line x1=\"20\" y1=\"400\" x2=\"780\" y2=\"400\" stroke=\"black\"/>\n";
  out << "<line x1=\"400\" y1=\"20\" x2=\"400\" y2=\"780\" stroke=\"black\"/>\n";
  out << "<text x=\"742\" y=\"392\">gp_plus</text>\n";
  out << "<text x=\"408\" y=\"32\">gp_minus</text>\n";

  // Rectangle outline.
  out << "<rect x=\"" << format_sig(px(x0)) << "\" y=\"" << format_sig(py(-y0)) << "\" width=\""
      << format_sig(std::max(rect.l_h * scale, 1.0)) << "\" height=\""
      << format_sig(std::max(rect.l_v * scale, 1.0))
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  // h_plus = 0 and h_minus = 0: lines of slope -1 at gp_plus + gp_minus = -+ tau.
  for (int sgn : {-1, 1}) {
    const double c = sgn * inv.tau;
    out << "<line x1=\"" << format_sig(px(-range)) << "\" y1=\"" << format_sig(py(c + range))
        << "\" x2=\"" << format_sig(px(range)) << "\" y2=\"" << format_sig(py(c - range))
        << "\" stroke=\"black\" stroke-dasharray=\"6 3\"/>\n";
  }

  // delta^2 = 0: gp_plus^2 - gp_minus^2 = sigma_plus * sigma_minus.
  const double k = inv.sigma_plus * inv.sigma_minus;
  const int samples = 100;
  auto polyline = [&out](const std::vector<std::pair<double, double>>& pts) {
    out << "<polyline fill=\"none\" stroke=\"#333333\" points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) out << ' ';
      out << format_sig(pts[i].first) << ',' << format_sig(pts[i].second);
    }
    out << "\"/>\n";
  };
  for (int sgn : {-1, 1}) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(samples + 1);
    for (int i = 0; i <= samples; ++i) {
      const double t = -range + 2.0 * range * i / samples;
      if (k > 0.0)  // opens left-right: gp_plus = +-sqrt(k + gp_minus^2)
        pts.emplace_back(px(sgn * std::sqrt(k + t * t)), py(t));
      else if (k < 0.0)  // opens up-down: gp_minus = +-sqrt(-k + gp_plus^2)
        pts.emplace_back(px(t), py(sgn * std::sqrt(-k + t * t)));
      else  // degenerate: the diagonals
        pts.emplace_back(px(t), py(sgn * t));
    }
    polyline(pts);
  }

  // Legend.
  out << "<g id=\"legend\">\n";
  int y = 24;
  for (const char* name : kLegendNames) {
    out << "<rect x=\"24\" y=\"" << y - 11 << "\" width=\"12\" height=\"12\" fill=\""
        << domain_color(name) << "\"/>\n";
    out << "<text x=\"42\" y=\"" << y << "\">" << name << "</text>\n";
    y += 18;
  }
  out << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  f.flush();
  if (!f) throw IoError("write failed: " + path);
}

}  // namespace qgame
