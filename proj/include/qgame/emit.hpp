// Serialization of scan results: deterministic CSV rows and an SVG picture of
// the phase plane.

#pragma once

#include <string>
#include <vector>

#include "qgame/phase_atlas.hpp"

namespace qgame {

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Shortest representation with 12 significant digits ("%.12g"); -0 collapses
// to 0 so equal values always render identically.
std::string format_sig(double v);

inline constexpr const char* kGridCsvHeader =
    "gamma1,gamma2,gp_plus,gp_minus,h_plus,h_minus,domain,edge_mask,nonedge,nonedge_payoff";

// One line per row, '\n' separated, header first. nonedge_payoff is empty
// when the branch is absent. Byte-deterministic for equal input.
std::string grid_csv(const std::vector<ScanRow>& rows);

// Fixed 800x800 viewport: domain-colored sampling of the reachable rectangle,
// the h = 0 lines, the delta^2 = 0 hyperbolae and a legend.
std::string grid_svg(const ClassicalGame& g, int resolution);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace qgame
