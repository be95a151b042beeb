// Command-line front end: load a 2x2 game file, then classify it, list its
// quantum Nash equilibria at one correlation, scan the correlation grid to
// CSV/SVG, or run one of the canned dilemma reports.
//
// Exit codes: 0 success, 2 parse or constraint error, 3 I/O error.

#include <algorithm>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgame/emit.hpp"
#include "qgame/report.hpp"

using namespace qgame;

namespace {

std::string pair_str(const std::pair<double, double>& p) {
  return "(" + format_sig(p.first) + ", " + format_sig(p.second) + ")";
}

std::string matrix_str(const std::array<double, 4>& m) {
  return format_sig(m[0]) + " " + format_sig(m[1]) + " " + format_sig(m[2]) + " " +
         format_sig(m[3]);
}

std::array<double, 4> a_entries(const ClassicalGame& g) {
  return {g.a(0, 0), g.a(0, 1), g.a(1, 0), g.a(1, 1)};
}

// The T-symmetric frame the analysis commands run in.
struct Frame {
  ClassicalGame game;
  bool dualized;  // input was S-symmetric, gamma axes swap
};

Frame t_frame(const ClassicalGame& in, const char* cmd) {
  if (in.symmetry() == Symmetry::T) return {in, false};
  if (in.symmetry() == Symmetry::S) return {dualize(in, DualityMap::Alice), true};
  throw ParseError(std::string(cmd) +
                   ": explicit payoff pairs are outside the S/T analysis family; declare "
                   "symmetry = S or T");
}

void print_invariant_block(const ClassicalGame& g) {
  const GameInvariants inv = invariants(g);
  std::cout << "invariants: trace=" << format_sig(inv.trace) << " tau=" << format_sig(inv.tau)
            << " sigma+=" << format_sig(inv.sigma_plus)
            << " sigma-=" << format_sig(inv.sigma_minus) << "\n";
  const Rectangle rect = rectangle(g);
  std::cout << "rectangle: " << format_sig(rect.l_h) << " x " << format_sig(rect.l_v);
  if (rect.l_h == 0.0 && rect.l_v == 0.0)
    std::cout << " (point)";
  else if (rect.l_v == 0.0)
    std::cout << " (segment on the gp_plus axis)";
  else if (rect.l_h == 0.0)
    std::cout << " (segment on the gp_minus axis)";
  std::cout << "\n";
  try {
    const PhaseClass cls = phase_class(g);
    std::cout << "phase class: " << (cls.tau_sign > 0 ? "tau>0, " : "tau<0, ");
    switch (cls.crossing) {
      case Crossing::Inside:
        std::cout << "Inside";
        break;
      case Crossing::CornersCut:
        std::cout << "CornersCut";
        break;
      case Crossing::EdgesCut:
        std::cout << (cls.orientation > 0 ? "EdgesCut (l_h > l_v)" : "EdgesCut (l_h < l_v)");
        break;
    }
    std::cout << "\n";
  } catch (const TauZero&) {
    std::cout << "phase class: undefined (tau = 0, degenerate)\n";
  }
  std::set<std::string> domains;
  for (const ScanRow& row : grid_scan(g, 64)) domains.insert(to_string(row.domain));
  std::cout << "domains over a 64x64 gamma scan:";
  for (const std::string& d : domains) std::cout << " " << d;
  std::cout << "\n";
}

int cmd_classify(const std::string& path) {
  const ClassicalGame in = load_game_file(path);
  if (in.symmetry() == Symmetry::Explicit) {
    std::cout << "symmetry: explicit";
    const SymmetryCheck chk = check_symmetry(quantize(in));
    switch (chk) {
      case SymmetryCheck::S:
        std::cout << " (satisfies B = S A S)\n";
        break;
      case SymmetryCheck::T:
        std::cout << " (satisfies B = T A T)\n";
        break;
      case SymmetryCheck::Both:
        std::cout << " (satisfies both B = S A S and B = T A T)\n";
        break;
      case SymmetryCheck::Neither:
        std::cout << " (neither B = S A S nor B = T A T)\n";
        break;
    }
    std::cout << "A: " << matrix_str(a_entries(in)) << "\n";
    if (chk == SymmetryCheck::Neither) {
      const GameInvariants inv = invariants(in);
      std::cout << "invariants of A: trace=" << format_sig(inv.trace)
                << " tau=" << format_sig(inv.tau) << " sigma+=" << format_sig(inv.sigma_plus)
                << " sigma-=" << format_sig(inv.sigma_minus) << "\n";
      std::cout << "note: phase analysis needs an S- or T-symmetric pair\n";
      return 0;
    }
    const ClassicalGame typed = chk == SymmetryCheck::S
                                    ? ClassicalGame::s_symmetric(a_entries(in))
                                    : ClassicalGame::t_symmetric(a_entries(in));
    const Frame f = t_frame(typed, "classify");
    if (f.dualized)
      std::cout << "dual (T frame): " << matrix_str(a_entries(f.game)) << "\n";
    print_invariant_block(f.game);
    return 0;
  }

  std::cout << "symmetry: " << (in.symmetry() == Symmetry::S ? "S" : "T") << "\n";
  std::cout << "A: " << matrix_str(a_entries(in)) << "\n";
  const Frame f = t_frame(in, "classify");
  if (f.dualized) {
    std::cout << "note: S-symmetric input analyzed via its T-symmetric dual\n";
    std::cout << "dual (T frame): " << matrix_str(a_entries(f.game)) << "\n";
  }
  print_invariant_block(f.game);
  return 0;
}

int cmd_qne(const std::string& path, double g1, double g2) {
  const ClassicalGame in = load_game_file(path);
  const Frame f = t_frame(in, "qne");
  Correlation c(g1, g2);
  if (f.dualized) {
    c = Correlation(g2, g1);
    std::cout << "note: S-symmetric input; analyzing the T-symmetric dual "
              << matrix_str(a_entries(f.game)) << " at swapped gamma\n";
  }
  std::cout << "gamma: (" << format_sig(c.gamma1) << ", " << format_sig(c.gamma2) << ")\n";
  const PhasePoint p = to_phase_point(f.game, c);
  std::cout << "phase point: (" << format_sig(p.gp_plus) << ", " << format_sig(p.gp_minus)
            << ")\n";

  static const char* const kNames[4] = {"|00>", "|01>", "|10>", "|11>"};
  const EdgeQneReport eq = edge_qne(f.game, c);
  std::cout << "edge QNE:\n";
  bool any = false;
  for (int e = 0; e < 4; ++e) {
    if (!eq.present[e] && !eq.boundary[e]) continue;
    any = true;
    std::cout << "  " << kNames[e] << ": payoffs " << pair_str(*eq.payoffs[e]);
    if (eq.boundary[e]) {
      std::cout << "  [boundary band]";
    } else {
      const VerifyResult v =
          verify_qne_bruteforce(f.game, c, edge_alice(Edge(e)), edge_bob(Edge(e)));
      std::cout << (v.confirmed ? "  [confirmed]" : "  [REFUTED by brute force]");
    }
    std::cout << "\n";
  }
  if (!any) std::cout << "  none\n";

  const NonEdgeSearch ne = nonedge_qne_search(f.game, c);
  if (ne.status == NonEdgeStatus::Found) {
    const NonEdgeQne& q = *ne.qne;
    const VerifyResult v = verify_qne_bruteforce(f.game, c, q.alpha, q.beta);
    std::cout << "non-edge QNE: alpha = (" << format_sig(q.alpha.theta) << ", "
              << format_sig(q.alpha.phi) << "), beta = (" << format_sig(q.beta.theta) << ", "
              << format_sig(q.beta.phi) << "), payoff " << format_sig(q.payoff)
              << (v.confirmed ? "  [confirmed]" : "  [REFUTED by brute force]") << "\n";
  } else if (ne.status == NonEdgeStatus::DegenerateBranch) {
    std::cout << "non-edge QNE: none (phase equation has no root)\n";
  } else {
    std::cout << "non-edge QNE: none\n";
  }
  return 0;
}

int cmd_grid(const std::string& path, int resolution, const std::string& format,
             const std::string& out) {
  const ClassicalGame in = load_game_file(path);
  const Frame f = t_frame(in, "grid");
  if (f.dualized)
    std::cerr << "note: S-symmetric input; grid runs over the T-symmetric dual (gamma axes "
                 "swapped relative to the input frame)\n";
  const std::string artifact =
      format == "svg" ? grid_svg(f.game, resolution) : grid_csv(grid_scan(f.game, resolution));
  if (out.empty())
    std::cout << artifact;
  else
    write_text_file(out, artifact);
  return 0;
}

int cmd_report(const std::string& which, const std::vector<double>& values, int resolution,
               const std::string& out) {
  std::array<double, 4> v{};
  if (values.size() == 4) {
    std::copy(values.begin(), values.end(), v.begin());
  } else {
    v = which == "bos" ? kDefaultBosValues : which == "pd" ? kDefaultPdValues : kDefaultShValues;
  }
  std::string text;
  if (which == "bos")
    text = render_report(build_bos_report(v, resolution));
  else if (which == "pd")
    text = render_report(build_pd_report(v, resolution));
  else
    text = render_report(build_sh_report(v, resolution));
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum 2x2 game analyzer"};
  app.require_subcommand(1);

  std::string path, out_path, which;
  std::string format = "csv";
  double g1 = 0.0, g2 = 0.0;
  int resolution = 128;
  std::vector<double> values;

  CLI::App* classify = app.add_subcommand("classify", "symmetry, invariants and phase structure");
  classify->add_option("file", path, "game file")->required();

  CLI::App* qne = app.add_subcommand("qne", "quantum Nash equilibria at one correlation");
  qne->add_option("file", path, "game file")->required();
  qne->add_option("--gamma1", g1, "correlation angle gamma1")->required();
  qne->add_option("--gamma2", g2, "correlation angle gamma2")->required();

  CLI::App* grid = app.add_subcommand("grid", "scan the correlation grid to CSV or SVG");
  grid->add_option("file", path, "game file")->required();
  grid->add_option("--resolution", resolution, "grid points per axis")
      ->check(CLI::Range(2, 4096));
  grid->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
  grid->add_option("--out", out_path, "output path (stdout when omitted)");

  CLI::App* report = app.add_subcommand("report", "canned dilemma analysis (bos, pd, sh)");
  report->add_option("which", which, "bos, pd or sh")
      ->required()
      ->check(CLI::IsMember({"bos", "pd", "sh"}));
  report->add_option("--values", values, "payoff entries a00,a01,a10,a11")
      ->delimiter(',')
      ->expected(4);
  report->add_option("--resolution", resolution, "grid points per axis")
      ->check(CLI::Range(2, 4096));
  report->add_option("--out", out_path, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help and friends exit cleanly
  }

  try {
    if (*classify) return cmd_classify(path);
    if (*qne) return cmd_qne(path, g1, g2);
    if (*grid) return cmd_grid(path, resolution, format, out_path);
    return cmd_report(which, values, resolution, out_path);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
