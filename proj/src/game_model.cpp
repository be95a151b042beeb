#include "qgame/game_model.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace qgame {

namespace {

void require_finite(const std::array<double, 4>& v, const char* which) {
  for (double x : v)
    if (!std::isfinite(x))
      throw std::invalid_argument(std::string("ClassicalGame: non-finite entry in ") + which);
}

std::array<double, 4> exchange_partner(const std::array<double, 4>& a) {
  // b[j][i] = a[i][j]
  return {a[0], a[2], a[1], a[3]};
}

std::array<double, 4> twist_partner_matrix(const std::array<double, 4>& a) {
  // b[1-j][1-i] = a[i][j]  <=>  b[p][q] = a[1-q][1-p]
  return {a[3], a[1], a[2], a[0]};
}

}  // namespace

ClassicalGame::ClassicalGame(const std::array<double, 4>& a, const std::array<double, 4>& b,
                             Symmetry s)
    : a_(a), b_(b), sym_(s) {}

ClassicalGame ClassicalGame::s_symmetric(const std::array<double, 4>& a) {
  require_finite(a, "A");
  return ClassicalGame(a, exchange_partner(a), Symmetry::S);
}

ClassicalGame ClassicalGame::t_symmetric(const std::array<double, 4>& a) {
  require_finite(a, "A");
  return ClassicalGame(a, twist_partner_matrix(a), Symmetry::T);
}

ClassicalGame ClassicalGame::explicit_game(const std::array<double, 4>& a,
                                           const std::array<double, 4>& b) {
  require_finite(a, "A");
  require_finite(b, "B");
  return ClassicalGame(a, b, Symmetry::Explicit);
}

double ClassicalGame::scale() const {
  double m = 1.0;
  for (int k = 0; k < 4; ++k) m = std::max({m, std::abs(a_[k]), std::abs(b_[k])});
  return m;
}

PayoffOperatorPair quantize(const ClassicalGame& g) {
  PayoffOperatorPair p;
  p.op_a = Operator4::diagonal({g.a(0, 0), g.a(0, 1), g.a(1, 0), g.a(1, 1)});
  p.op_b = Operator4::diagonal({g.b(0, 0), g.b(0, 1), g.b(1, 0), g.b(1, 1)});
  return p;
}

SymmetryCheck check_symmetry(const PayoffOperatorPair& p, double tol) {
  const double scaled_tol = tol * std::max(1.0, std::max(p.op_a.max_abs(), p.op_b.max_abs()));
  const Operator4 s = swap_op();
  const Operator4 t = twist_op();
  const bool s_holds = p.op_b.max_abs_diff(s * p.op_a * s) <= scaled_tol;
  const bool t_holds = p.op_b.max_abs_diff(t * p.op_a * t) <= scaled_tol;
  if (s_holds && t_holds) return SymmetryCheck::Both;
  if (s_holds) return SymmetryCheck::S;
  if (t_holds) return SymmetryCheck::T;
  return SymmetryCheck::Neither;
}

PayoffOperatorPair dualize(const PayoffOperatorPair& p, DualityMap which) {
  const ConversionOps ops = conversion_ops();
  const Operator4& c = which == DualityMap::Alice ? ops.alice
                     : which == DualityMap::Bob   ? ops.bob
                                                  : ops.full;
  return {c * p.op_a * c, c * p.op_b * c};
}

ClassicalGame dualize(const ClassicalGame& g, DualityMap which) {
  auto map_matrix = [&](auto entry) -> std::array<double, 4> {
    std::array<double, 4> r{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const int ii = which == DualityMap::Bob ? i : 1 - i;
        const int jj = which == DualityMap::Alice ? j : 1 - j;
        r[2 * i + j] = entry(ii, jj);
      }
    return r;
  };
  const std::array<double, 4> a = map_matrix([&](int i, int j) { return g.a(i, j); });
  const std::array<double, 4> b = map_matrix([&](int i, int j) { return g.b(i, j); });
  switch (g.symmetry()) {
    case Symmetry::Explicit:
      return ClassicalGame::explicit_game(a, b);
    case Symmetry::S:
      return which == DualityMap::Full ? ClassicalGame::s_symmetric(a)
                                       : ClassicalGame::t_symmetric(a);
    case Symmetry::T:
    default:
      return which == DualityMap::Full ? ClassicalGame::t_symmetric(a)
                                       : ClassicalGame::s_symmetric(a);
  }
}

std::pair<LocalStrategy, Correlation> dual_strategy_map(const LocalStrategy& alpha,
                                                        const Correlation& c) {
  return {alpha.basis_flipped(), Correlation(c.gamma2, c.gamma1)};
}

GameInvariants invariants(const ClassicalGame& g) {
  const double a00 = g.a(0, 0), a01 = g.a(0, 1), a10 = g.a(1, 0), a11 = g.a(1, 1);
  GameInvariants inv;
  // Pairwise grouping keeps trace exactly invariant and tau exactly
  // sign-flipped under the one-sided conversions.
  inv.trace = (a00 + a01) + (a10 + a11);
  inv.tau = (a00 - a01) + (a11 - a10);
  inv.sigma_plus = (a00 - a11) + (a01 - a10);
  inv.sigma_minus = (a00 - a11) - (a01 - a10);
  return inv;
}

namespace {

std::array<double, 4> parse_values(const std::string& text, int line_no) {
  std::istringstream in(text);
  std::array<double, 4> v{};
  for (int k = 0; k < 4; ++k) {
    if (!(in >> v[k]))
      throw ParseError("line " + std::to_string(line_no) + ": expected 4 numeric values");
    if (!std::isfinite(v[k]))
      throw ParseError("line " + std::to_string(line_no) + ": value is not finite");
  }
  std::string rest;
  if (in >> rest)
    throw ParseError("line " + std::to_string(line_no) + ": trailing data '" + rest + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ClassicalGame parse_game_text(std::istream& in) {
  std::map<std::string, std::pair<std::string, int>> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key != "A" && key != "B" && key != "symmetry")
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (entries.count(key))
      throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    entries[key] = {value, line_no};
  }

  if (!entries.count("A")) throw ParseError("missing key 'A'");
  if (!entries.count("symmetry")) throw ParseError("missing key 'symmetry'");

  const std::array<double, 4> a = parse_values(entries["A"].first, entries["A"].second);
  const std::string sym = entries["symmetry"].first;

  if (sym == "S" || sym == "T") {
    if (entries.count("B"))
      throw ParseError("line " + std::to_string(entries["B"].second) +
                       ": key 'B' is only allowed with symmetry = explicit");
    return sym == "S" ? ClassicalGame::s_symmetric(a) : ClassicalGame::t_symmetric(a);
  }
  if (sym == "explicit") {
    if (!entries.count("B")) throw ParseError("symmetry = explicit requires key 'B'");
    const std::array<double, 4> b = parse_values(entries["B"].first, entries["B"].second);
    return ClassicalGame::explicit_game(a, b);
  }
  throw ParseError("line " + std::to_string(entries["symmetry"].second) +
                   ": symmetry must be S, T or explicit");
}

ClassicalGame load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open game file '" + path + "'");
  return parse_game_text(in);
}

}  // namespace qgame
