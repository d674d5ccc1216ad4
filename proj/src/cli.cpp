#include "tsc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "tsc/calculus.hpp"
#include "tsc/oracle.hpp"

namespace tsc::cli {

namespace {

const char* edge_style(std::size_t base) {
  switch (base) {
    case 0: return "dashed";
    case 1: return "solid";
    case 2: return "dotted";
    default: return "bold";
  }
}

void emit_dot(const std::vector<Point>& points, const std::vector<std::size_t>& bases, bool full,
              std::ostream& out) {
  out << "digraph fragment {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < points.size(); ++i) out << "  p" << i << " [label=\"" << to_string(points[i]) << "\"];\n";
  for (std::size_t n : bases) {
    std::vector<std::vector<char>> rel(points.size(), std::vector<char>(points.size(), 0));
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = 0; j < points.size(); ++j) rel[i][j] = r_n(points[i], points[j], n) ? 1 : 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (!rel[i][j]) continue;
        if (!full) {
          bool covered = false;
          for (std::size_t k = 0; k < points.size() && !covered; ++k) covered = rel[i][k] && rel[k][j];
          if (covered) continue;
        }
        out << "  p" << i << " -> p" << j << " [style=" << edge_style(n) << ", comment=\"R" << n << "\"];\n";
      }
    }
  }
  out << "}\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordinal modal calculus: normal forms, sequents and frame fragments", "tsc"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "stable line-oriented output")->configurable(false);
  app.fallthrough();

  std::string formula_text, sequent_text, point_text;
  auto* normalize_cmd = app.add_subcommand("normalize", "print the normal form and minimal point");
  normalize_cmd->add_option("formula", formula_text)->required();

  auto* decide_cmd = app.add_subcommand("decide", "decide a sequent \"phi |- psi\"");
  decide_cmd->add_option("sequent", sequent_text)->required();

  auto* check_cmd = app.add_subcommand("check", "does the point force the formula");
  check_cmd->add_option("point", point_text)->required();
  check_cmd->add_option("formula", formula_text)->required();

  std::string max_text = "w*2";
  unsigned coeff = 2;
  std::size_t support = 2;
  std::vector<std::size_t> bases{0, 1};
  bool full = false;
  auto* dot_cmd = app.add_subcommand("frame-dot", "DOT graph of an enumerated frame fragment");
  dot_cmd->add_option("--max", max_text, "largest coordinate")->capture_default_str();
  dot_cmd->add_option("--coeff", coeff, "coefficient bound")->capture_default_str();
  dot_cmd->add_option("--support", support, "maximal number of non-zero coordinates")->capture_default_str();
  dot_cmd->add_option("--bases", bases, "relation bases")->delimiter(',')->capture_default_str();
  dot_cmd->add_flag("--full", full, "draw every related pair instead of covering edges");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*normalize_cmd) {
      Formula f = parse_formula(formula_text);
      MonomialNormalForm psi = normalize(f);
      Point x = point_of_mnf(psi);
      if (machine)
        out << "mnf=" << psi << "; point=" << x << '\n';
      else
        out << psi << " ; point=" << x << '\n';
      return kExitYes;
    }
    if (*decide_cmd) {
      Verdict v = derives(parse_sequent(sequent_text));
      if (machine)
        out << to_machine_string(v) << '\n';
      else if (v.derivable)
        out << "derivable\n";
      else
        out << "not derivable; countermodel=" << *v.countermodel << '\n';
      return v.derivable ? kExitYes : kExitNo;
    }
    if (*check_cmd) {
      Point x = parse_point(point_text);
      bool holds = forces(x, parse_formula(formula_text));
      out << (machine ? "forces=" : "") << (holds ? "true" : "false") << '\n';
      return holds ? kExitYes : kExitNo;
    }
    Ordinal max = parse_ordinal(max_text);
    std::vector<Ordinal> universe = enumerate_ordinals(max, coeff);
    emit_dot(enumerate_points({universe, support, {}}), bases, full, out);
    return kExitYes;
  } catch (const ParseError& e) {
    err << "parse error at position " << e.position() << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace tsc::cli
