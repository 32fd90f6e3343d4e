// Command-line front end: parameter scans for the four figures plus custom
// scans, with CSV and SVG output.

#include <omp.h>

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "magqsl/scanner.hpp"

namespace {

using namespace magqsl;

struct CommonOptions {
  std::string csv_path;
  std::string svg_path;
  std::string grid_spec;
  std::vector<double> field_values;
  double tolerance = 1e-10;
  int momentum_nodes = 64;
  int max_subdivisions = 4000;
  std::string units = "si";
  int threads = 0;  // 0 = library default
  bool serial = false;
  double p0_over_beta_hbar = -1.0;  // <0 = keep preset value
  double d_over_inv_beta = 50.0;
  int n = -1;  // <0 = keep preset value
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--csv", opt.csv_path, "write the scan table to this CSV file");
  cmd->add_option("--svg", opt.svg_path, "write a plot of v/c to this SVG file");
  cmd->add_option("--grid", opt.grid_spec, "axis grid as min:max:count:lin|log");
  cmd->add_option("--B", opt.field_values, "fixed magnetic field value(s) in tesla");
  cmd->add_option("--n", opt.n, "fixed lower radial quantum number (even)");
  cmd->add_option("--p0-over-beta-hbar", opt.p0_over_beta_hbar,
                  "fixed axial momentum in units of beta*hbar");
  cmd->add_option("--d-over-inv-beta", opt.d_over_inv_beta,
                  "packet width d in units of 1/beta (default 50)");
  cmd->add_option("--tol", opt.tolerance, "quadrature relative tolerance");
  cmd->add_option("--momentum-nodes", opt.momentum_nodes, "Gauss-Hermite node count");
  cmd->add_option("--max-subdivisions", opt.max_subdivisions,
                  "adaptive quadrature subdivision budget");
  cmd->add_option("--units", opt.units, "si or natural")
      ->check(CLI::IsMember({"si", "natural"}));
  cmd->add_option("--threads", opt.threads, "OpenMP thread count (0 = default)");
  cmd->add_flag("--serial", opt.serial, "run the serial reference path");
}

scanner::GridSpec parse_grid(const std::string& text) {
  scanner::GridSpec g;
  char kind[8] = {0};
  if (std::sscanf(text.c_str(), "%lf:%lf:%d:%3s", &g.min, &g.max, &g.count, kind) != 4)
    throw scanner::UsageError("grid must be min:max:count:lin|log, got '" + text + "'");
  std::string k = kind;
  if (k == "lin") g.spacing = scanner::Spacing::linear;
  else if (k == "log") g.spacing = scanner::Spacing::log;
  else throw scanner::UsageError("grid spacing must be lin or log, got '" + k + "'");
  return g;
}

void apply_common(scanner::ScanRequest& req, const CommonOptions& opt) {
  if (!opt.grid_spec.empty()) req.grid = parse_grid(opt.grid_spec).values();
  if (!opt.field_values.empty() && req.axis != scanner::Axis::B)
    req.field_values = opt.field_values;
  if (opt.n >= 0) req.n = opt.n;
  if (opt.p0_over_beta_hbar >= 0.0) {
    req.p0_over_beta_hbar = opt.p0_over_beta_hbar;
    req.p0_maximizing = false;
  }
  req.d_over_inv_beta = opt.d_over_inv_beta;
  req.quadrature.relative_tolerance = opt.tolerance;
  req.quadrature.momentum_node_count = opt.momentum_nodes;
  req.quadrature.max_subdivisions = opt.max_subdivisions;
  if (opt.units == "natural") req.constants = landau::PhysicalConstants::natural();
  if (opt.threads > 0) omp_set_num_threads(opt.threads);
}

int run(const scanner::ScanRequest& req, const CommonOptions& opt) {
  const auto table = scanner::run_scan(
      req, opt.serial ? scanner::Execution::serial : scanner::Execution::parallel);

  std::size_t failed = 0;
  for (const auto& row : table.rows) {
    if (!row.ok) {
      ++failed;
      std::cerr << "row axis=" << row.axis_value << " kind=" << row.kind
                << " failed: " << row.error << "\n";
    }
  }
  if (!opt.csv_path.empty()) scanner::emit_csv(table, opt.csv_path);
  else std::cout << scanner::render_csv(table);
  if (!opt.svg_path.empty()) scanner::emit_svg(table, opt.svg_path);

  if (failed == table.rows.size()) {
    std::cerr << "error: every row failed\n";
    return 2;
  }
  if (failed > 0)
    std::cerr << failed << " of " << table.rows.size() << " rows failed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum-speed-limit scans for an electron in a uniform magnetic field"};
  app.require_subcommand(1);

  CommonOptions opt;
  auto* fig1 = app.add_subcommand("fig1", "v/c vs B, both dynamics, n=0, p0=0");
  auto* fig2 = app.add_subcommand("fig2", "strong-field particle-particle v/c vs n");
  auto* fig3 = app.add_subcommand("fig3", "strong-field antiparticle-particle v/c vs n");
  auto* fig4 = app.add_subcommand("fig4", "v/c vs p0 at three field strengths, both kinds");
  auto* custom = app.add_subcommand("custom", "custom scan");
  for (auto* cmd : {fig1, fig2, fig3, fig4, custom}) add_common(cmd, opt);

  std::string axis = "B";
  std::vector<std::string> kinds;
  bool strong = false;
  custom->add_option("--axis", axis, "scan axis: B, n or p0")
      ->check(CLI::IsMember({"B", "n", "p0"}));
  custom->add_option("--kind", kinds,
                     "superposition kind(s): nonrel, pp, ap (repeatable)")
      ->check(CLI::IsMember({"nonrel", "pp", "ap"}));
  custom->add_flag("--strong-field", strong, "use the strong-field closed forms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    scanner::ScanRequest req;
    if (fig1->parsed()) req = scanner::make_preset(scanner::Figure::fig1);
    else if (fig2->parsed()) req = scanner::make_preset(scanner::Figure::fig2);
    else if (fig3->parsed()) req = scanner::make_preset(scanner::Figure::fig3);
    else if (fig4->parsed()) req = scanner::make_preset(scanner::Figure::fig4);
    else {
      req = scanner::make_preset(scanner::Figure::custom);
      req.axis = axis == "B" ? scanner::Axis::B : axis == "n" ? scanner::Axis::n : scanner::Axis::p0;
      for (const auto& k : kinds) {
        if (k == "nonrel") req.kinds.push_back(qsl::SuperpositionKind::nonrelativistic);
        else if (k == "pp") req.kinds.push_back(qsl::SuperpositionKind::particle_particle);
        else req.kinds.push_back(qsl::SuperpositionKind::antiparticle_particle);
      }
      req.strong_field_closed_form = strong;
      req.n = 0;
    }
    apply_common(req, opt);
    return run(req, opt);
  } catch (const scanner::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const scanner::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
