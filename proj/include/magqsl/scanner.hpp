#pragma once

// Scan driver behind the CLI: figure presets, parameter grids, CSV/SVG
// emission. Rows are independent, so the driver can run them either serially
// (reference path) or OpenMP-parallel; both orderings produce byte-identical
// output.

#include <string>
#include <vector>

#include "magqsl/observables.hpp"

namespace magqsl::scanner {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Figure { fig1, fig2, fig3, fig4, custom };
enum class Axis { B, n, p0 };  // p0 axis counted in units of beta hbar
enum class Spacing { linear, log };
enum class Execution { serial, parallel };

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
  Spacing spacing = Spacing::linear;

  std::vector<double> values() const;  // throws UsageError
};

struct ScanRequest {
  Figure figure = Figure::custom;
  Axis axis = Axis::B;
  std::vector<double> grid;  // strictly monotone axis values, non-empty

  std::vector<double> field_values;  // B in tesla; several entries for fig4
  int n = 0;
  double p0_over_beta_hbar = 0.0;
  bool p0_maximizing = false;  // per-n speed-maximizing momentum (fig3)
  double d_over_inv_beta = 50.0;
  std::vector<qsl::SuperpositionKind> kinds;
  bool strong_field_closed_form = false;  // closed-form routes (fig2, fig3)

  specfun::QuadratureConfig quadrature{};
  landau::PhysicalConstants constants = landau::PhysicalConstants::si();

  void validate() const;  // throws UsageError
};

struct ScanRow {
  double axis_value = 0.0;
  double t_min_s = 0.0;
  double displacement_m = 0.0;
  double v_bar_over_c = 0.0;
  std::string kind;
  bool ok = true;
  std::string error;  // not part of the CSV contract; stderr only
};

struct ScanMeta {
  std::string figure = "custom";
  std::string axis_name = "B";
  Spacing spacing = Spacing::linear;
  std::vector<std::string> fixed_comments;  // echoed verbatim into the CSV header
};

struct ScanTable {
  ScanMeta meta;
  std::vector<ScanRow> rows;
};

/// Preset encoding one of the four figures (grids and fixed parameters are
/// documented in the CSV header). figure == custom returns an empty request
/// to be filled in by the caller.
ScanRequest make_preset(Figure figure);

/// Evaluates every grid row. Failed rows are marked, not fatal.
ScanTable run_scan(const ScanRequest& request, Execution execution = Execution::parallel);

/// CSV with comment header, fixed column order
/// (axis, t_min_s, displacement_m, v_bar_over_c, kind, status), 12
/// significant digits, newline-terminated. Deterministic byte-for-byte.
void emit_csv(const ScanTable& table, const std::string& path);
std::string render_csv(const ScanTable& table);

/// Parses a CSV produced by emit_csv (12-digit values survive unchanged).
ScanTable load_csv(const std::string& path);

/// Simple line/scatter plot of v/c against the axis. Values pass through the
/// 12-digit CSV formatting first, so a reloaded CSV replots to identical
/// bytes. Throws UsageError on an empty table.
void emit_svg(const ScanTable& table, const std::string& path);
std::string render_svg(const ScanTable& table);

const char* kind_name(qsl::SuperpositionKind kind);

}  // namespace magqsl::scanner
