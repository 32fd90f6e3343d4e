#include "magqsl/scanner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

namespace magqsl::scanner {

namespace {

std::string format_g12(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<double> even_levels(int n_max) {
  std::vector<double> out;
  for (int n = 0; n <= n_max; n += 2) out.push_back(static_cast<double>(n));
  return out;
}

}  // namespace

const char* kind_name(qsl::SuperpositionKind kind) {
  switch (kind) {
    case qsl::SuperpositionKind::nonrelativistic: return "nonrelativistic";
    case qsl::SuperpositionKind::particle_particle: return "particle_particle";
    case qsl::SuperpositionKind::antiparticle_particle: return "antiparticle_particle";
  }
  return "unknown";
}

std::vector<double> GridSpec::values() const {
  if (count < 1) throw UsageError("grid: count must be >= 1");
  if (count > 1 && !(max > min)) throw UsageError("grid: need max > min");
  if (spacing == Spacing::log && !(min > 0.0)) throw UsageError("grid: log spacing needs min > 0");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = min;
    return out;
  }
  if (spacing == Spacing::linear) {
    for (int i = 0; i < count; ++i)
      out[i] = min + (max - min) * static_cast<double>(i) / (count - 1);
  } else {
    const double la = std::log10(min), lb = std::log10(max);
    for (int i = 0; i < count; ++i)
      out[i] = std::pow(10.0, la + (lb - la) * static_cast<double>(i) / (count - 1));
  }
  return out;
}

void ScanRequest::validate() const {
  if (grid.empty()) throw UsageError("scan: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw UsageError("scan: grid must be strictly increasing");
  if (axis != Axis::B) {
    if (field_values.empty()) throw UsageError("scan: a fixed B value is required");
    for (double b : field_values)
      if (!(b > 0.0)) throw UsageError("scan: B must be > 0");
  }
  if (axis == Axis::n) {
    for (double v : grid) {
      const int n = static_cast<int>(std::lround(v));
      if (v != n || n < 0 || n % 2 != 0)
        throw UsageError("scan: n grid must contain even non-negative integers");
    }
  } else if (n < 0 || n % 2 != 0) {
    throw UsageError("scan: fixed n must be even and >= 0");
  }
  if (kinds.empty() && !strong_field_closed_form)
    throw UsageError("scan: no superposition kind selected");
  if (!(d_over_inv_beta > 0.0)) throw UsageError("scan: packet width must be > 0");
  if (!(p0_over_beta_hbar >= 0.0)) throw UsageError("scan: p0 must be >= 0");
  quadrature.validate();
}

ScanRequest make_preset(Figure figure) {
  ScanRequest req;
  req.figure = figure;
  switch (figure) {
    case Figure::fig1:
      // Average radial speed vs B for the n = 0, p0 = 0 superposition, both
      // dynamics. Range brackets the superluminal crossing near 2.77e10 T
      // and the relativistic plateau.
      req.axis = Axis::B;
      req.grid = GridSpec{1e8, 1e13, 60, Spacing::log}.values();
      req.kinds = {qsl::SuperpositionKind::nonrelativistic,
                   qsl::SuperpositionKind::particle_particle};
      req.n = 0;
      break;
    case Figure::fig2:
      // Strong-field particle-particle speed vs n, closed form.
      req.axis = Axis::n;
      req.grid = even_levels(132);
      req.field_values = {1e15};
      req.strong_field_closed_form = true;
      req.kinds = {qsl::SuperpositionKind::particle_particle};
      break;
    case Figure::fig3:
      // Strong-field antiparticle-particle speed vs n at the per-n
      // speed-maximizing axial momentum (~ beta hbar sqrt(2n+6)).
      req.axis = Axis::n;
      req.grid = even_levels(132);
      req.field_values = {1e15};
      req.strong_field_closed_form = true;
      req.p0_maximizing = true;
      req.kinds = {qsl::SuperpositionKind::antiparticle_particle};
      break;
    case Figure::fig4:
      // Both kinds vs p0 at three field strengths, n = 0.
      req.axis = Axis::p0;
      req.grid = GridSpec{0.0, 10.0, 51, Spacing::linear}.values();
      req.field_values = {1e10, 1e11, 1e12};
      req.kinds = {qsl::SuperpositionKind::particle_particle,
                   qsl::SuperpositionKind::antiparticle_particle};
      req.n = 0;
      break;
    case Figure::custom:
      break;
  }
  return req;
}

namespace {

enum class Route { nonrel_closed, rel_quadrature, pp_strong_closed, ap_strong_closed };

struct RowTask {
  double axis_value = 0.0;
  std::string kind_label;
  Route route = Route::rel_quadrature;
  qsl::SuperpositionKind kind = qsl::SuperpositionKind::particle_particle;
  double field_b = 0.0;
  int n = 0;
  double p0_over_beta_hbar = 0.0;
};

Route route_for(const ScanRequest& req, qsl::SuperpositionKind kind) {
  if (kind == qsl::SuperpositionKind::nonrelativistic) return Route::nonrel_closed;
  if (!req.strong_field_closed_form) return Route::rel_quadrature;
  return kind == qsl::SuperpositionKind::particle_particle ? Route::pp_strong_closed
                                                           : Route::ap_strong_closed;
}

std::vector<RowTask> build_tasks(const ScanRequest& req) {
  std::vector<RowTask> tasks;
  const bool label_field = req.field_values.size() > 1;
  const std::vector<double> single{0.0};
  const std::vector<double>& fields = req.axis == Axis::B ? single : req.field_values;

  for (double axis_value : req.grid) {
    for (double b : fields) {
      for (auto kind : req.kinds) {
        RowTask task;
        task.axis_value = axis_value;
        task.kind = kind;
        task.route = route_for(req, kind);
        task.n = req.axis == Axis::n ? static_cast<int>(std::lround(axis_value)) : req.n;
        task.field_b = req.axis == Axis::B ? axis_value : b;
        if (req.axis == Axis::p0)
          task.p0_over_beta_hbar = axis_value;
        else if (req.p0_maximizing)
          task.p0_over_beta_hbar = observables::optimal_p0_over_beta_hbar(task.n);
        else
          task.p0_over_beta_hbar = req.p0_over_beta_hbar;
        task.kind_label = kind_name(kind);
        if (req.strong_field_closed_form) task.kind_label += "_strong_field";
        if (label_field) task.kind_label += " B=" + format_g6(task.field_b);
        tasks.push_back(std::move(task));
      }
    }
  }
  return tasks;
}

ScanRow compute_row(const RowTask& task, const ScanRequest& req) {
  ScanRow row;
  row.axis_value = task.axis_value;
  row.kind = task.kind_label;
  try {
    const auto field = landau::FieldConfig::make(task.field_b, req.constants);
    switch (task.route) {
      case Route::nonrel_closed: {
        const auto r = observables::speed_nonrel(field);
        row.t_min_s = r.t_min;
        row.displacement_m = r.displacement;
        row.v_bar_over_c = r.v_bar_over_c;
        break;
      }
      case Route::rel_quadrature: {
        qsl::SuperpositionSpec spec;
        spec.kind = task.kind;
        spec.n = task.n;
        spec.field = field;
        spec.packet = {task.p0_over_beta_hbar * field.beta * req.constants.hbar,
                       req.d_over_inv_beta / field.beta};
        const auto r = observables::speed_rel(spec, req.quadrature);
        row.t_min_s = r.t_min;
        row.displacement_m = r.displacement;
        row.v_bar_over_c = r.v_bar_over_c;
        break;
      }
      case Route::pp_strong_closed: {
        row.t_min_s = qsl::qsl_time_strong_field(task.n, field);
        row.displacement_m = observables::displacement_strong_field_closed_form(task.n, field);
        row.v_bar_over_c = observables::speed_strong_field(task.n);
        break;
      }
      case Route::ap_strong_closed: {
        const auto r =
            observables::antiparticle_strong_field(task.n, task.p0_over_beta_hbar, field);
        row.t_min_s = r.t_min;
        row.displacement_m = r.displacement;
        row.v_bar_over_c = r.v_bar_over_c;
        break;
      }
    }
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
    row.t_min_s = row.displacement_m = row.v_bar_over_c =
        std::numeric_limits<double>::quiet_NaN();
  }
  return row;
}

std::string axis_token(Axis axis) {
  switch (axis) {
    case Axis::B: return "B";
    case Axis::n: return "n";
    case Axis::p0: return "p0";
  }
  return "B";
}

std::string figure_token(Figure f) {
  switch (f) {
    case Figure::fig1: return "fig1";
    case Figure::fig2: return "fig2";
    case Figure::fig3: return "fig3";
    case Figure::fig4: return "fig4";
    case Figure::custom: return "custom";
  }
  return "custom";
}

ScanMeta make_meta(const ScanRequest& req) {
  ScanMeta meta;
  meta.figure = figure_token(req.figure);
  meta.axis_name = axis_token(req.axis);
  meta.spacing = req.figure == Figure::fig1 || (req.axis == Axis::B && req.grid.size() > 2 &&
                                                req.grid[1] / req.grid[0] > 1.5)
                     ? Spacing::log
                     : Spacing::linear;

  std::ostringstream fixed;
  fixed << "fixed n=" << req.n << " p0_over_beta_hbar=" << format_g6(req.p0_over_beta_hbar)
        << " p0_maximizing=" << (req.p0_maximizing ? 1 : 0)
        << " d_over_inv_beta=" << format_g6(req.d_over_inv_beta) << " B=";
  if (req.axis == Axis::B) {
    fixed << "axis";
  } else {
    for (std::size_t i = 0; i < req.field_values.size(); ++i)
      fixed << (i ? "," : "") << format_g6(req.field_values[i]);
  }
  fixed << " kinds=";
  for (std::size_t i = 0; i < req.kinds.size(); ++i)
    fixed << (i ? "," : "") << kind_name(req.kinds[i]);
  if (req.strong_field_closed_form) fixed << " route=strong_field_closed_form";
  meta.fixed_comments.push_back(fixed.str());

  std::ostringstream quad;
  quad << "quadrature rtol=" << format_g6(req.quadrature.relative_tolerance)
       << " momentum_nodes=" << req.quadrature.momentum_node_count
       << " cutoff=" << format_g6(req.quadrature.radial_cutoff_factor)
       << " max_subdivisions=" << req.quadrature.max_subdivisions;
  meta.fixed_comments.push_back(quad.str());
  return meta;
}

}  // namespace

ScanTable run_scan(const ScanRequest& request, Execution execution) {
  request.validate();
  const std::vector<RowTask> tasks = build_tasks(request);
  ScanTable table;
  table.meta = make_meta(request);
  table.rows.resize(tasks.size());
  ScanRow* rows = table.rows.data();

  if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < tasks.size(); ++i) rows[i] = compute_row(tasks[i], request);
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i) rows[i] = compute_row(tasks[i], request);
  }
  return table;
}

std::string render_csv(const ScanTable& table) {
  std::ostringstream out;
  out << "# magqsl figure=" << table.meta.figure << " axis=" << table.meta.axis_name
      << " spacing=" << (table.meta.spacing == Spacing::log ? "log" : "linear") << "\n";
  for (const auto& line : table.meta.fixed_comments) out << "# " << line << "\n";
  out << "axis,t_min_s,displacement_m,v_bar_over_c,kind,status\n";
  for (const auto& row : table.rows) {
    out << format_g12(row.axis_value) << ',' << format_g12(row.t_min_s) << ','
        << format_g12(row.displacement_m) << ',' << format_g12(row.v_bar_over_c) << ','
        << row.kind << ',' << (row.ok ? "ok" : "failed") << "\n";
  }
  return out.str();
}

void emit_csv(const ScanTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << render_csv(table);
  if (!out) throw IoError("write failed: " + path);
}

ScanTable load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  ScanTable table;
  std::string line;
  bool saw_header = false;
  bool first_comment = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (first_comment) {
        first_comment = false;
        std::istringstream ls(line.substr(1));
        std::string token;
        while (ls >> token) {
          if (token.rfind("figure=", 0) == 0) table.meta.figure = token.substr(7);
          else if (token.rfind("axis=", 0) == 0) table.meta.axis_name = token.substr(5);
          else if (token.rfind("spacing=", 0) == 0)
            table.meta.spacing = token.substr(8) == "log" ? Spacing::log : Spacing::linear;
        }
      } else {
        table.meta.fixed_comments.push_back(line.substr(2));
      }
      continue;
    }
    if (!saw_header) {  // column header row
      saw_header = true;
      continue;
    }
    std::istringstream ls(line);
    std::string cell;
    ScanRow row;
    std::getline(ls, cell, ',');
    row.axis_value = std::strtod(cell.c_str(), nullptr);
    std::getline(ls, cell, ',');
    row.t_min_s = std::strtod(cell.c_str(), nullptr);
    std::getline(ls, cell, ',');
    row.displacement_m = std::strtod(cell.c_str(), nullptr);
    std::getline(ls, cell, ',');
    row.v_bar_over_c = std::strtod(cell.c_str(), nullptr);
    std::getline(ls, row.kind, ',');
    std::getline(ls, cell);
    row.ok = cell == "ok";
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

// Values cross the 12-digit CSV text on their way into the plot, which makes
// emit_svg(run_scan(...)) and emit_svg(load_csv(...)) byte-identical.
double through_csv(double v) {
  const std::string text = format_g12(v);
  return std::strtod(text.c_str(), nullptr);
}

std::string format_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

std::string render_svg(const ScanTable& table) {
  if (table.rows.empty()) throw UsageError("svg: no rows to plot");
  const bool logx = table.meta.spacing == Spacing::log;

  std::vector<std::string> series_names;
  for (const auto& row : table.rows)
    if (std::find(series_names.begin(), series_names.end(), row.kind) == series_names.end())
      series_names.push_back(row.kind);

  double xmin = 0, xmax = 0, ymax = 0;
  bool any = false;
  for (const auto& row : table.rows) {
    if (!row.ok) continue;
    const double x = logx ? std::log10(through_csv(row.axis_value)) : through_csv(row.axis_value);
    const double y = through_csv(row.v_bar_over_c);
    if (!any) {
      xmin = xmax = x;
      ymax = y;
      any = true;
    } else {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymax = std::max(ymax, y);
    }
  }
  if (!any) throw UsageError("svg: all rows failed");
  if (xmax <= xmin) xmax = xmin + 1.0;
  if (ymax <= 0.0) ymax = 1.0;
  ymax *= 1.05;

  const double left = 70, right = 930, top = 25, bottom = 555;
  auto sx = [&](double x) { return left + (right - left) * (x - xmin) / (xmax - xmin); };
  auto sy = [&](double y) { return bottom - (bottom - top) * y / ymax; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"600\" "
         "viewBox=\"0 0 960 600\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"960\" height=\"600\" fill=\"white\"/>\n";
  out << "<rect x=\"" << format_coord(left) << "\" y=\"" << format_coord(top) << "\" width=\""
      << format_coord(right - left) << "\" height=\"" << format_coord(bottom - top)
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  // axis ticks
  for (int i = 0; i <= 5; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 5.0;
    const double px = sx(fx);
    out << "<line x1=\"" << format_coord(px) << "\" y1=\"" << format_coord(bottom) << "\" x2=\""
        << format_coord(px) << "\" y2=\"" << format_coord(bottom + 6) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << format_coord(px) << "\" y=\"" << format_coord(bottom + 22)
        << "\" font-size=\"13\" text-anchor=\"middle\">"
        << (logx ? ("1e" + format_g6(fx)) : format_g6(through_csv(fx))) << "</text>\n";
    const double fy = ymax * i / 5.0;
    const double py = sy(fy);
    out << "<line x1=\"" << format_coord(left - 6) << "\" y1=\"" << format_coord(py)
        << "\" x2=\"" << format_coord(left) << "\" y2=\"" << format_coord(py)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << format_coord(left - 10) << "\" y=\"" << format_coord(py + 4)
        << "\" font-size=\"13\" text-anchor=\"end\">" << format_g6(fy) << "</text>\n";
  }
  const std::string xlabel = table.meta.axis_name == "B"   ? "B [T]"
                             : table.meta.axis_name == "n" ? "n"
                                                           : "p0 / (beta hbar)";
  out << "<text x=\"500\" y=\"592\" font-size=\"15\" text-anchor=\"middle\">" << xlabel
      << "</text>\n";
  out << "<text x=\"18\" y=\"290\" font-size=\"15\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 18 290)\">average radial speed v/c</text>\n";

  for (std::size_t s = 0; s < series_names.size(); ++s) {
    const std::string& name = series_names[s];
    const char* color = kPalette[s % 6];
    std::ostringstream points;
    std::ostringstream markers;
    for (const auto& row : table.rows) {
      if (!row.ok || row.kind != name) continue;
      const double x = logx ? std::log10(through_csv(row.axis_value)) : through_csv(row.axis_value);
      const double px = sx(x);
      const double py = sy(through_csv(row.v_bar_over_c));
      points << format_coord(px) << ',' << format_coord(py) << ' ';
      markers << "<circle cx=\"" << format_coord(px) << "\" cy=\"" << format_coord(py)
              << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
        << points.str() << "\"/>\n";
    out << markers.str();
    out << "<text x=\"" << format_coord(left + 14) << "\" y=\""
        << format_coord(top + 20 + 18 * static_cast<double>(s)) << "\" font-size=\"13\" fill=\""
        << color << "\">" << name << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void emit_svg(const ScanTable& table, const std::string& path) {
  const std::string body = render_svg(table);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << body;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace magqsl::scanner
