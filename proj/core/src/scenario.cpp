#include "gmix/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace gmix {

namespace {

constexpr const char* csv_header =
    "t,f_cd,f_th,entangled_pred,nu_minus,entangled_oracle";

// Pure orthogonally squeezed ancestors: mode c anti-squeezed in x, mode d
// anti-squeezed in p.
SingleModeCM ancestor_c(double r) { return make_cm({r, 0.0, 0.0}); }
SingleModeCM ancestor_d(double r) {
  return make_cm({r, std::numbers::pi / 2.0, 0.0});
}

void require_unit_interval(double t, const char* who) {
  if (!std::isfinite(t) || t < 0.0 || t > 1.0) {
    throw std::invalid_argument(std::string(who) +
                                ": transmission must lie in [0, 1]");
  }
}

void require_grid(const GridSpec& grid, const char* who) {
  if (grid.points < 2 || !std::isfinite(grid.lo) || !std::isfinite(grid.hi) ||
      !(grid.lo < grid.hi)) {
    throw std::invalid_argument(std::string(who) +
                                ": grid needs >= 2 points and lo < hi");
  }
}

double grid_point(const GridSpec& grid, int i) {
  if (i == grid.points - 1) return grid.hi;
  return grid.lo + i * (grid.hi - grid.lo) / (grid.points - 1);
}

SweepRow make_row(double abscissa, const SingleModeCM& sigma_c,
                  const SingleModeCM& sigma_d, double tau, OffDiagForm form) {
  const auto verdict = assess(sigma_c, sigma_d, tau);
  // tau is validated to (0, 1) by every caller, so assess cannot decline.
  const PPTReport oracle = ppt_check(mix(sigma_c, sigma_d, tau, form));

  SweepRow row;
  row.t = abscissa;
  row.f_cd = verdict->f_cd;
  row.f_th = verdict->f_th;
  row.entangled_pred = verdict->entangled_predicted;
  row.nu_minus = oracle.nu_minus;
  row.entangled_oracle = oracle.entangled;
  return row;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Symmetric:
      return "symmetric";
    case ScenarioKind::SymmetricThermal:
      return "symmetric-thermal";
    case ScenarioKind::AsymmetricRatio:
      return "asymmetric-ratio";
    case ScenarioKind::FullyAsymmetric:
      return "fully-asymmetric";
    case ScenarioKind::FullyAsymmetricThermal:
      return "fully-asymmetric-thermal";
  }
  return "unknown";
}

std::optional<ScenarioKind> scenario_from_string(std::string_view name) {
  if (name == "symmetric") return ScenarioKind::Symmetric;
  if (name == "symmetric-thermal") return ScenarioKind::SymmetricThermal;
  if (name == "asymmetric-ratio") return ScenarioKind::AsymmetricRatio;
  if (name == "fully-asymmetric") return ScenarioKind::FullyAsymmetric;
  if (name == "fully-asymmetric-thermal") {
    return ScenarioKind::FullyAsymmetricThermal;
  }
  return std::nullopt;
}

void validate(const ScenarioSpec& spec) {
  if (!std::isfinite(spec.r) || spec.r < 0.0) {
    throw std::invalid_argument("scenario: squeezing r must be finite and >= 0");
  }
  if (!std::isfinite(spec.tau) || spec.tau <= 0.0 || spec.tau >= 1.0) {
    throw std::invalid_argument("scenario: mixing tau must lie in (0, 1)");
  }
  if (!std::isfinite(spec.n_th) || spec.n_th < 0.0) {
    throw std::invalid_argument("scenario: bath occupation must be >= 0");
  }
  if (!std::isfinite(spec.ratio) || spec.ratio <= 0.0 || spec.ratio > 1.0) {
    throw std::invalid_argument("scenario: transmission ratio must lie in (0, 1]");
  }
}

std::pair<SingleModeCM, SingleModeCM> evolved_pair(const ScenarioSpec& spec,
                                                   double t) {
  validate(spec);
  require_unit_interval(t, "evolved_pair");

  const SingleModeCM c0 = ancestor_c(spec.r);
  const SingleModeCM d0 = ancestor_d(spec.r);
  const ChannelSpec loss{t, 0.0, {0.0, 0.0}};
  const ChannelSpec thermal{t, spec.n_th, {0.0, 0.0}};

  switch (spec.kind) {
    case ScenarioKind::Symmetric:
      return {evolve(c0, loss), evolve(d0, loss)};
    case ScenarioKind::SymmetricThermal:
      return {evolve(c0, loss), evolve(d0, thermal)};
    case ScenarioKind::AsymmetricRatio:
      return {evolve(c0, loss), evolve(d0, {spec.ratio * t, 0.0, {0.0, 0.0}})};
    case ScenarioKind::FullyAsymmetric:
      return {c0, evolve(d0, loss)};
    case ScenarioKind::FullyAsymmetricThermal:
      return {c0, evolve(d0, thermal)};
  }
  throw std::invalid_argument("scenario: unknown kind");
}

std::pair<double, double> curves(const ScenarioSpec& spec, double t) {
  const auto [sigma_c, sigma_d] = evolved_pair(spec, t);
  const auto verdict = assess(sigma_c, sigma_d, spec.tau);
  return {verdict->f_cd, verdict->f_th};
}

std::vector<SweepRow> sweep(const ScenarioSpec& spec, const GridSpec& grid,
                            OffDiagForm form) {
  validate(spec);
  require_grid(grid, "sweep");
  require_unit_interval(grid.lo, "sweep");
  require_unit_interval(grid.hi, "sweep");

  std::vector<SweepRow> rows;
  rows.reserve(grid.points);
  for (int i = 0; i < grid.points; ++i) {
    const double t = grid_point(grid, i);
    const auto [sigma_c, sigma_d] = evolved_pair(spec, t);
    rows.push_back(make_row(t, sigma_c, sigma_d, spec.tau, form));
  }
  return rows;
}

std::vector<SweepRow> thermal_content_sweep(double r_residual,
                                            const GridSpec& grid, double tau,
                                            OffDiagForm form) {
  if (!std::isfinite(r_residual) || r_residual <= 0.0) {
    throw std::invalid_argument(
        "thermal_content_sweep: residual squeezing must be > 0");
  }
  if (!std::isfinite(tau) || tau <= 0.0 || tau >= 1.0) {
    throw std::invalid_argument(
        "thermal_content_sweep: mixing tau must lie in (0, 1)");
  }
  require_grid(grid, "thermal_content_sweep");
  if (grid.lo < 0.0) {
    throw std::invalid_argument(
        "thermal_content_sweep: thermal occupation grid must be >= 0");
  }

  const SingleModeCM sigma_c = ancestor_c(r_residual);
  std::vector<SweepRow> rows;
  rows.reserve(grid.points);
  for (int i = 0; i < grid.points; ++i) {
    const double n_th = grid_point(grid, i);
    const SingleModeCM sigma_d =
        make_cm({r_residual, std::numbers::pi / 2.0, n_th});
    rows.push_back(make_row(n_th, sigma_c, sigma_d, tau, form));
  }
  return rows;
}

std::optional<double> critical_transmission(const ScenarioSpec& spec) {
  validate(spec);
  if (spec.r <= 0.0) {
    throw std::invalid_argument(
        "critical_transmission: needs strictly positive squeezing");
  }

  // Grid nodes at i/1024 for i = 1..1024; avoids the degenerate t = 0.
  const auto gap = [&spec](double t) {
    const auto [f_cd, f_th] = curves(spec, t);
    return f_cd - f_th;
  };
  return find_largest_crossing(gap, 1.0 / 1024.0, 1.0, 1024, 1e-10);
}

CriterionReport check_pair(const SingleModeCM& sigma_c,
                           const SingleModeCM& sigma_d, double tau,
                           OffDiagForm form) {
  if (!std::isfinite(tau) || tau <= 0.0 || tau >= 1.0) {
    throw std::invalid_argument("check_pair: mixing tau must lie in (0, 1)");
  }

  CriterionReport report;
  report.verdict = *assess(sigma_c, sigma_d, tau);
  report.oracle = ppt_check(mix(sigma_c, sigma_d, tau, form));
  report.agreement =
      report.verdict.entangled_predicted == report.oracle.entangled;
  return report;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << csv_header << '\n';
  for (const SweepRow& row : rows) {
    out << format_g17(row.t) << ',' << format_g17(row.f_cd) << ','
        << format_g17(row.f_th) << ',' << (row.entangled_pred ? '1' : '0')
        << ',' << format_g17(row.nu_minus) << ','
        << (row.entangled_oracle ? '1' : '0') << '\n';
  }
}

namespace {

double parse_double(const std::string& field, int line_no) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw std::invalid_argument("read_csv: bad numeric field on line " +
                                std::to_string(line_no));
  }
  return v;
}

bool parse_bool(const std::string& field, int line_no) {
  if (field == "0") return false;
  if (field == "1") return true;
  throw std::invalid_argument("read_csv: bad boolean field on line " +
                              std::to_string(line_no));
}

}  // namespace

std::vector<SweepRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != csv_header) {
    throw std::invalid_argument("read_csv: missing or malformed header");
  }

  std::vector<SweepRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 6) {
      throw std::invalid_argument("read_csv: expected 6 fields on line " +
                                  std::to_string(line_no));
    }

    SweepRow row;
    row.t = parse_double(fields[0], line_no);
    row.f_cd = parse_double(fields[1], line_no);
    row.f_th = parse_double(fields[2], line_no);
    row.entangled_pred = parse_bool(fields[3], line_no);
    row.nu_minus = parse_double(fields[4], line_no);
    row.entangled_oracle = parse_bool(fields[5], line_no);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gmix
