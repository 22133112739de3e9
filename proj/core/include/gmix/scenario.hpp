#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gmix/beam_splitter.hpp"
#include "gmix/channel.hpp"
#include "gmix/criterion.hpp"
#include "gmix/ppt.hpp"

namespace gmix {

/// The transmission scenarios.  Both modes start as pure squeezed states
/// with the same r, orthogonally oriented (mode c squeezed in p, mode d in
/// x); losses and thermal noise enter only through the channels.
///
///  - Symmetric: both modes through identical loss channels of
///    transmission t (vacuum bath).
///  - SymmetricThermal: as Symmetric, but mode d's channel couples to a
///    thermal bath of occupation n_th.
///  - AsymmetricRatio: mode c at transmission t, mode d at ratio*t.
///  - FullyAsymmetric: mode c lossless, mode d at transmission t.
///  - FullyAsymmetricThermal: mode c lossless, mode d at transmission t with
///    a thermal bath of occupation n_th.
enum class ScenarioKind {
  Symmetric,
  SymmetricThermal,
  AsymmetricRatio,
  FullyAsymmetric,
  FullyAsymmetricThermal,
};

/// CLI-facing spelling ("symmetric", "symmetric-thermal", ...).
std::string to_string(ScenarioKind kind);

/// Inverse of to_string; std::nullopt for an unknown name.
std::optional<ScenarioKind> scenario_from_string(std::string_view name);

/// Parameters of one scenario sweep.
struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::Symmetric;
  double r = 0.0;       ///< initial squeezing of both pure ancestors
  double tau = 0.5;     ///< mixing beam-splitter transmissivity
  double n_th = 0.0;    ///< bath occupation on mode d (thermal kinds)
  double ratio = 0.9;   ///< transmission ratio for AsymmetricRatio
};

/// Throws std::invalid_argument unless r >= 0, tau in (0, 1), n_th >= 0 and
/// ratio in (0, 1], all finite.
void validate(const ScenarioSpec& spec);

/// The two evolved states (sigma_c(t), sigma_d(t)) of the scenario at
/// channel transmission t in [0, 1].
std::pair<SingleModeCM, SingleModeCM> evolved_pair(const ScenarioSpec& spec,
                                                   double t);

/// The scenario's criterion curves at transmission t: (f_cd, f_th).
std::pair<double, double> curves(const ScenarioSpec& spec, double t);

/// One grid point of a sweep; t is the abscissa (channel transmission, or
/// n_th for thermal_content_sweep).
struct SweepRow {
  double t = 0.0;
  double f_cd = 0.0;
  double f_th = 0.0;
  bool entangled_pred = false;
  double nu_minus = 0.0;
  bool entangled_oracle = false;
};

/// Uniform abscissa grid, endpoints included.  The default covers
/// transmissions [0.005, 1.0] with 201 points, skipping the degenerate t = 0
/// endpoint while still resolving the high-absorption region.
struct GridSpec {
  int points = 201;
  double lo = 0.005;
  double hi = 1.0;
};

/// Runs the scenario over the grid: each row carries the criterion curves
/// plus the partial-transpose verdict on mix(sigma_c(t), sigma_d(t), tau).
std::vector<SweepRow> sweep(const ScenarioSpec& spec, const GridSpec& grid = {},
                            OffDiagForm form = OffDiagForm::Symplectic);

/// Sweep over the thermal content of mode d at fixed residual squeezing:
/// mode c is pure with squeezing r_residual, mode d is a squeezed thermal
/// state with the same r and occupation n_th; the row abscissa t carries
/// n_th.  The margin f_th - f_cd decreases as n_th grows.  The default grid
/// covers n_th in [0, 0.5].
std::vector<SweepRow> thermal_content_sweep(
    double r_residual, const GridSpec& grid = {201, 0.0, 0.5},
    double tau = 0.5, OffDiagForm form = OffDiagForm::Symplectic);

/// Largest transmission t in (0, 1) where the scenario's f_cd and f_th
/// curves cross (grid scan + bisection to |dt| <= 1e-10), i.e. the onset of
/// entanglement breaking as transmission degrades.  std::nullopt when the
/// curves never cross (entanglement available at every t, e.g. vacuum
/// baths).  Requires spec.r > 0.
std::optional<double> critical_transmission(const ScenarioSpec& spec);

/// Combined criterion + oracle result for a single explicit pair.
struct CriterionReport {
  CriterionVerdict verdict;
  PPTReport oracle;
  bool agreement = false;  ///< verdict.entangled_predicted == oracle.entangled
};

/// Evaluates the criterion on (sigma_c, sigma_d, tau) and cross-checks it
/// with the partial-transpose test on the mixed output.  Throws
/// std::invalid_argument for tau in {0, 1} (no mixing, nothing to assess).
CriterionReport check_pair(const SingleModeCM& sigma_c,
                           const SingleModeCM& sigma_d, double tau,
                           OffDiagForm form = OffDiagForm::Symplectic);

/// Writes rows as CSV: header `t,f_cd,f_th,entangled_pred,nu_minus,
/// entangled_oracle`, `%.17g` numbers (lossless for doubles), booleans as
/// 0/1, LF line endings.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Parses CSV produced by write_csv; round-trips bit-identically.  Throws
/// std::invalid_argument on a malformed header or row.
std::vector<SweepRow> read_csv(std::istream& in);

}  // namespace gmix
