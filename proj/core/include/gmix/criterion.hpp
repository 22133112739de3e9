#pragma once

#include <functional>
#include <optional>

#include "gmix/state.hpp"

namespace gmix {

/// Outcome of the fidelity-threshold entanglement test for one input pair.
struct CriterionVerdict {
  double f_cd = 0.0;               ///< fidelity between the two inputs
  double f_th = 0.0;               ///< threshold fidelity
  bool entangled_predicted = false;  ///< f_cd < f_th (strict)
  double margin = 0.0;             ///< f_th - f_cd (positive iff predicted entangled)
};

/// Threshold fidelity for mixing states of purities mu_c, mu_d at a beam
/// splitter of transmissivity tau:
///
///     F_th = 4*mu_c*mu_d*sqrt(tau*(1-tau))
///            / (sqrt(g- + 4*tau*(1-tau)*g+) - sqrt(4*tau*(1-tau)*g-)),
///     g+- = (1 +- mu_c^2) * (1 +- mu_d^2).
///
/// Equals 1 for mu_c = mu_d = 1 at every tau, and depends on tau only
/// through tau*(1-tau).  Returns std::nullopt for tau in {0, 1} (no mixing
/// takes place, so no threshold applies).  Throws std::invalid_argument for
/// purities outside (0, 1] or tau outside [0, 1].
std::optional<double> threshold(double mu_c, double mu_d, double tau);

/// Full criterion for one pair: entanglement at the beam-splitter output is
/// predicted iff fidelity(sigma_c, sigma_d) < threshold(purities, tau).
/// Returns std::nullopt for tau in {0, 1}; propagates physicality errors
/// from fidelity/purity.
std::optional<CriterionVerdict> assess(const SingleModeCM& sigma_c,
                                       const SingleModeCM& sigma_d,
                                       double tau);

/// Large-squeezing limit of the critical transmission for the symmetric
/// damping scenario with a thermal bath of occupation n_th on one mode:
///
///     T_c -> 1 - 1/sqrt(1 + 2*n_th)   (r >> 1),
///
/// which is 0 at n_th = 0 (loss alone never breaks the criterion) and
/// 1 - sqrt(12)/6 at n_th = 1.  Throws std::invalid_argument for n_th < 0.
double critical_transmission_asymptote(double n_th);

/// Root finder used by the critical-transmission solver: samples f on a
/// uniform grid of grid_points points over [lo, hi], brackets every sign
/// change, bisects each bracket to width <= tol, and returns the largest
/// root.  Returns std::nullopt when f never changes sign on the grid.
std::optional<double> find_largest_crossing(
    const std::function<double(double)>& f, double lo, double hi,
    int grid_points = 1024, double tol = 1e-10);

}  // namespace gmix
