#pragma once

#include <stdexcept>

namespace gmix {

/// Variance of each quadrature in the vacuum state; the vacuum covariance
/// matrix is (1/2)*I throughout this library.
inline constexpr double vacuum_variance = 0.5;

/// Lower bound on det(sigma) for a physical single-mode covariance matrix
/// (Heisenberg uncertainty); equality holds exactly for pure states.
inline constexpr double min_physical_det = 0.25;

/// Thrown when a covariance matrix (or a quantity derived from one) violates
/// the Heisenberg bound beyond numerical tolerance.
class physicality_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Covariance matrix of a single bosonic mode,
///
///     sigma = [ xx  xp ]
///             [ xp  pp ]
///
/// in the convention where the vacuum is (1/2)*I.
struct SingleModeCM {
  double xx = vacuum_variance;
  double xp = 0.0;
  double pp = vacuum_variance;

  double det() const { return xx * pp - xp * xp; }
  double trace() const { return xx + pp; }
};

inline SingleModeCM operator+(const SingleModeCM& a, const SingleModeCM& b) {
  return {a.xx + b.xx, a.xp + b.xp, a.pp + b.pp};
}

inline SingleModeCM operator-(const SingleModeCM& a, const SingleModeCM& b) {
  return {a.xx - b.xx, a.xp - b.xp, a.pp - b.pp};
}

inline SingleModeCM operator*(double s, const SingleModeCM& a) {
  return {s * a.xx, s * a.xp, s * a.pp};
}

/// Parameters of a rotated squeezed thermal state: squeezing r >= 0,
/// quadrature rotation theta (pi-periodic at the covariance level), and
/// thermal occupation n_state >= 0 (n_state = 0 gives a pure state).
struct SqueezedThermalParams {
  double r = 0.0;
  double theta = 0.0;
  double n_state = 0.0;
};

/// Builds the covariance matrix
///
///     sigma = R(theta) * diag(e^{2r}, e^{-2r}) * R(theta)^T / (2*mu),
///
/// with mu = 1/(1 + 2*n_state), so theta = 0 squeezes p (xx = e^{2r}/(2*mu))
/// and theta = pi/2 squeezes x.  Throws std::invalid_argument for negative r
/// or n_state or non-finite parameters.
SingleModeCM make_cm(const SqueezedThermalParams& params);

/// True iff cm is a valid covariance matrix: finite entries, positive
/// diagonal, and det(cm) >= 1/4 - tol.
bool check_physical(const SingleModeCM& cm, double tol = 1e-12) noexcept;

/// Purity mu = 1/(2*sqrt(det sigma)) in (0, 1].  The determinant is clamped
/// from below at 1/4 so that states pure up to rounding report mu = 1
/// exactly.  Throws physicality_error if det < 1/4 - 1e-9.
double purity(const SingleModeCM& cm);

/// Uhlmann fidelity between two single-mode Gaussian states with zero mean:
///
///     F = 1 / (sqrt(Delta + delta) - sqrt(delta)),
///     Delta = det(sigma_a + sigma_b),
///     delta = 4 * (det sigma_a - 1/4) * (det sigma_b - 1/4).
///
/// Returns a value in (0, 1]; F = 1 iff the states coincide.  Tiny negative
/// delta from rounding is clamped to zero; beyond -1e-9 it is treated as a
/// non-physical input and physicality_error is thrown.
double fidelity(const SingleModeCM& a, const SingleModeCM& b);

}  // namespace gmix
