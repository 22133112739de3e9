#include "gmix/state.hpp"

#include <algorithm>
#include <cmath>

namespace gmix {

namespace {

// Window below the exact bound inside which a determinant is attributed to
// rounding and clamped, rather than rejected.
constexpr double det_slack = 1e-9;

bool finite(const SingleModeCM& cm) {
  return std::isfinite(cm.xx) && std::isfinite(cm.xp) && std::isfinite(cm.pp);
}

void require_physical(const SingleModeCM& cm, const char* who) {
  if (!check_physical(cm, det_slack)) {
    throw physicality_error(std::string(who) +
                            ": covariance matrix violates the Heisenberg bound");
  }
}

}  // namespace

SingleModeCM make_cm(const SqueezedThermalParams& params) {
  if (!std::isfinite(params.r) || params.r < 0.0) {
    throw std::invalid_argument("make_cm: squeezing parameter must be finite and >= 0");
  }
  if (!std::isfinite(params.n_state) || params.n_state < 0.0) {
    throw std::invalid_argument("make_cm: thermal occupation must be finite and >= 0");
  }
  if (!std::isfinite(params.theta)) {
    throw std::invalid_argument("make_cm: rotation angle must be finite");
  }

  // 1/(2*mu) = (1 + 2*n)/2 scales both squeezed variances.
  const double half_inv_mu = 0.5 * (1.0 + 2.0 * params.n_state);
  const double d1 = std::exp(2.0 * params.r) * half_inv_mu;   // anti-squeezed
  const double d2 = std::exp(-2.0 * params.r) * half_inv_mu;  // squeezed

  const double c = std::cos(params.theta);
  const double s = std::sin(params.theta);
  return {c * c * d1 + s * s * d2,  // xx
          c * s * (d1 - d2),        // xp
          s * s * d1 + c * c * d2}; // pp
}

bool check_physical(const SingleModeCM& cm, double tol) noexcept {
  return finite(cm) && cm.xx > 0.0 && cm.pp > 0.0 &&
         cm.det() >= min_physical_det - tol;
}

double purity(const SingleModeCM& cm) {
  require_physical(cm, "purity");
  // Clamp so that pure states with det = 1/4 - O(eps) report exactly 1.
  const double d = std::max(cm.det(), min_physical_det);
  return 1.0 / (2.0 * std::sqrt(d));
}

double fidelity(const SingleModeCM& a, const SingleModeCM& b) {
  require_physical(a, "fidelity");
  require_physical(b, "fidelity");

  // Identical states have unit fidelity by definition; short-circuit so the
  // identity holds exactly instead of to within rounding.
  if (a.xx == b.xx && a.xp == b.xp && a.pp == b.pp) return 1.0;

  const double big_delta = (a + b).det();
  double delta = 4.0 * (a.det() - min_physical_det) * (b.det() - min_physical_det);
  if (delta < -det_slack) {
    throw physicality_error("fidelity: purity excess product below physical range");
  }
  delta = std::max(delta, 0.0);

  const double f = 1.0 / (std::sqrt(big_delta + delta) - std::sqrt(delta));
  return std::min(f, 1.0);
}

}  // namespace gmix
