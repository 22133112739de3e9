#include "gmix/beam_splitter.hpp"

#include <cmath>

namespace gmix {

TwoModeCM mix(const SingleModeCM& sigma_c, const SingleModeCM& sigma_d,
              double tau, OffDiagForm form) {
  if (!std::isfinite(tau) || tau < 0.0 || tau > 1.0) {
    throw std::invalid_argument("mix: transmissivity must lie in [0, 1]");
  }
  if (!check_physical(sigma_c, 1e-9) || !check_physical(sigma_d, 1e-9)) {
    throw physicality_error("mix: input covariance matrix is non-physical");
  }

  const double co = form == OffDiagForm::Symplectic
                        ? std::sqrt(tau * (1.0 - tau))
                        : tau * (1.0 - tau);

  TwoModeCM out;
  out.a_block = tau * sigma_c + (1.0 - tau) * sigma_d;
  out.b_block = tau * sigma_d + (1.0 - tau) * sigma_c;
  const SingleModeCM diff = sigma_d - sigma_c;  // symmetric, so C = C^T
  out.c_block = {co * diff.xx, co * diff.xp, co * diff.xp, co * diff.pp};
  return out;
}

}  // namespace gmix
