#include "gmix/channel.hpp"

#include <cmath>

namespace gmix {

bool channel_valid(const ChannelSpec& ch, double tol) noexcept {
  if (!std::isfinite(ch.transmission) || !std::isfinite(ch.n_bath) ||
      !std::isfinite(ch.m_bath.real()) || !std::isfinite(ch.m_bath.imag())) {
    return false;
  }
  if (ch.transmission < 0.0 || ch.transmission > 1.0 || ch.n_bath < 0.0) {
    return false;
  }
  // |m|^2 <= n*(n+1) keeps the bath state physical.
  return std::norm(ch.m_bath) <= ch.n_bath * (ch.n_bath + 1.0) + tol;
}

SingleModeCM asymptotic_cm(const ChannelSpec& ch) {
  if (!channel_valid(ch)) {
    throw std::invalid_argument("asymptotic_cm: invalid channel parameters");
  }
  const double diag = vacuum_variance + ch.n_bath;
  return {diag + ch.m_bath.real(), ch.m_bath.imag(), diag - ch.m_bath.real()};
}

SingleModeCM evolve(const SingleModeCM& cm, const ChannelSpec& ch) {
  if (!channel_valid(ch)) {
    throw std::invalid_argument("evolve: invalid channel parameters");
  }
  if (!check_physical(cm, 1e-9)) {
    throw physicality_error("evolve: input covariance matrix is non-physical");
  }
  const double t = ch.transmission;
  return t * cm + (1.0 - t) * asymptotic_cm(ch);
}

double thermal_photons_from_purity(const SingleModeCM& cm) {
  return 0.5 * (1.0 / purity(cm) - 1.0);
}

}  // namespace gmix
