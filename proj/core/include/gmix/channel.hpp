#pragma once

#include <complex>

#include "gmix/state.hpp"

namespace gmix {

/// One-mode Gaussian attenuation channel with a (possibly squeezed) thermal
/// environment: transmission T in [0, 1], bath occupation n_bath >= 0, and
/// bath squeezing correlation m_bath constrained by
/// |m_bath|^2 <= n_bath * (n_bath + 1).
struct ChannelSpec {
  double transmission = 1.0;
  double n_bath = 0.0;
  std::complex<double> m_bath{0.0, 0.0};
};

/// True iff the channel parameters are finite and within their ranges
/// (the m_bath bound is checked up to tol).
bool channel_valid(const ChannelSpec& ch, double tol = 1e-12) noexcept;

/// Fixed point of the channel:
///
///     sigma_inf = [ 1/2 + n_bath + Re m_bath        Im m_bath          ]
///                 [ Im m_bath                1/2 + n_bath - Re m_bath  ]
///
/// i.e. the thermal CM (1/2 + n_bath)*I when m_bath = 0.
SingleModeCM asymptotic_cm(const ChannelSpec& ch);

/// Evolves cm through the channel:
///
///     sigma(T) = T * sigma(0) + (1 - T) * sigma_inf.
///
/// Exact entrywise linear interpolation toward the bath; a semigroup in T
/// for a fixed bath (composing transmissions multiplies them).  Throws
/// std::invalid_argument for an invalid channel and physicality_error for a
/// non-physical input state.
SingleModeCM evolve(const SingleModeCM& cm, const ChannelSpec& ch);

/// Effective thermal occupation inferred from the purity:
/// n = (1/mu - 1)/2 with mu = purity(cm); zero for pure states.
double thermal_photons_from_purity(const SingleModeCM& cm);

}  // namespace gmix
