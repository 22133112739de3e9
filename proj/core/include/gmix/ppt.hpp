#pragma once

#include "gmix/beam_splitter.hpp"

namespace gmix {

/// Verdict of the partial-transpose test on a two-mode covariance matrix.
struct PPTReport {
  /// Smallest symplectic eigenvalue of the partially transposed CM.
  double nu_minus = 0.0;
  /// max(0, -ln(2*nu_minus)); positive exactly when entangled.
  double log_negativity = 0.0;
  /// nu_minus < 1/2 (vacuum = I/2 convention).
  bool entangled = false;
};

/// Determinant of the full 4x4 two-mode CM, computed via the block formula
/// det(Sigma) = det(A) * det(B - C^T A^{-1} C) with a cofactor-expansion
/// fallback when A is near-singular (defensive only: physical A has
/// det A >= 1/4).
double det4(const TwoModeCM& cm);

/// Partial-transpose (Simon) separability test, necessary and sufficient for
/// 1x1-mode Gaussian states.  With Delta~ = det A + det B - 2*det C,
///
///     nu_minus^2 = (Delta~ - sqrt(Delta~^2 - 4*det Sigma)) / 2,
///
/// and the state is entangled iff nu_minus < 1/2.  Small negative
/// discriminants from rounding are clamped; beyond -1e-9 the input is
/// reported non-physical via physicality_error.
PPTReport ppt_check(const TwoModeCM& cm);

/// True iff cm is a physical two-mode CM: positive-definite diagonal blocks
/// and smallest symplectic eigenvalue (of cm itself, untransposed)
/// >= 1/2 - tol.
bool two_mode_physical(const TwoModeCM& cm, double tol = 1e-10) noexcept;

}  // namespace gmix
