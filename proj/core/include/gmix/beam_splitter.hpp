#pragma once

#include "gmix/state.hpp"

namespace gmix {

/// Plain 2x2 real matrix (row-major), used for the cross-correlation block
/// of a two-mode covariance matrix.
struct Mat2 {
  double m00 = 0.0;
  double m01 = 0.0;
  double m10 = 0.0;
  double m11 = 0.0;

  double det() const { return m00 * m11 - m01 * m10; }
};

/// Two-mode covariance matrix in block form
///
///     Sigma = [ A  C  ]
///             [ C^T B ]
///
/// with A = a_block, B = b_block (both symmetric 2x2) and C = c_block.
struct TwoModeCM {
  SingleModeCM a_block;
  SingleModeCM b_block;
  Mat2 c_block;
};

/// Coefficient used for the cross block of the beam-splitter output.
///
/// Symplectic uses sqrt(tau*(1-tau)), which follows from conjugating the
/// input CM with the orthogonal beam-splitter matrix and preserves
/// det(Sigma_out) = det(sigma_c)*det(sigma_d).  Literal uses tau*(1-tau)
/// instead; it breaks that determinant identity for tau outside {0, 1/2, 1}
/// and is kept only as a negative control.
enum class OffDiagForm { Symplectic, Literal };

/// Mixes two single-mode states at a beam splitter of transmissivity tau:
///
///     A = tau*sigma_c + (1-tau)*sigma_d
///     B = tau*sigma_d + (1-tau)*sigma_c
///     C = sqrt(tau*(1-tau)) * (sigma_d - sigma_c)
///
/// Throws std::invalid_argument if tau is outside [0, 1] and
/// physicality_error if either input CM is non-physical.
TwoModeCM mix(const SingleModeCM& sigma_c, const SingleModeCM& sigma_d,
              double tau, OffDiagForm form = OffDiagForm::Symplectic);

}  // namespace gmix
