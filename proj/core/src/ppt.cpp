#include "gmix/ppt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace gmix {

namespace {

constexpr double disc_slack = 1e-9;

using Mat4 = std::array<std::array<double, 4>, 4>;

Mat4 to_mat4(const TwoModeCM& cm) {
  const SingleModeCM& a = cm.a_block;
  const SingleModeCM& b = cm.b_block;
  const Mat2& c = cm.c_block;
  return {{{a.xx, a.xp, c.m00, c.m01},
           {a.xp, a.pp, c.m10, c.m11},
           {c.m00, c.m10, b.xx, b.xp},
           {c.m01, c.m11, b.xp, b.pp}}};
}

double det3(const Mat4& m, int r0, int r1, int r2, int c0, int c1, int c2) {
  return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
         m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
         m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
}

// Cofactor expansion along the first row; used only when det(A) is too
// small for the block formula.
double det4_cofactor(const Mat4& m) {
  return m[0][0] * det3(m, 1, 2, 3, 1, 2, 3) -
         m[0][1] * det3(m, 1, 2, 3, 0, 2, 3) +
         m[0][2] * det3(m, 1, 2, 3, 0, 1, 3) -
         m[0][3] * det3(m, 1, 2, 3, 0, 1, 2);
}

bool finite(const TwoModeCM& cm) {
  const Mat4 m = to_mat4(cm);
  for (const auto& row : m) {
    for (double v : row) {
      if (!std::isfinite(v)) return false;
    }
  }
  return true;
}

// Smallest symplectic eigenvalue from the two-mode invariants:
// nu^2 = (delta - sqrt(delta^2 - 4*det Sigma)) / 2.  Returns NaN when the
// discriminant or nu^2 is negative beyond slack.
double nu_min_from_invariants(double delta, double det_sigma, double slack) {
  double disc = delta * delta - 4.0 * det_sigma;
  if (disc < -slack) return std::numeric_limits<double>::quiet_NaN();
  disc = std::max(disc, 0.0);
  double nu_sq = 0.5 * (delta - std::sqrt(disc));
  if (nu_sq < -slack) return std::numeric_limits<double>::quiet_NaN();
  return std::sqrt(std::max(nu_sq, 0.0));
}

}  // namespace

double det4(const TwoModeCM& cm) {
  const SingleModeCM& a = cm.a_block;
  const SingleModeCM& b = cm.b_block;
  const Mat2& c = cm.c_block;

  const double det_a = a.det();
  if (std::abs(det_a) < 1e-12) {
    return det4_cofactor(to_mat4(cm));
  }

  // A^{-1} = adj(A)/det(A); then det(Sigma) = det(A) * det(B - C^T A^{-1} C).
  const double i00 = a.pp / det_a;
  const double i01 = -a.xp / det_a;
  const double i11 = a.xx / det_a;

  // D = A^{-1} C.
  const double d00 = i00 * c.m00 + i01 * c.m10;
  const double d01 = i00 * c.m01 + i01 * c.m11;
  const double d10 = i01 * c.m00 + i11 * c.m10;
  const double d11 = i01 * c.m01 + i11 * c.m11;

  // S = B - C^T D (symmetric up to rounding).
  const double s00 = b.xx - (c.m00 * d00 + c.m10 * d10);
  const double s01 = b.xp - (c.m00 * d01 + c.m10 * d11);
  const double s10 = b.xp - (c.m01 * d00 + c.m11 * d10);
  const double s11 = b.pp - (c.m01 * d01 + c.m11 * d11);

  return det_a * (s00 * s11 - s01 * s10);
}

PPTReport ppt_check(const TwoModeCM& cm) {
  if (!finite(cm)) {
    throw physicality_error("ppt_check: non-finite covariance matrix");
  }

  const double det_a = cm.a_block.det();
  const double det_b = cm.b_block.det();
  const double det_c = cm.c_block.det();
  const double det_sigma = det4(cm);

  // Partial transposition flips the sign of det C in the invariant.
  const double delta_pt = det_a + det_b - 2.0 * det_c;
  const double nu = nu_min_from_invariants(delta_pt, det_sigma, disc_slack);
  if (std::isnan(nu)) {
    throw physicality_error("ppt_check: invariants outside the physical range");
  }

  PPTReport report;
  report.nu_minus = nu;
  report.entangled = nu < vacuum_variance;
  report.log_negativity =
      nu > 0.0 ? std::max(0.0, -std::log(2.0 * nu))
               : std::numeric_limits<double>::infinity();
  return report;
}

bool two_mode_physical(const TwoModeCM& cm, double tol) noexcept {
  if (!finite(cm)) return false;
  // Diagonal blocks must be positive definite on their own.
  if (cm.a_block.xx <= 0.0 || cm.a_block.det() <= 0.0) return false;
  if (cm.b_block.xx <= 0.0 || cm.b_block.det() <= 0.0) return false;

  const double delta = cm.a_block.det() + cm.b_block.det() +
                       2.0 * cm.c_block.det();
  const double nu = nu_min_from_invariants(delta, det4(cm), tol);
  if (std::isnan(nu)) return false;
  return nu >= vacuum_variance - tol;
}

}  // namespace gmix
