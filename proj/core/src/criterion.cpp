#include "gmix/criterion.hpp"

#include <algorithm>
#include <cmath>

namespace gmix {

std::optional<double> threshold(double mu_c, double mu_d, double tau) {
  if (!std::isfinite(mu_c) || mu_c <= 0.0 || mu_c > 1.0 ||
      !std::isfinite(mu_d) || mu_d <= 0.0 || mu_d > 1.0) {
    throw std::invalid_argument("threshold: purities must lie in (0, 1]");
  }
  if (!std::isfinite(tau) || tau < 0.0 || tau > 1.0) {
    throw std::invalid_argument("threshold: transmissivity must lie in [0, 1]");
  }
  if (tau == 0.0 || tau == 1.0) {
    return std::nullopt;  // no mixing takes place; the test does not apply
  }

  // g- vanishes analytically when either state is pure; clamp the rounding
  // residue so the square roots stay real.
  const double g_minus =
      std::max((1.0 - mu_c * mu_c) * (1.0 - mu_d * mu_d), 0.0);
  const double g_plus = (1.0 + mu_c * mu_c) * (1.0 + mu_d * mu_d);
  const double q = 4.0 * tau * (1.0 - tau);

  const double denom =
      std::sqrt(g_minus + q * g_plus) - std::sqrt(q * g_minus);
  return 4.0 * mu_c * mu_d * std::sqrt(tau * (1.0 - tau)) / denom;
}

std::optional<CriterionVerdict> assess(const SingleModeCM& sigma_c,
                                       const SingleModeCM& sigma_d,
                                       double tau) {
  const double f_cd = fidelity(sigma_c, sigma_d);
  const auto f_th = threshold(purity(sigma_c), purity(sigma_d), tau);
  if (!f_th) return std::nullopt;

  CriterionVerdict verdict;
  verdict.f_cd = f_cd;
  verdict.f_th = *f_th;
  verdict.entangled_predicted = f_cd < *f_th;
  verdict.margin = *f_th - f_cd;
  return verdict;
}

double critical_transmission_asymptote(double n_th) {
  if (!std::isfinite(n_th) || n_th < 0.0) {
    throw std::invalid_argument(
        "critical_transmission_asymptote: bath occupation must be >= 0");
  }
  return 1.0 - 1.0 / std::sqrt(1.0 + 2.0 * n_th);
}

std::optional<double> find_largest_crossing(
    const std::function<double(double)>& f, double lo, double hi,
    int grid_points, double tol) {
  if (!(lo < hi) || grid_points < 2) {
    throw std::invalid_argument("find_largest_crossing: need lo < hi and >= 2 points");
  }

  const double step = (hi - lo) / (grid_points - 1);
  std::optional<double> best;

  double x_prev = lo;
  double f_prev = f(lo);
  for (int i = 1; i < grid_points; ++i) {
    const double x = (i == grid_points - 1) ? hi : lo + i * step;
    const double fx = f(x);

    if (fx == 0.0) {
      best = x;
    } else if (f_prev == 0.0) {
      // exact zero already recorded at the previous node
    } else if ((f_prev < 0.0) != (fx < 0.0)) {
      // Bracketed sign change: bisect to the requested width.
      double a = x_prev, b = x;
      bool a_neg = f_prev < 0.0;
      while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if ((fm < 0.0) == a_neg) {
          a = mid;
        } else {
          b = mid;
        }
      }
      best = 0.5 * (a + b);
    }

    x_prev = x;
    f_prev = fx;
  }
  return best;
}

}  // namespace gmix
