#include "gmix/validation.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gmix/beam_splitter.hpp"
#include "gmix/criterion.hpp"
#include "gmix/ppt.hpp"

namespace gmix {

EquivalenceReport verify_criterion_vs_ppt(long long trials, std::uint64_t seed,
                                          double band,
                                          const PairSampleRanges& ranges) {
  if (trials < 1) {
    throw std::invalid_argument("verify_criterion_vs_ppt: need >= 1 trial");
  }
  if (!(band >= 0.0)) {
    throw std::invalid_argument("verify_criterion_vs_ppt: band must be >= 0");
  }

  UniformRng rng(seed);
  const auto draw_state = [&rng, &ranges] {
    return make_cm({rng.next(0.0, ranges.r_max),
                    rng.next(0.0, std::numbers::pi),
                    rng.next(0.0, ranges.n_max)});
  };

  EquivalenceReport report;
  report.trials = trials;
  report.min_abs_margin = std::numeric_limits<double>::infinity();

  for (long long i = 0; i < trials; ++i) {
    const SingleModeCM sigma_c = draw_state();
    const SingleModeCM sigma_d = draw_state();
    const double tau = rng.next(ranges.tau_lo, ranges.tau_hi);

    const auto verdict = assess(sigma_c, sigma_d, tau);
    const PPTReport oracle = ppt_check(mix(sigma_c, sigma_d, tau));

    const double abs_margin = std::abs(verdict->margin);
    report.min_abs_margin = std::min(report.min_abs_margin, abs_margin);

    if (verdict->entangled_predicted != oracle.entangled) {
      report.worst_mismatch_margin =
          std::max(report.worst_mismatch_margin, abs_margin);
      if (abs_margin < band) {
        ++report.boundary_cases;
      } else {
        ++report.disagreements;
      }
    }
  }
  return report;
}

}  // namespace gmix
