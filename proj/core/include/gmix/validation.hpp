#pragma once

#include <cstdint>
#include <random>

#include "gmix/state.hpp"

namespace gmix {

/// Deterministic uniform-double generator: mt19937_64 mapped to [0, 1) via
/// the top 53 bits, so streams are reproducible across platforms for a
/// given seed.
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double next() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::mt19937_64 gen_;
};

/// Sampling ranges for the randomized criterion-vs-oracle comparison:
/// rotated squeezed thermal states with r in [0, r_max], n_state in
/// [0, n_max], theta in [0, pi), mixed at tau in [tau_lo, tau_hi].
struct PairSampleRanges {
  double r_max = 2.0;
  double n_max = 2.0;
  double tau_lo = 0.05;
  double tau_hi = 0.95;
};

/// Result of the randomized equivalence run.
struct EquivalenceReport {
  long long trials = 0;
  /// Verdict mismatches with |f_cd - f_th| >= band: genuine failures of the
  /// iff claim.  Zero is the expected outcome.
  long long disagreements = 0;
  /// Verdict mismatches inside the band, where floating point cannot
  /// resolve which side of the threshold the fidelity falls on.
  long long boundary_cases = 0;
  /// Largest |f_cd - f_th| seen among all raw verdict mismatches.
  double worst_mismatch_margin = 0.0;
  /// Smallest |f_cd - f_th| seen across all trials (how close the sampler
  /// gets to the decision boundary).
  double min_abs_margin = 0.0;
};

/// Draws `trials` random (sigma_c, sigma_d, tau) triples, evaluates the
/// fidelity criterion and the partial-transpose oracle on the mixed output,
/// and tallies verdict mismatches outside the |f_cd - f_th| < band boundary
/// region.  Deterministic for a fixed seed.
EquivalenceReport verify_criterion_vs_ppt(long long trials, std::uint64_t seed,
                                          double band = 1e-9,
                                          const PairSampleRanges& ranges = {});

}  // namespace gmix
