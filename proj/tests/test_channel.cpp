#include <cmath>
#include <numbers>

#include "doctest.h"

#include "gmix/channel.hpp"
#include "gmix/validation.hpp"

using gmix::ChannelSpec;
using gmix::SingleModeCM;
using gmix::UniformRng;
using gmix::make_cm;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("channel_valid: parameter ranges") {
  CHECK(gmix::channel_valid({1.0, 0.0, {0.0, 0.0}}));
  CHECK(gmix::channel_valid({0.0, 2.0, {0.0, 0.0}}));
  // |m|^2 <= n(n+1): for n = 1 the bound is sqrt(2).
  CHECK(gmix::channel_valid({0.5, 1.0, {std::sqrt(2.0) - 1e-12, 0.0}}));
  CHECK_FALSE(gmix::channel_valid({0.5, 1.0, {1.5, 0.0}}));
  CHECK_FALSE(gmix::channel_valid({-0.1, 0.0, {0.0, 0.0}}));
  CHECK_FALSE(gmix::channel_valid({1.1, 0.0, {0.0, 0.0}}));
  CHECK_FALSE(gmix::channel_valid({0.5, -0.2, {0.0, 0.0}}));
}

TEST_CASE("asymptotic_cm: thermal and squeezed baths") {
  const SingleModeCM th = gmix::asymptotic_cm({0.3, 1.0, {0.0, 0.0}});
  CHECK(th.xx == 1.5);
  CHECK(th.pp == 1.5);
  CHECK(th.xp == 0.0);

  const SingleModeCM sq = gmix::asymptotic_cm({0.3, 1.0, {0.5, 0.25}});
  CHECK(sq.xx == 2.0);
  CHECK(sq.pp == 1.0);
  CHECK(sq.xp == 0.25);

  CHECK_THROWS_AS(gmix::asymptotic_cm({0.3, 0.0, {1.0, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("evolve: exact entrywise interpolation toward the bath") {
  UniformRng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const SingleModeCM cm =
        make_cm({rng.next(0.0, 2.0), rng.next(0.0, pi), rng.next(0.0, 2.0)});
    const ChannelSpec ch{rng.next(), rng.next(0.0, 2.0), {0.0, 0.0}};
    const SingleModeCM out = gmix::evolve(cm, ch);
    const SingleModeCM inf = gmix::asymptotic_cm(ch);
    const double t = ch.transmission;
    // The output is the literal convex combination, bit for bit.
    CHECK(out.xx == t * cm.xx + (1.0 - t) * inf.xx);
    CHECK(out.xp == t * cm.xp + (1.0 - t) * inf.xp);
    CHECK(out.pp == t * cm.pp + (1.0 - t) * inf.pp);
  }
}

TEST_CASE("evolve: known value for a half-attenuated squeezed state") {
  const SingleModeCM out =
      gmix::evolve(make_cm({0.5, 0.0, 0.0}), {0.5, 0.0, {0.0, 0.0}});
  CHECK(out.xx == doctest::Approx(0.92957045711476127).epsilon(1e-15));
  CHECK(out.pp == doctest::Approx(0.34196986029286058).epsilon(1e-15));
  CHECK(out.xp == 0.0);
}

TEST_CASE("evolve: physicality is preserved") {
  UniformRng rng(22);
  for (int i = 0; i < 100000; ++i) {
    const SingleModeCM cm =
        make_cm({rng.next(0.0, 2.0), rng.next(0.0, pi), rng.next(0.0, 2.0)});
    const double n = rng.next(0.0, 2.0);
    const double m_mag = rng.next() * std::sqrt(n * (n + 1.0));
    const double m_arg = rng.next(0.0, 2.0 * pi);
    const ChannelSpec ch{rng.next(), n,
                         {m_mag * std::cos(m_arg), m_mag * std::sin(m_arg)}};
    const SingleModeCM out = gmix::evolve(cm, ch);
    CHECK(out.det() >= 0.25 - 1e-12);
  }
}

TEST_CASE("evolve: semigroup in the transmission for a fixed bath") {
  UniformRng rng(23);
  for (int i = 0; i < 10000; ++i) {
    const SingleModeCM cm =
        make_cm({rng.next(0.0, 2.0), rng.next(0.0, pi), rng.next(0.0, 2.0)});
    const double n = rng.next(0.0, 2.0);
    const double t1 = rng.next();
    const double t2 = rng.next();
    const SingleModeCM two_step =
        gmix::evolve(gmix::evolve(cm, {t1, n, {0.0, 0.0}}), {t2, n, {0.0, 0.0}});
    const SingleModeCM one_step = gmix::evolve(cm, {t1 * t2, n, {0.0, 0.0}});
    CHECK(two_step.xx == doctest::Approx(one_step.xx).epsilon(1e-12));
    CHECK(two_step.xp == doctest::Approx(one_step.xp).epsilon(1e-12));
    CHECK(two_step.pp == doctest::Approx(one_step.pp).epsilon(1e-12));
  }
}

TEST_CASE("evolve: contract errors") {
  const SingleModeCM vac = make_cm({0.0, 0.0, 0.0});
  CHECK_THROWS_AS(gmix::evolve(vac, {1.5, 0.0, {0.0, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gmix::evolve({0.3, 0.0, 0.3}, {0.5, 0.0, {0.0, 0.0}}),
                  gmix::physicality_error);
}

TEST_CASE("thermal_photons_from_purity: closed forms and monotonicity") {
  CHECK(gmix::thermal_photons_from_purity(make_cm({0.0, 0.0, 0.0})) == 0.0);
  CHECK(gmix::thermal_photons_from_purity({1.5, 0.0, 1.5}) ==
        doctest::Approx(1.0).epsilon(1e-14));

  // Attenuating a pure squeezed state leaves a squeezed thermal state whose
  // thermal content grows as the transmission drops (monotone down to
  // t = 1/2, where the mixedness of a loss-only channel peaks).
  const SingleModeCM pure = make_cm({0.26, 0.0, 0.0});
  double prev = gmix::thermal_photons_from_purity(pure);
  CHECK(prev == 0.0);
  for (double t : {0.9, 0.8, 0.7, 0.6, 0.5}) {
    const double n =
        gmix::thermal_photons_from_purity(gmix::evolve(pure, {t, 0.0, {0.0, 0.0}}));
    CHECK(n > prev);
    prev = n;
  }
  // Strictly inside (0, 1) the attenuated state is genuinely mixed.
  for (double t : {0.1, 0.3, 0.99}) {
    CHECK(gmix::thermal_photons_from_purity(
              gmix::evolve(pure, {t, 0.0, {0.0, 0.0}})) > 0.0);
  }
}
