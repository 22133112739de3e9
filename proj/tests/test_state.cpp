#include <cmath>
#include <numbers>

#include "doctest.h"

#include "gmix/state.hpp"
#include "gmix/validation.hpp"
#include "support/fock_oracle.hpp"

using gmix::SingleModeCM;
using gmix::UniformRng;
using gmix::make_cm;

namespace {

constexpr double pi = std::numbers::pi;

SingleModeCM random_state(UniformRng& rng, double r_max = 2.0,
                          double n_max = 2.0) {
  return make_cm({rng.next(0.0, r_max), rng.next(0.0, pi),
                  rng.next(0.0, n_max)});
}

}  // namespace

TEST_CASE("make_cm: vacuum and thermal diagonals") {
  const SingleModeCM vac = make_cm({0.0, 0.0, 0.0});
  CHECK(vac.xx == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(vac.pp == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(vac.xp == 0.0);

  // Thermal state with n photons: (1/2 + n) * I.
  const SingleModeCM th = make_cm({0.0, 0.3, 1.0});
  CHECK(th.xx == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(th.pp == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(std::abs(th.xp) < 1e-15);
}

TEST_CASE("make_cm: orientation of the squeezed quadrature") {
  // theta = 0 anti-squeezes x; theta = pi/2 anti-squeezes p.
  const SingleModeCM cx = make_cm({0.92, 0.0, 0.0});
  CHECK(cx.xx == doctest::Approx(std::exp(1.84) / 2.0).epsilon(1e-14));
  CHECK(cx.pp == doctest::Approx(std::exp(-1.84) / 2.0).epsilon(1e-14));
  CHECK(std::abs(cx.xp) < 1e-15);

  const SingleModeCM cp = make_cm({0.92, pi / 2.0, 0.0});
  CHECK(cp.xx == doctest::Approx(0.079408713053460339).epsilon(1e-14));
  CHECK(cp.pp == doctest::Approx(3.1482691305133286).epsilon(1e-14));
}

TEST_CASE("make_cm: determinant depends only on the thermal content") {
  UniformRng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double n = rng.next(0.0, 2.0);
    const SingleModeCM cm = make_cm({rng.next(0.0, 2.0), rng.next(0.0, pi), n});
    const double expected = 0.25 * (1.0 + 2.0 * n) * (1.0 + 2.0 * n);
    CHECK(cm.det() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(gmix::check_physical(cm));
  }
}

TEST_CASE("make_cm: rejects negative parameters") {
  CHECK_THROWS_AS(make_cm({-0.1, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_cm({0.5, 0.0, -0.2}), std::invalid_argument);
  CHECK_THROWS_AS(make_cm({0.5, std::nan(""), 0.0}), std::invalid_argument);
}

TEST_CASE("check_physical: boundary behavior") {
  CHECK(gmix::check_physical({0.5, 0.0, 0.5}));
  CHECK_FALSE(gmix::check_physical({0.3, 0.0, 0.3}));  // det < 1/4
  CHECK_FALSE(gmix::check_physical({-0.5, 0.0, -0.5}));
  // Within tolerance just below the bound.
  CHECK(gmix::check_physical({0.5, 0.0, 0.5 - 1e-13}, 1e-12));
}

TEST_CASE("purity: closed forms and clamping") {
  CHECK(gmix::purity({0.5, 0.0, 0.5}) == 1.0);
  // Thermal state: mu = 1/(1+2n).
  CHECK(gmix::purity(make_cm({0.0, 0.0, 1.0})) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  // Purity is invariant under squeezing and rotation.
  UniformRng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const double n = rng.next(0.0, 2.0);
    const SingleModeCM cm = make_cm({rng.next(0.0, 2.0), rng.next(0.0, pi), n});
    CHECK(gmix::purity(cm) ==
          doctest::Approx(1.0 / (1.0 + 2.0 * n)).epsilon(1e-12));
    CHECK(gmix::purity(cm) <= 1.0);  // clamp: never above 1 despite rounding
  }
  CHECK_THROWS_AS(gmix::purity({0.3, 0.0, 0.3}), gmix::physicality_error);
}

TEST_CASE("fidelity: identity, symmetry, range") {
  UniformRng rng(13);
  for (int i = 0; i < 10000; ++i) {
    const SingleModeCM a = random_state(rng);
    const SingleModeCM b = random_state(rng);
    const double f_ab = gmix::fidelity(a, b);
    CHECK(f_ab > 0.0);
    CHECK(f_ab <= 1.0);
    CHECK(f_ab == doctest::Approx(gmix::fidelity(b, a)).epsilon(1e-13));
    CHECK(gmix::fidelity(a, a) == 1.0);
  }
}

TEST_CASE("fidelity: known values") {
  // Orthogonally squeezed pure states: F = 1/cosh(2r).
  for (double r : {0.26, 0.57, 0.92, 1.5}) {
    const double f = gmix::fidelity(make_cm({r, 0.0, 0.0}),
                                    make_cm({r, pi / 2.0, 0.0}));
    CHECK(f == doctest::Approx(1.0 / std::cosh(2.0 * r)).epsilon(1e-13));
  }
  // Vacuum vs thermal n=1: Delta = det(2I) = 4, delta = 0, F = 1/2.
  CHECK(gmix::fidelity(make_cm({0.0, 0.0, 0.0}), make_cm({0.0, 0.0, 1.0})) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("fidelity: equals 1 only for identical covariance matrices") {
  UniformRng rng(14);
  for (int i = 0; i < 10000; ++i) {
    const SingleModeCM a = random_state(rng);
    SingleModeCM b = a;
    b.xx *= 1.0 + 1e-6;  // small but resolvable perturbation
    CHECK(gmix::fidelity(a, b) < 1.0);
  }
}

TEST_CASE("fidelity: rejects non-physical inputs") {
  const SingleModeCM bad{0.3, 0.0, 0.3};
  const SingleModeCM good{0.5, 0.0, 0.5};
  CHECK_THROWS_AS(gmix::fidelity(bad, good), gmix::physicality_error);
  CHECK_THROWS_AS(gmix::fidelity(good, bad), gmix::physicality_error);
}

TEST_CASE("fidelity: agrees with the Fock-space Uhlmann computation") {
  // Frozen random mixed pairs; expected values computed independently by
  // building the truncated density matrices and evaluating
  // (Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2.
  struct Case {
    SingleModeCM a, b;
    double expected;
  };
  const Case cases[] = {
      {{0.74677510266645886, 0.98665978011270039, 2.9241101837175161},
       {3.2073879525995057, 2.1670924676745478, 1.682655227596666},
       0.5414827290597799},
      {{0.49035701439214879, -0.36865935267429767, 3.3928859610828743},
       {1.4096045320842863, 0.20152061271835858, 0.34353206158156635},
       0.54220628698483464},
      {{1.5669088016920008, -1.9855785977016025, 3.4374650461368907},
       {1.7190892252412748, 0.07846563655823667, 1.1962796503145048},
       0.64064998570065834},
      {{1.5241695235402648, 0.12671135667878772, 0.35049381908385135},
       {0.58561685569332134, 0.54085750500917096, 1.1208993651560837},
       0.7586862117415869},
  };
  for (const Case& c : cases) {
    CHECK(gmix::fidelity(c.a, c.b) ==
          doctest::Approx(c.expected).epsilon(1e-13));
  }

  // Recompute a few cases in-process: truncated Fock representation with a
  // second-moment self-check, then the Uhlmann trace formula.
  constexpr int dim = 140;
  UniformRng rng(15);
  for (int i = 0; i < 3; ++i) {
    const SingleModeCM a = random_state(rng, 0.9, 1.0);
    const SingleModeCM b = random_state(rng, 0.9, 1.0);
    double err_a = 0.0, err_b = 0.0;
    const auto rho_a = gmix_test::gaussian_density(a, dim, &err_a);
    const auto rho_b = gmix_test::gaussian_density(b, dim, &err_b);
    REQUIRE(err_a < 1e-8);  // the representation reproduces its own moments
    REQUIRE(err_b < 1e-8);
    const double f_fock = gmix_test::uhlmann_fidelity(rho_a, rho_b);
    CHECK(gmix::fidelity(a, b) == doctest::Approx(f_fock).epsilon(5e-7));
  }
}
