#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dimer/meanfield.hpp"

using namespace dimer;

namespace {
SystemSpec chain(double alpha, double b, double jy = 0.5, double jz = 0.0) {
  SystemSpec s;
  s.topology = Topology::DimerChain;
  s.n_pairs = 4;
  s.Jx = 1.0;
  s.Jy = jy;
  s.Jz = jz;
  s.B = b;
  s.alphas = {alpha};
  return s;
}
}  // namespace

TEST_CASE("critical field and tilt angle of the single-spin mean field") {
  // B_c = (Jx - Jz)(1 + alpha)/2; below it cos(theta) = B/B_c.
  MFSolution low = mf_solve(chain(0.1, 0.2));
  CHECK(low.B_c == doctest::Approx(0.55).epsilon(1e-14));
  CHECK(std::cos(low.theta) == doctest::Approx(0.2 / 0.55).epsilon(1e-12));
  CHECK(low.parity_broken);
  CHECK(low.degenerate);

  MFSolution high = mf_solve(chain(0.1, 0.8));
  CHECK(high.theta == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(!high.parity_broken);
}

TEST_CASE("mean-field energy per pair") {
  // E = -B cos(theta) - (1+alpha)(Jx sin^2 + Jz cos^2)/4
  const double a = 0.1, b = 0.2;
  MFSolution sol = mf_solve(chain(a, b));
  const double ct = b / 0.55, st2 = 1 - ct * ct;
  CHECK(sol.energy_per_pair ==
        doctest::Approx(-b * ct - (1 + a) * st2 / 4).epsilon(1e-12));
  // aligned phase: E = -B exactly (Jz = 0)
  CHECK(mf_solve(chain(0.1, 0.9)).energy_per_pair ==
        doctest::Approx(-0.9).epsilon(1e-14));
}

TEST_CASE("tilted phase absent for Jz >= Jx") {
  MFSolution sol = mf_solve(chain(0.1, 0.2, 0.5, 1.5));
  CHECK(sol.no_parity_phase);
  CHECK(sol.theta == 0.0);
}

TEST_CASE("solver requires transverse anisotropy") {
  CHECK_THROWS_AS(mf_solve(chain(0.1, 0.2, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(mf_solve(chain(0.1, 0.2, -1.2)), std::invalid_argument);
}

TEST_CASE("factorizing field closed form") {
  // B_s = (1+alpha)/2 sqrt((Jx-Jz)(Jy-Jz))
  auto xy = factorizing_field(chain(0.1, 0.0));
  REQUIRE(xy.has_value());
  CHECK(xy->value == doctest::Approx(0.55 * std::sqrt(0.5)).epsilon(1e-14));
  CHECK(xy->ground_state);

  auto xyz = factorizing_field(chain(0.1, 0.0, 0.5, 0.2));
  REQUIRE(xyz.has_value());
  CHECK(xyz->value == doctest::Approx(0.55 * std::sqrt(0.8 * 0.3)).epsilon(1e-14));

  // (Jx-Jz)(Jy-Jz) < 0: no separable field at all
  CHECK(!factorizing_field(chain(0.1, 0.0, 0.5, 0.7)).has_value());

  // both factors negative: the separable state exists but is not a ground state
  auto excited = factorizing_field(chain(0.1, 0.0, 0.5, 1.4));
  REQUIRE(excited.has_value());
  CHECK(!excited->ground_state);
}
