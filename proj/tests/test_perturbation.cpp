#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "dimer/exactdiag.hpp"
#include "dimer/perturbation.hpp"

using namespace dimer;

namespace {
SystemSpec chain(int n, double alpha, double b, double jy = 0.5, double jz = 0.0) {
  SystemSpec s;
  s.topology = Topology::DimerChain;
  s.n_pairs = n;
  s.Jx = 1.0;
  s.Jy = jy;
  s.Jz = jz;
  s.B = b;
  s.alphas = {alpha};
  return s;
}
}  // namespace

TEST_CASE("amplitudes vanish with the inter-dimer coupling") {
  PerturbedGS p = residual_amplitudes(chain(4, 0.0, 0.3));
  CHECK(p.a.norm() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(p.norm_sq == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("perturbed densities are valid states") {
  for (double b : {0.1, 0.15, 0.6, 0.9}) {
    PerturbedGS p = residual_amplitudes(chain(6, 0.1, b));
    for (Density rho :
         {perturbed_cluster_density(p), perturbed_cross_pair_density(p)}) {
      CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
      Eigen::SelfAdjointEigenSolver<Density> es(rho);
      CHECK(es.eigenvalues().minCoeff() > -1e-10);
    }
  }
}

TEST_CASE("cluster density approaches the exact pair state") {
  // small ring, weak inter-dimer coupling: the corrected cluster density
  // should track the exact reduced density closely outside the window
  for (double b : {0.15, 0.6}) {
    SystemSpec s = chain(4, 0.1, b);
    Density pert = perturbed_cluster_density(s);
    GSObservables g = gs_observables(s);
    Density exact = partial_trace(g.state, 8, {0, 1});
    const double sp = entropy(pert), se = entropy(exact);
    CHECK(std::abs(sp - se) / se < 0.15);
    CHECK(fidelity(pert, exact) > 0.999);
  }
}

TEST_CASE("cross-pair density reproduces the weak-bond concurrence") {
  SystemSpec s = chain(4, 0.1, 0.6);
  Density pert = perturbed_cross_pair_density(s);
  GSObservables g = gs_observables(s);
  Density exact = partial_trace(g.state, 8, {1, 2});
  CHECK(std::abs(concurrence(pert) - concurrence(exact)) < 0.002);
}

TEST_CASE("two-pair ring wrap terms keep the density consistent") {
  SystemSpec s = chain(2, 0.1, 0.6);
  PerturbedGS p = residual_amplitudes(s);
  CHECK(p.cluster_pairs == 1);
  Density rho = perturbed_cluster_density(p);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
}

TEST_CASE("excitation band matches the dispersion closed form") {
  // XY chain: E_1(k) = eps1 - eps0 - alpha (J+ + J-^2/sqrt(B^2+J-^2)) cos(2 pi k/n)
  const double b = 0.6, alpha = 0.1, jm = 0.125, jp = 0.375;
  SystemSpec s = chain(4, alpha, b);
  const double hop = jp + jm * jm / std::sqrt(b * b + jm * jm);
  for (int k = 0; k < 4; ++k) {
    auto band = excitation_band(s, k);
    PairSpectrum ps = pair_spectrum(s, 0.0);
    const double expected =
        ps.energies(1) - ps.energies(0) - alpha * hop * std::cos(M_PI * k / 2);
    CHECK(band[0] == doctest::Approx(expected).epsilon(1e-9));
  }
  // the k and n-k branches coincide
  CHECK(excitation_band(s, 1)[0] ==
        doctest::Approx(excitation_band(s, 3)[0]).epsilon(1e-13));
}

TEST_CASE("band agrees with exact excitation energies outside the window") {
  SystemSpec s = chain(4, 0.1, 0.6);
  std::vector<double> band;
  for (int k = 0; k < 4; ++k) band.push_back(excitation_band(s, k)[0]);
  std::sort(band.begin(), band.end());
  auto p = lowest_states(s, +1, 5);
  auto m = lowest_states(s, -1, 5);
  std::vector<double> all;
  for (double e : p.energies) all.push_back(e);
  for (double e : m.energies) all.push_back(e);
  std::sort(all.begin(), all.end());
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(band[i] - (all[i + 1] - all[0])) < 0.02);
}

TEST_CASE("band is refused in the degenerate window") {
  CHECK_THROWS_AS(excitation_band(chain(4, 0.1, 0.35), 0),
                  std::invalid_argument);
}
