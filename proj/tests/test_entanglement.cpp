#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "dimer/entanglement.hpp"

using namespace dimer;

namespace {
StateVec bell() {
  StateVec v = StateVec::Zero(4);
  v(1) = v(2) = 1.0 / std::sqrt(2.0);
  return v;
}
Density pure(const StateVec& v) { return v * v.adjoint(); }
}  // namespace

TEST_CASE("concurrence: Bell state 1, product state 0") {
  CHECK(concurrence(pure(bell())) == doctest::Approx(1.0).epsilon(1e-12));
  StateVec up = StateVec::Zero(4);
  up(3) = 1.0;
  CHECK(concurrence(pure(up)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(concurrence(Density::Identity(4, 4) / 4.0) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("entropy: pure 0 bits, maximally mixed log2(d) bits") {
  CHECK(entropy(pure(bell())) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(entropy(Density::Identity(4, 4) / 4.0) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(entropy(Density::Identity(2, 2) / 2.0, std::exp(1.0)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(entropy(pure(bell())) >= 0.0);
}

TEST_CASE("fidelity: identity on equal states, overlap on pure states") {
  Density rho = pure(bell());
  CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));
  StateVec other = StateVec::Zero(4);
  other(1) = 1.0;
  // pure-state fidelity reduces to |<a|b>|
  CHECK(fidelity(rho, pure(other)) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("partial trace: bit convention, site 0 least significant") {
  // |psi> = |up at site 1, down at site 0> = index 2
  StateVec v = StateVec::Zero(4);
  v(2) = 1.0;
  Density r0 = partial_trace(v, 2, {0});
  CHECK(std::abs(r0(0, 0) - 1.0) < 1e-14);  // site 0 down
  Density r1 = partial_trace(v, 2, {1});
  CHECK(std::abs(r1(1, 1) - 1.0) < 1e-14);  // site 1 up

  // kept pair ordered first-site-most-significant: {|dd>,|du>,|ud>,|uu>}
  Density r01 = partial_trace(v, 2, {0, 1});
  CHECK(std::abs(r01(1, 1) - 1.0) < 1e-14);  // |du> = down at 0? no: s0 s1 = d,u
}

TEST_CASE("partial trace of a Bell pair inside a larger register") {
  // Bell pair on sites (0, 2) of 3 sites, site 1 fixed up.
  StateVec v = StateVec::Zero(8);
  v(0b010) = 1.0 / std::sqrt(2.0);  // site1 up, sites 0,2 down
  v(0b111) = 1.0 / std::sqrt(2.0);  // all up
  Density r = partial_trace(v, 3, {0, 2});
  CHECK(entropy(r) == doctest::Approx(0.0).epsilon(1e-10));  // still pure
  CHECK(concurrence(r) == doctest::Approx(1.0).epsilon(1e-12));
  Density r0 = partial_trace(v, 3, {0});
  CHECK(std::abs(r0(0, 0) - 0.5) < 1e-14);
  // density overload agrees with the state overload
  Density full = pure(v);
  CHECK((partial_trace(full, 3, {0, 2}) - r).norm() < 1e-14);
}

TEST_CASE("pair state normalization and limits") {
  for (double t : {0.0, 0.7, M_PI / 2, 2.5, M_PI})
    for (double f : {-1.2, 0.0, 0.9}) {
      CHECK(pair_state(t, f).norm() == doctest::Approx(1.0).epsilon(1e-14));
    }
  Eigen::Vector4d dimer = pair_state(M_PI, 0.0);
  CHECK(dimer(1) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(dimer(2) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
  Eigen::Vector4d aligned = pair_state(0.0, 0.4);
  CHECK(aligned(0) == doctest::Approx(std::cos(0.2)).epsilon(1e-14));
  CHECK(aligned(3) == doctest::Approx(std::sin(0.2)).epsilon(1e-14));
}

TEST_CASE("parity restoration: rank-2 mixture with overlap product") {
  const double t = 2.0, f = 0.5;
  std::vector<Eigen::Vector4d> family(4, pair_state(t, f));
  RestoredPair r = restore_parity(family);
  CHECK(r.overlap ==
        doctest::Approx(std::pow(std::cos(t), 4)).epsilon(1e-12));
  CHECK(r.p_plus + r.p_minus == doctest::Approx(1.0).epsilon(1e-12));

  Density rho = restored_cluster_density(t, f, 4, OverlapMode::Neglect);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
  Eigen::SelfAdjointEigenSolver<Density> es(rho);
  CHECK(es.eigenvalues().minCoeff() > -1e-12);
  // exactly two nonzero eigenvalues: cos^2(t/2) and sin^2(t/2)
  CHECK(es.eigenvalues()(0) < 1e-12);
  CHECK(es.eigenvalues()(1) < 1e-12);
  CHECK(es.eigenvalues()(3) ==
        doctest::Approx(std::max(std::pow(std::cos(t / 2), 2),
                                 std::pow(std::sin(t / 2), 2)))
            .epsilon(1e-10));
}

TEST_CASE("keep-overlap cluster density stays a valid state") {
  for (int n : {2, 4, 7}) {
    Density rho = restored_cluster_density(1.3, 0.4, n, OverlapMode::Keep);
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Density> es(rho);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
    // keep and neglect converge as the ring grows (overlap ~ cos^n)
    if (n == 7) {
      Density neg = restored_cluster_density(1.3, 0.4, n, OverlapMode::Neglect);
      CHECK((rho - neg).norm() < 0.02);
    }
  }
}

TEST_CASE("restored pair concurrence closed form") {
  // the physical branch has phi >= 0 (J- >= 0), where the closed form holds
  for (double t : {0.5, 1.4, 2.8})
    for (double f : {0.0, 0.3, 0.6}) {
      Concurrence12 c = gmf_concurrence12(t, f);
      const double c2 = std::pow(std::cos(t / 2), 2);
      CHECK(c.value ==
            doctest::Approx(std::abs(c2 * (1 + std::sin(f)) - 1)).epsilon(1e-12));
      Density rho = gmf_reduced_states(t, f).rho12;
      CHECK(concurrence(rho) == doctest::Approx(c.value).epsilon(1e-7));
    }
}

TEST_CASE("restored single-spin state is diagonal with closed-form weights") {
  const double t = 1.1, f = 0.3;
  GMFReducedStates r = gmf_reduced_states(t, f);
  const double c2 = std::pow(std::cos(t / 2), 2);
  CHECK(r.rho1.p_minus ==
        doctest::Approx((1 + c2 * std::cos(f)) / 2).epsilon(1e-12));
  CHECK(r.rho1.p_plus + r.rho1.p_minus == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(r.rho23.trace().real() - 1.0) < 1e-12);
  Eigen::SelfAdjointEigenSolver<Density> es(r.rho23);
  CHECK(es.eigenvalues().minCoeff() > -1e-12);
}

TEST_CASE("single-spin mean-field restored states are separable") {
  MFRestoredStates r = mf_restored_states(0.9);
  CHECK(concurrence(r.rho12) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(r.rho12.trace().real() - 1.0) < 1e-12);
  CHECK(r.rho1.p_minus == doctest::Approx((1 + std::cos(0.9)) / 2).epsilon(1e-12));
}
