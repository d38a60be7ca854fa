#include "dimer/perturbation.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace dimer {

namespace {

using cd = std::complex<double>;
using M4c = Eigen::Matrix4cd;

void check_supported(const SystemSpec& spec) {
  if (spec.topology != Topology::DimerChain || spec.boundary != Boundary::Cyclic)
    throw std::invalid_argument("perturbation requires a cyclic dimerized chain");
  if (spec.n_pairs < 2)
    throw std::invalid_argument("perturbation requires at least two clusters");
}

// two-spin operators s_site^mu in the product basis, site in {1, 2}
M4c spin_op(int site, int mu) {
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
  if (mu == 0) {
    s(0, 1) = s(1, 0) = 0.5;
  } else if (mu == 1) {
    s(0, 1) = cd(0, -0.5);
    s(1, 0) = cd(0, 0.5);
  } else {
    s(0, 0) = -0.5;
    s(1, 1) = 0.5;
  }
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  return site == 1 ? Eigen::kroneckerProduct(s, id).eval()
                   : Eigen::kroneckerProduct(id, s).eval();
}

}  // namespace

PairSpectrum pair_spectrum(const SystemSpec& spec, double mean_sx, double mean_sz) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(
      pair_hamiltonian(spec, mean_sx, mean_sz));
  return {es.eigenvalues(), es.eigenvectors()};
}

PerturbedGS residual_amplitudes(const SystemSpec& spec) {
  check_supported(spec);
  PerturbedGS p;
  p.n_pairs = spec.n_pairs;
  p.base = selfconsistent_iterate(spec, 0.3);
  double mz = 0.0;
  if (spec.Jz != 0.0) {
    // recover <s^z> of the converged pair state
    const Eigen::Vector4d v = pair_state(p.base.theta, p.base.phi);
    mz = (-v(0) * v(0) + v(3) * v(3)) / 2;
  }
  p.spectrum = pair_spectrum(spec, p.base.mean_sx, mz);
  const double alpha = effective_alpha(spec);
  const Eigen::Vector4d gs = p.spectrum.vectors.col(0);

  // <n| s_site^mu |0> for the three excited states
  Eigen::Matrix3cd m1, m2;  // rows n in {1,2,3}, cols mu
  for (int mu = 0; mu < 3; ++mu) {
    const Eigen::Vector4cd v1 = spin_op(1, mu) * gs.cast<cd>();
    const Eigen::Vector4cd v2 = spin_op(2, mu) * gs.cast<cd>();
    for (int n = 1; n <= 3; ++n) {
      const Eigen::Vector4cd vn = p.spectrum.vectors.col(n).cast<cd>();
      m1(n - 1, mu) = vn.dot(v1);
      m2(n - 1, mu) = vn.dot(v2);
    }
  }

  const double js[3] = {spec.Jx, spec.Jy, spec.Jz};
  auto amplitude = [&](const Eigen::Matrix3cd& left, const Eigen::Matrix3cd& right,
                       int n, int np) -> double {
    const double den = (p.spectrum.energies(n + 1) - p.spectrum.energies(0)) +
                       (p.spectrum.energies(np + 1) - p.spectrum.energies(0));
    if (std::abs(den) < 1e-12) {
      p.degenerate_skipped = true;
      return 0.0;
    }
    cd num = 0;
    for (int mu = 0; mu < 3; ++mu)
      num += alpha * js[mu] * left(n, mu) * right(np, mu);
    return num.real() / den;
  };

  p.a.setZero();
  for (int n = 0; n < 3; ++n)
    for (int np = 0; np < 3; ++np) {
      // bond couples the second spin of cluster k to the first of k+1
      double v = amplitude(m2, m1, n, np);
      if (spec.n_pairs == 2) v += amplitude(m1, m2, n, np);  // wrap bond
      p.a(n, np) = v;
    }
  p.cluster_pairs = spec.n_pairs == 2 ? 1 : spec.n_pairs;
  p.norm_sq = 1 + p.cluster_pairs * p.a.squaredNorm();
  return p;
}

Density perturbed_cluster_density(const PerturbedGS& pgs) {
  const int touching = pgs.n_pairs == 2 ? 1 : 2;
  Eigen::Matrix3d m = pgs.a * pgs.a.transpose();
  if (touching == 2) m += pgs.a.transpose() * pgs.a;
  Eigen::Matrix4d rho_eig = Eigen::Matrix4d::Zero();
  rho_eig(0, 0) = 1 + (pgs.cluster_pairs - touching) * pgs.a.squaredNorm();
  rho_eig.bottomRightCorner<3, 3>() = m;
  rho_eig /= pgs.norm_sq;
  const Eigen::Matrix4d w = pgs.spectrum.vectors;
  return (w * rho_eig * w.transpose()).cast<cd>();
}

Density perturbed_cluster_density(const SystemSpec& spec) {
  return perturbed_cluster_density(residual_amplitudes(spec));
}

Density perturbed_cross_pair_density(const PerturbedGS& pgs) {
  const auto& w = pgs.spectrum.vectors;
  // 2x2 transition blocks: keep spin 2 (T2) or spin 1 (T1) of |n><m|
  auto t1 = [&](int n, int m) {
    Eigen::Matrix2d t;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        double s = 0;
        for (int c = 0; c < 2; ++c) s += w(2 * a + c, n) * w(2 * b + c, m);
        t(a, b) = s;
      }
    return t;
  };
  auto t2 = [&](int n, int m) {
    Eigen::Matrix2d t;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        double s = 0;
        for (int c = 0; c < 2; ++c) s += w(2 * c + a, n) * w(2 * c + b, m);
        t(a, b) = s;
      }
    return t;
  };
  const int n_pairs = pgs.n_pairs;
  const Eigen::Matrix2d r2_0 = t2(0, 0), r1_0 = t1(0, 0);
  // bonds touching neither observed cluster
  const int untouched = n_pairs == 2 ? 0 : std::max(0, n_pairs - 3);
  Eigen::Matrix4d rho =
      (1 + untouched * pgs.a.squaredNorm()) * Eigen::kroneckerProduct(r2_0, r1_0);
  for (int n = 1; n <= 3; ++n)
    for (int np = 1; np <= 3; ++np) {
      const double a = pgs.a(n - 1, np - 1);
      if (a == 0) continue;
      // cross terms with the unexcited component
      rho += a * (Eigen::kroneckerProduct(t2(0, n), t1(0, np)) +
                  Eigen::kroneckerProduct(t2(n, 0), t1(np, 0)))
                     .eval();
      // excitation pairs on the observed bond
      for (int m = 1; m <= 3; ++m)
        for (int mp = 1; mp <= 3; ++mp)
          rho += a * pgs.a(m - 1, mp - 1) *
                 Eigen::kroneckerProduct(t2(n, m), t1(np, mp)).eval();
    }
  if (n_pairs >= 3) {
    // excitations on the bonds just outside the observed spins
    const Eigen::Matrix3d ata = pgs.a.transpose() * pgs.a;  // left cluster
    const Eigen::Matrix3d aat = pgs.a * pgs.a.transpose();  // right cluster
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; m <= 3; ++m) {
        if (ata(n - 1, m - 1) != 0)
          rho += ata(n - 1, m - 1) * Eigen::kroneckerProduct(t2(n, m), r1_0).eval();
        if (aat(n - 1, m - 1) != 0)
          rho += aat(n - 1, m - 1) * Eigen::kroneckerProduct(r2_0, t1(n, m)).eval();
      }
  }
  rho /= pgs.norm_sq;
  return rho.cast<cd>();
}

Density perturbed_cross_pair_density(const SystemSpec& spec) {
  return perturbed_cross_pair_density(residual_amplitudes(spec));
}

std::vector<double> excitation_band(const SystemSpec& spec, int k) {
  check_supported(spec);
  PairMFSolution base = pairmf_solve(spec);
  if (base.phase == PairPhase::ParityBreaking)
    throw std::invalid_argument(
        "excitation_band: degenerate vacuum inside the parity-breaking window");
  double mz = 0.0;
  if (spec.Jz != 0.0) {
    const Eigen::Vector4d v = pair_state(base.theta, base.phi);
    mz = (-v(0) * v(0) + v(3) * v(3)) / 2;
  }
  PairSpectrum ps = pair_spectrum(spec, base.mean_sx, mz);
  const Eigen::Vector4cd gs = ps.vectors.col(0).cast<cd>();
  const double alpha = effective_alpha(spec);
  const double js[3] = {spec.Jx, spec.Jy, spec.Jz};
  const double ck = std::cos(2 * M_PI * k / spec.n_pairs);
  std::vector<double> band;
  for (int m = 1; m <= 3; ++m) {
    const Eigen::Vector4cd vm = ps.vectors.col(m).cast<cd>();
    cd hop = 0;
    for (int mu = 0; mu < 3; ++mu)
      hop += js[mu] * gs.dot(spin_op(1, mu) * vm) * vm.dot(spin_op(2, mu) * gs);
    band.push_back(ps.energies(m) - ps.energies(0) - 2 * alpha * hop.real() * ck);
  }
  return band;
}

}  // namespace dimer
