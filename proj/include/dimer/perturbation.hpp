#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dimer/entanglement.hpp"
#include "dimer/model.hpp"
#include "dimer/pairmf.hpp"

namespace dimer {

/// First-order corrections on top of the pair mean field (cyclic chains).

struct PairSpectrum {
  Eigen::Vector4d energies;  // ascending
  Eigen::Matrix4d vectors;   // orthonormal columns, product basis
};

/// Eigendecomposition of the pair Hamiltonian with the mean-field linear
/// terms at the given neighbor means.
PairSpectrum pair_spectrum(const SystemSpec& spec, double mean_sx,
                           double mean_sz = 0.0);

/// Two-cluster excitation amplitudes of the perturbed ground state,
/// identical for every adjacent cluster pair (translation invariance).
struct PerturbedGS {
  Eigen::Matrix3d a;       // amplitude(n, n') for excitations n, n' in {1,2,3}
  int n_pairs = 0;
  int cluster_pairs = 0;   // distinct coupled cluster pairs (n, or 1 if n = 2)
  double norm_sq = 1.0;    // <psi|psi> of the truncated state
  bool degenerate_skipped = false;  // vanishing denominator encountered
  PairSpectrum spectrum;
  PairMFSolution base;     // converged pair MF the expansion is built on
};

PerturbedGS residual_amplitudes(const SystemSpec& spec);

/// Reduced density of one full cluster in the perturbed ground state.
Density perturbed_cluster_density(const SystemSpec& spec);
Density perturbed_cluster_density(const PerturbedGS& pgs);

/// Reduced density of the two adjacent weakly coupled spins (second spin of
/// one cluster, first spin of the next), by exact partial trace over the
/// truncated excitation manifold.
Density perturbed_cross_pair_density(const SystemSpec& spec);
Density perturbed_cross_pair_density(const PerturbedGS& pgs);

/// Perturbed excitation energies E_m(k), m in {1,2,3}, for momentum index k;
/// refused inside the parity-breaking window (degenerate vacuum).
std::vector<double> excitation_band(const SystemSpec& spec, int k);

}  // namespace dimer
