#pragma once

#include <Eigen/Dense>
#include <optional>

#include "dimer/model.hpp"

namespace dimer {

enum class PairPhase { Dimerized, ParityBreaking, Aligned };

struct PairMFSolution {
  double theta = 0.0;  // in [0, pi]; pi = dimerized, 0 = aligned
  double phi = 0.0;    // in (-pi/2, pi/2]
  PairPhase phase = PairPhase::Aligned;
  double energy_per_pair = 0.0;
  bool degenerate = false;  // theta <-> -theta partner in ParityBreaking
  double mean_sx = 0.0;     // <s^x> per spin of the pair state
  bool grid_fallback = false;
  bool converged = true;  // self-consistent iteration only
  int iterations = 0;
};

/// Variational pair energy per pair at angles (theta, phi); alpha and the
/// couplings come from the (canonical) spec.
double pair_energy(double theta, double phi, const SystemSpec& spec);

/// Global minimizer of pair_energy over [0,pi] x (-pi/2, pi/2].
PairMFSolution pairmf_solve(const SystemSpec& spec);

struct CriticalFields {
  std::optional<double> B_c1;  // dimerized -> parity-breaking
  std::optional<double> B_c2;  // parity-breaking -> aligned
};
CriticalFields critical_fields(const SystemSpec& spec);

struct AlphaCritical {
  double value;               // dimerized phase at B=0 exists for alpha < value
  bool parity_window_absent;  // Jy-Jz < 0 and alpha small: no broken phase
};
AlphaCritical alpha_critical(const SystemSpec& spec);

/// 4x4 pair Hamiltonian with the mean-field linear terms for given
/// neighbor means (mx, mz); basis {|dd>,|du>,|ud>,|uu>}.
Eigen::Matrix4d pair_hamiltonian(const SystemSpec& spec, double mean_sx,
                                 double mean_sz);

/// Generic self-consistent iteration on the pair Hamiltonian; converges to
/// the pairmf_solve energy, with the sign of <s^x> set by the seed's basin.
PairMFSolution selfconsistent_iterate(const SystemSpec& spec, double seed_sx,
                                      double tol = 1e-12, int max_iter = 10000);

}  // namespace dimer
