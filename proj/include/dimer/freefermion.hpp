#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "dimer/entanglement.hpp"
#include "dimer/model.hpp"

namespace dimer {

/// Exact solution of the cyclic dimerized XY chain (Jz = 0) by fermionization:
/// spins map to fermions with a parity-dependent boundary sign, the quadratic
/// form is diagonalized per parity sector, and correlators follow from Wick's
/// theorem.

struct Mode {
  double k;  // integer (sector -) or half-integer (sector +) in [0, n)
  double lambda_plus, lambda_minus;  // quasiparticle energies, >= 0
};

struct SectorSpectrum {
  int parity = +1;
  std::vector<Mode> modes;
  double ground_energy = 0.0;
  bool parity_flip_applied = false;  // smallest mode occupied to fix parity
  double lambda_min = 0.0;
  Eigen::MatrixXd U, V;  // Bogoliubov coefficients of the selected state
};

struct CorrelationSet {
  Eigen::MatrixXd f;  // <c+_i c_j> - delta_ij/2
  Eigen::MatrixXd g;  // <c+_i c+_j>
};

/// 4x4 (k, -k) block of the fermionized Hamiltonian in the sector k-grid,
/// basis (c_k1, c_k2, c+_{-k,1}, c+_{-k,2}).
Eigen::Matrix4cd block_matrix(double k, const SystemSpec& spec);

/// Closed-form |lambda_k^{+-}|.
std::pair<double, double> block_lambdas(double k, const SystemSpec& spec);

SectorSpectrum sector_spectrum(const SystemSpec& spec, int parity);

struct ExactCriticalFields {
  std::optional<double> B_c1_ex, B_c2_ex;
};
ExactCriticalFields exact_critical_fields(const SystemSpec& spec);

CorrelationSet contractions(const SystemSpec& spec, int parity);

struct SpinCorrelators {
  double sz_i, sz_j, szsz, spsm, spsp;
};
/// Wick-theorem spin correlators for sites i < j (determinant construction;
/// j = i+1 uses the direct contraction path).
SpinCorrelators spin_correlators(const CorrelationSet& c, int i, int j);

/// One- or two-site reduced density assembled from the correlators.
Density exact_rdm(const SystemSpec& spec, int parity, std::vector<int> sites);
Density exact_rdm(const CorrelationSet& c, std::vector<int> sites);

struct ParityCrossings {
  std::vector<double> fields;  // sign changes of E+ - E-, refined
  bool resolution_suspect = false;  // doubled-resolution audit disagreed
};
ParityCrossings parity_crossings(const SystemSpec& spec, double b_lo, double b_hi,
                                 int resolution);

}  // namespace dimer
