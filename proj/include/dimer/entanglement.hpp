#pragma once

#include <Eigen/Dense>
#include <vector>

namespace dimer {

using Density = Eigen::MatrixXcd;  // Hermitian, unit trace, PSD
using StateVec = Eigen::VectorXcd;

/// Two-spin product-basis convention used everywhere:
/// |down> = index 0, |up> = index 1; pair index = 2*b_first + b_second,
/// i.e. {|dd>, |du>, |ud>, |uu>}. For N sites, site i maps to bit i of the
/// global index with site 0 least significant.

struct SingleQubitDensity {
  double p_plus = 1.0;   // population of |up> (s^z = +1/2)
  double p_minus = 0.0;  // population of |down>
  Density matrix() const;
};

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const Density& rho);

/// von Neumann entropy; base 2 by default (bits), base e available.
double entropy(const Density& rho, double log_base = 2.0);

/// Uhlmann fidelity F = Tr sqrt(sqrt(rho) sigma sqrt(rho)).
double fidelity(const Density& rho, const Density& sigma);

/// Reduced density on `keep_sites` (0-based, any order-insensitive subset);
/// the kept sites appear in ascending site order, first kept site most
/// significant in the reduced basis (so keep={i,j}, i<j gives {|s_i s_j>}).
Density partial_trace(const StateVec& state, int n_sites, std::vector<int> keep_sites);
Density partial_trace(const Density& rho, int n_sites, std::vector<int> keep_sites);

/// Symmetric two-spin variational state
/// cos(t/2)(cos(f/2)|dd> + sin(f/2)|uu>) + sin(t/2)(|ud>+|du>)/sqrt(2).
Eigen::Vector4d pair_state(double theta, double phi);

enum class OverlapMode { Neglect, Keep };

/// Definite-parity combination of a product of pair states and its theta ->
/// -theta partner; overlap = prod_k <0_k(+)|0_k(-)>.
struct RestoredPair {
  double overlap = 1.0;
  double p_plus = 0.5, p_minus = 0.5;  // eigenvalues of the restored mixture
};

RestoredPair restore_parity(const std::vector<Eigen::Vector4d>& plus_family,
                            OverlapMode mode = OverlapMode::Neglect);

/// Reduced state of one full pair after parity restoration: mixes
/// |0(theta)><0(theta)| and |0(-theta)><0(-theta)| with the RestoredPair
/// weights (cross terms carry the overlap product over the other pairs and
/// are dropped in Neglect mode).
Density restored_cluster_density(double theta, double phi, int n_pairs,
                                 OverlapMode mode = OverlapMode::Neglect);

struct GMFReducedStates {
  Density rho12;              // strongly coupled pair
  SingleQubitDensity rho1;    // single spin, restored
  Density rho23;              // two adjacent weakly coupled spins
};

/// Closed-form restored reduced states of the pair MF solution (overlap
/// neglected, as appropriate away from isolated points).
GMFReducedStates gmf_reduced_states(double theta, double phi);

enum class Alignment { Parallel, Antiparallel };

/// Closed form |cos^2(t/2)(1+sin f) - 1| with the alignment of the
/// dominant correlations.
struct Concurrence12 {
  double value;
  Alignment alignment;
};
Concurrence12 gmf_concurrence12(double theta, double phi);

/// Restored reduced states of the conventional single-spin MF solution:
/// rho12 diag/anti-diag matrix built from theta (separable for all theta)
/// and the diagonal single-spin state p_± = (1 -+ cos theta)/2.
struct MFRestoredStates {
  Density rho12;
  SingleQubitDensity rho1;
};
MFRestoredStates mf_restored_states(double theta);

}  // namespace dimer
