#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dimer/entanglement.hpp"
#include "dimer/model.hpp"

namespace dimer {

/// Bit-basis of one S_z parity sector: configuration bit i = 1 means site i
/// is up; sector +1 holds configurations with an even number of up spins.
struct ParityBasis {
  int n_sites = 0;
  int sector = +1;
  std::vector<uint32_t> states;          // ascending configurations
  std::vector<int32_t> index;            // configuration -> position, -1 outside
  static ParityBasis build(int n_sites, int sector);
};

/// Matrix-free application of a CouplingGraph Hamiltonian inside a sector.
/// Convention: H = sum_i b_i s_i^z - sum_bonds w s_i^mu s_j^mu.
class SectorOperator {
 public:
  SectorOperator(const CouplingGraph& graph, int sector);
  int dim() const { return (int)basis_.states.size(); }
  const ParityBasis& basis() const { return basis_; }
  Eigen::VectorXd apply(const Eigen::VectorXd& v) const;
  Eigen::MatrixXd dense() const;

 private:
  ParityBasis basis_;
  std::vector<double> diag_;
  struct Flip {
    uint32_t mask;  // two-site flip
    double w_anti, w_par;  // amplitude when the two bits differ / agree
  };
  std::vector<Flip> flips_;
};

struct SpectrumResult {
  int sector = +1;
  std::vector<double> energies;          // ascending
  std::vector<Eigen::VectorXd> vectors;  // sector-basis coordinates
};

/// Lowest `count` states of one parity sector. Dense solve for N <= 12,
/// Lanczos with full reorthogonalization above; N <= 16 enforced.
SpectrumResult lowest_states(const SystemSpec& spec, int sector, int count = 1);

struct GSObservables {
  double energy = 0.0;
  int parity = +1;
  double gap_between_sectors = 0.0;
  bool near_degenerate = false;          // sector minima within 1e-12
  StateVec state;                        // full 2^N coordinates, global GS
  StateVec other_state;                  // minimum of the other sector
  double other_energy = 0.0;
};

GSObservables gs_observables(const SystemSpec& spec);

/// Embed a sector-basis vector into the full 2^N space.
StateVec embed(const ParityBasis& basis, const Eigen::VectorXd& v);

}  // namespace dimer
