#pragma once

#include <optional>

#include "dimer/entanglement.hpp"
#include "dimer/model.hpp"

namespace dimer {

/// Conventional single-spin mean field at T=0. theta is the tilt of every
/// spin away from the field axis; theta > 0 breaks S_z parity and the
/// solution is doubly degenerate (theta <-> -theta).
struct MFSolution {
  double theta = 0.0;  // in [0, pi/2]
  double energy_per_pair = 0.0;
  double B_c = 0.0;
  bool parity_broken = false;
  bool degenerate = false;
  bool no_parity_phase = false;  // B_c <= 0 (Jz >= Jx): tilted phase absent
};

MFSolution mf_solve(const SystemSpec& spec);

struct FactorizingField {
  double value;
  bool ground_state;  // false when the factorized state is an eigenstate only
};

/// Field at which an exactly separable product state is an eigenstate
/// (and, when flagged, the ground state). None when no such field exists.
std::optional<FactorizingField> factorizing_field(const SystemSpec& spec);

// The restored reduced densities of the MF solution live in the
// entanglement module: mf_restored_states(theta).

}  // namespace dimer
