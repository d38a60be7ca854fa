#include "dimer/meanfield.hpp"

#include <cmath>
#include <stdexcept>

namespace dimer {

MFSolution mf_solve(const SystemSpec& spec) {
  if (std::abs(spec.Jy) >= spec.Jx)
    throw std::invalid_argument("mf_solve requires |Jy| < Jx");
  const double alpha = effective_alpha(spec);
  MFSolution sol;
  sol.B_c = (spec.Jx - spec.Jz) * (1 + alpha) / 2;
  if (sol.B_c <= 0) {
    sol.no_parity_phase = true;
    sol.theta = 0.0;
  } else {
    sol.theta = spec.B >= sol.B_c ? 0.0 : std::acos(spec.B / sol.B_c);
  }
  sol.parity_broken = sol.theta > 0.0;
  sol.degenerate = sol.parity_broken;
  // <H>/pair on the tilted product state, <s^y> = 0:
  // 2B<s^z> - (1+alpha)[Jx <s^x>^2 + Jz <s^z>^2], spins at (sin t, 0, -cos t)/2.
  const double ct = std::cos(sol.theta), st = std::sin(sol.theta);
  sol.energy_per_pair =
      -spec.B * ct - (1 + alpha) * (spec.Jx * st * st + spec.Jz * ct * ct) / 4;
  return sol;
}

std::optional<FactorizingField> factorizing_field(const SystemSpec& spec) {
  const double alpha = effective_alpha(spec);
  const double jx = spec.Jx - spec.Jz, jy = spec.Jy - spec.Jz;
  if (jx * jy < 0) return std::nullopt;  // XY with Jy < 0, or Jy < Jz < Jx
  FactorizingField f;
  f.value = std::sqrt(jx * jy) * (1 + alpha) / 2;
  f.ground_state = jy >= 0 && jx >= 0;  // Jz > Jx > Jy: eigenstate only
  return f;
}

}  // namespace dimer
