#pragma once

#include <map>
#include <string>
#include <vector>

namespace dimer {

enum class Topology { DimerChain, DimerLadder, DimerLattice2D };
enum class Boundary { Cyclic, Open };
enum class Axis : int { X = 0, Y = 1, Z = 2 };

/// Full description of a dimerized spin-1/2 system: topology, couplings,
/// transverse field and boundary conditions. Couplings are in energy units.
/// Sites are indexed 0-based; pair p occupies sites (2p, 2p+1).
struct SystemSpec {
  Topology topology = Topology::DimerChain;
  int n_pairs = 1;     // pairs in a chain/ladder; ignored for the lattice
  int n1 = 2, n2 = 2;  // lattice pair-grid: n1 pairs per row, n2 rows
  Boundary boundary = Boundary::Cyclic;
  double Jx = 1.0;
  double Jy = 0.0;
  double Jz = 0.0;  // analytic branches support Jz only for chains
  double B = 0.0;
  std::vector<double> alphas = {0.0};  // chain: a1; ladder: a1..a3; lattice: a1,a2

  int pair_count() const;
  int site_count() const { return 2 * pair_count(); }
  int alpha_count() const;  // number of inter-dimer ratios for this topology
  void validate() const;

  SystemSpec with_field(double b) const {
    SystemSpec s = *this;
    s.B = b;
    return s;
  }
  SystemSpec with_jz(double jz) const {
    SystemSpec s = *this;
    s.Jz = jz;
    return s;
  }
  /// Distribute a total effective coupling ratio over equal per-bond ratios.
  SystemSpec with_total_alpha(double a) const;
};

/// One layer of simultaneous pi rotations about a common axis.
struct RotationLayer {
  Axis axis;
  std::vector<int> sites;
};

/// Record of the gauge rotations applied by canonicalize(). Applying the
/// recorded rotations to observables of the canonical model recovers the
/// observables of the original model.
struct GaugeRecord {
  std::vector<RotationLayer> layers;
  bool flipped_jxy = false;    // Jx,Jy -> -Jx,-Jy (pi about z at even sites)
  bool flipped_alpha = false;  // a -> -a (pi about z at even pairs)
  bool flipped_b = false;      // B -> -B (global pi about x)
  bool anisotropy_warning = false;      // |Jy| > Jx after canonicalization
  bool negative_alpha_warning = false;  // some ak < 0 kept
  bool identity() const { return layers.empty(); }
  /// Sign picked up by <s_site^component> under the recorded rotations.
  int spin_sign(int site, Axis component) const;
};

struct Bond {
  int i, j;  // i < j
  Axis axis;
  double strength;
};
struct FieldTerm {
  int site;
  double b;
};

/// Explicit bond/field enumeration of the Hamiltonian. Each unordered site
/// pair appears at most once per axis; coincident terms are summed.
struct CouplingGraph {
  int sites = 0;
  std::vector<Bond> bonds;
  std::vector<FieldTerm> field_terms;
  int bond_count(Axis axis) const;
};

struct CanonicalSpec {
  SystemSpec spec;
  GaugeRecord gauge;
};

/// Rotate the model into the canonical sign convention Jx >= 0, B >= 0 and
/// (for chains) a1 >= 0. Throws if the a-flip is requested for a cyclic
/// chain with an odd number of pairs, where no such rotation exists.
CanonicalSpec canonicalize(const SystemSpec& spec);

/// Scalar inter-dimer ratio entering all analytic formulas:
/// a1 (chain), a1+2*a2+a3 (ladder), a1+2*a2 (lattice).
double effective_alpha(const SystemSpec& spec);

CouplingGraph coupling_graph(const SystemSpec& spec);

// Flat key-value (de)serialization used by the CLI config format.
std::map<std::string, std::string> spec_to_keyvals(const SystemSpec& spec);
SystemSpec spec_from_keyvals(const std::map<std::string, std::string>& kv);

}  // namespace dimer
