#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimer/entanglement.hpp"
#include "dimer/model.hpp"

namespace dimer {

enum class Method { MF, GMF, GMF_P, FreeFermion, ED };
enum class SweepVariable { B, Alpha, Jz };

/// Observables addressable from the CLI. band1..3 are the perturbed
/// excitation energies at momentum index band_k; exc1..3 the lowest ED
/// excitation energies; bc1/bc2/bs/bc the analytic boundary fields.
enum class Observable {
  Energy,
  Theta,
  Phi,
  SRho12,
  SRho1,
  SRho23,
  C12,
  C23,
  Band1,
  Band2,
  Band3,
  Exc1,
  Exc2,
  Exc3,
  Bc1,
  Bc2,
  Bs,
  BcMF,
};

std::string to_string(Method m);
std::string to_string(Observable o);
std::string to_string(SweepVariable v);
std::optional<Method> method_from_string(const std::string& s);
std::optional<Observable> observable_from_string(const std::string& s);

struct SweepConfig {
  SystemSpec spec;
  SweepVariable variable = SweepVariable::B;
  double start = 0.0, stop = 1.0;
  int points = 11;
  std::vector<Method> methods;
  std::vector<Observable> observables;
  OverlapMode overlap = OverlapMode::Neglect;
  int band_k = 0;  // momentum index for band observables
  int threads = 1;
};

/// Throws std::invalid_argument on unsupported method/observable/topology
/// combinations, before any computation.
void validate_config(const SweepConfig& config);

struct SweepResult {
  std::vector<std::string> columns;  // sweep variable first
  std::vector<std::vector<double>> rows;
  std::string manifest_json;
};

SweepResult run_sweep(const SweepConfig& config);

/// CSV with a '#' metadata block and 12-significant-digit values; the JSON
/// manifest is written next to it as <path>.manifest.json.
void write_sweep_csv(const std::string& path, const SweepConfig& config,
                     const SweepResult& result);

struct CompareReport {
  bool pass = true;
  std::string table;  // human-readable
  std::string json;   // machine-readable
};

/// Per-point deltas (E_approx - E_exact)/n and GMF-vs-exact fidelity of
/// rho12, checked against the variational-hierarchy and fidelity thresholds.
CompareReport compare(const SweepConfig& config);

struct PresetRun {
  std::string label;
  SweepConfig config;
};

/// Parameter presets reproducing the reference figure data sets
/// (fig2, fig3, fig4, fig5, fig7, fig8, fig9).
std::vector<PresetRun> figure_preset(const std::string& name);

}  // namespace dimer
