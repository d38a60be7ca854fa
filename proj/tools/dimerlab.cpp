// dimerlab: sweep driver for dimerized spin-1/2 chains, ladders and lattices.
//
// Exit codes: 0 success, 2 configuration error, 3 solver failure,
// 4 comparison-threshold failure.
#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "dimer/sweep.hpp"

namespace fs = std::filesystem;
using namespace dimer;

namespace {

struct CliOptions {
  std::string config_path;
  std::string figure;
  std::vector<std::string> sets;
  std::string out_dir = ".";
  std::vector<std::string> methods;
  std::vector<std::string> observables;
  std::string overlap = "neglect";
  int threads = 1;
};

std::map<std::string, std::string> parse_keyvals(
    const std::vector<std::string>& items) {
  std::map<std::string, std::string> kv;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("expected key=value, got '" + item + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  std::vector<std::string> items;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    items.push_back(line.substr(start, end - start + 1));
  }
  return parse_keyvals(items);
}

// Keys handled by the sweep layer rather than spec_from_keyvals.
const std::set<std::string> kSweepKeys = {
    "sweep", "start", "stop", "points", "methods", "observables",
    "overlap", "band_k", "threads"};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

void apply_sweep_keys(SweepConfig& c, std::map<std::string, std::string>& kv) {
  auto take = [&](const std::string& k) -> std::optional<std::string> {
    auto it = kv.find(k);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  if (auto v = take("sweep")) {
    if (*v == "b") c.variable = SweepVariable::B;
    else if (*v == "alpha") c.variable = SweepVariable::Alpha;
    else if (*v == "jz") c.variable = SweepVariable::Jz;
    else throw std::invalid_argument("unknown sweep variable '" + *v + "'");
  }
  if (auto v = take("start")) c.start = std::stod(*v);
  if (auto v = take("stop")) c.stop = std::stod(*v);
  if (auto v = take("points")) c.points = std::stoi(*v);
  if (auto v = take("band_k")) c.band_k = std::stoi(*v);
  if (auto v = take("threads")) c.threads = std::stoi(*v);
  if (auto v = take("overlap")) {
    if (*v == "keep") c.overlap = OverlapMode::Keep;
    else if (*v == "neglect") c.overlap = OverlapMode::Neglect;
    else throw std::invalid_argument("overlap must be keep or neglect");
  }
  if (auto v = take("methods")) {
    c.methods.clear();
    for (const auto& tok : split_list(*v)) {
      auto m = method_from_string(tok);
      if (!m) throw std::invalid_argument("unknown method '" + tok + "'");
      c.methods.push_back(*m);
    }
  }
  if (auto v = take("observables")) {
    c.observables.clear();
    for (const auto& tok : split_list(*v)) {
      auto o = observable_from_string(tok);
      if (!o) throw std::invalid_argument("unknown observable '" + tok + "'");
      c.observables.push_back(*o);
    }
  }
}

SweepConfig config_from_keyvals(std::map<std::string, std::string> kv) {
  SweepConfig c;
  apply_sweep_keys(c, kv);
  c.spec = spec_from_keyvals(kv);
  return c;
}

void apply_cli_overrides(SweepConfig& c, const CliOptions& opt,
                         const std::map<std::string, std::string>& sets,
                         bool preset) {
  std::map<std::string, std::string> kv = sets;
  if (preset) {
    // Presets fix their own parameters; user overrides of those are
    // conflicts, not silent replacements.
    auto spec_kv = spec_to_keyvals(c.spec);
    for (const auto& [k, v] : kv) {
      if (kSweepKeys.count(k) || spec_kv.count(k))
        throw std::invalid_argument("--set " + k +
                                    " conflicts with the figure preset");
    }
    if (!opt.methods.empty() || !opt.observables.empty())
      throw std::invalid_argument(
          "--methods/--observables conflict with the figure preset");
  }
  apply_sweep_keys(c, kv);
  if (!kv.empty()) {
    auto spec_kv = spec_to_keyvals(c.spec);
    for (const auto& [k, v] : kv) spec_kv[k] = v;
    c.spec = spec_from_keyvals(spec_kv);
  }
  if (!opt.methods.empty()) {
    c.methods.clear();
    for (const auto& tok : opt.methods) {
      auto m = method_from_string(tok);
      if (!m) throw std::invalid_argument("unknown method '" + tok + "'");
      c.methods.push_back(*m);
    }
  }
  if (!opt.observables.empty()) {
    c.observables.clear();
    for (const auto& tok : opt.observables) {
      auto o = observable_from_string(tok);
      if (!o) throw std::invalid_argument("unknown observable '" + tok + "'");
      c.observables.push_back(*o);
    }
  }
  if (opt.overlap == "keep") c.overlap = OverlapMode::Keep;
  else if (opt.overlap == "neglect") c.overlap = OverlapMode::Neglect;
  else throw std::invalid_argument("--overlap must be keep or neglect");
  c.threads = opt.threads;
}

std::vector<PresetRun> resolve_runs(const CliOptions& opt) {
  const auto sets = parse_keyvals(opt.sets);
  std::vector<PresetRun> runs;
  if (!opt.figure.empty()) {
    runs = figure_preset(opt.figure);
    for (auto& run : runs) {
      run.label = opt.figure + "_" + run.label;
      apply_cli_overrides(run.config, opt, sets, true);
    }
  } else {
    std::map<std::string, std::string> kv;
    if (!opt.config_path.empty()) kv = read_config_file(opt.config_path);
    PresetRun run;
    run.label = "sweep";
    run.config = config_from_keyvals(kv);
    apply_cli_overrides(run.config, opt, sets, false);
    runs.push_back(std::move(run));
  }
  return runs;
}

int run_sweep_command(const CliOptions& opt) {
  std::vector<PresetRun> runs;
  try {
    runs = resolve_runs(opt);
    for (const auto& run : runs) validate_config(run.config);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  try {
    fs::create_directories(opt.out_dir);
    for (const auto& run : runs) {
      const SweepResult res = run_sweep(run.config);
      const std::string path =
          (fs::path(opt.out_dir) / (run.label + ".csv")).string();
      write_sweep_csv(path, run.config, res);
      std::cout << "wrote " << path << " (" << res.rows.size() << " points)\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

int run_compare_command(const CliOptions& opt) {
  std::vector<PresetRun> runs;
  try {
    runs = resolve_runs(opt);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  bool all_pass = true;
  try {
    fs::create_directories(opt.out_dir);
    for (const auto& run : runs) {
      CompareReport rep;
      try {
        rep = compare(run.config);
      } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
      }
      const std::string path =
          (fs::path(opt.out_dir) / (run.label + "_compare.json")).string();
      std::ofstream(path) << rep.json << "\n";
      std::cout << rep.table;
      std::cout << (rep.pass ? "PASS" : "FAIL") << " (" << path << ")\n";
      all_pass = all_pass && rep.pass;
    }
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 3;
  }
  return all_pass ? 0 : 4;
}

void add_common(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--config", opt.config_path, "flat key=value config file");
  cmd->add_option("--figure", opt.figure,
                  "figure preset (fig2, fig3, fig4, fig5, fig7, fig8, fig9)");
  cmd->add_option("--set", opt.sets, "override key=value (repeatable)");
  cmd->add_option("--out", opt.out_dir, "output directory");
  cmd->add_option("--methods", opt.methods,
                  "methods: mf, gmf, gmf_p, freefermion, ed")
      ->delimiter(',');
  cmd->add_option("--observables", opt.observables, "observable columns")
      ->delimiter(',');
  cmd->add_option("--overlap", opt.overlap,
                  "pair-overlap handling in restored states: keep|neglect");
  cmd->add_option("--threads", opt.threads, "worker threads");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ground states, phase boundaries and entanglement of "
               "transverse-field dimerized spin-1/2 systems"};
  app.require_subcommand(1);
  CliOptions sweep_opt, compare_opt;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "sweep a parameter and write CSV columns");
  add_common(sweep_cmd, sweep_opt);
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "check approximate methods against an exact oracle");
  add_common(compare_cmd, compare_opt);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (sweep_cmd->parsed()) return run_sweep_command(sweep_opt);
  return run_compare_command(compare_opt);
}
