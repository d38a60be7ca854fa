#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dimer/sweep.hpp"

using namespace dimer;

namespace {
SweepConfig small_config() {
  SweepConfig c;
  c.spec.topology = Topology::DimerChain;
  c.spec.n_pairs = 4;
  c.spec.Jx = 1.0;
  c.spec.Jy = 0.5;
  c.spec.alphas = {0.1};
  c.variable = SweepVariable::B;
  c.start = 0.0;
  c.stop = 1.0;
  c.points = 5;
  c.methods = {Method::GMF, Method::ED};
  c.observables = {Observable::Energy, Observable::C12};
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("method and observable names round-trip") {
  for (Method m : {Method::MF, Method::GMF, Method::GMF_P, Method::FreeFermion,
                   Method::ED})
    CHECK(method_from_string(to_string(m)) == m);
  for (Observable o :
       {Observable::Energy, Observable::SRho23, Observable::Band2,
        Observable::Exc3, Observable::BcMF})
    CHECK(observable_from_string(to_string(o)) == o);
  CHECK(!method_from_string("dmrg").has_value());
  CHECK(!observable_from_string("purity").has_value());
}

TEST_CASE("config validation rejects unsupported combinations") {
  SweepConfig c = small_config();
  CHECK_NOTHROW(validate_config(c));

  SweepConfig bad = c;
  bad.spec.Jz = 0.2;
  bad.methods = {Method::FreeFermion};
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);

  bad = c;
  bad.methods = {Method::ED};
  bad.spec.n_pairs = 10;  // 20 sites
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);

  bad = c;
  bad.spec.Jy = 1.2;
  bad.methods = {Method::GMF};
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);

  bad = c;
  bad.observables = {Observable::Phi};
  bad.methods = {Method::ED};  // no selected method supports phi
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);

  bad = c;
  bad.points = 1;
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);
}

TEST_CASE("sweep produces one column per supported method/observable pair") {
  SweepConfig c = small_config();
  c.observables = {Observable::Energy, Observable::Phi};
  SweepResult r = run_sweep(c);
  // phi exists only for gmf: columns are b, gmf.energy, gmf.phi, ed.energy
  CHECK(r.columns ==
        std::vector<std::string>{"b", "gmf.energy", "gmf.phi", "ed.energy"});
  CHECK(r.rows.size() == 5);
  for (const auto& row : r.rows) CHECK(row.size() == r.columns.size());
  CHECK(r.rows.front()[0] == 0.0);
  CHECK(r.rows.back()[0] == 1.0);
  CHECK(!r.manifest_json.empty());
}

TEST_CASE("multithreaded sweep is byte-identical to single-threaded") {
  SweepConfig c = small_config();
  SweepResult serial = run_sweep(c);
  c.threads = 4;
  SweepResult parallel = run_sweep(c);
  REQUIRE(serial.rows.size() == parallel.rows.size());
  for (size_t i = 0; i < serial.rows.size(); ++i)
    CHECK(serial.rows[i] == parallel.rows[i]);
}

TEST_CASE("csv output carries metadata and is reproducible") {
  SweepConfig c = small_config();
  SweepResult r = run_sweep(c);
  const std::string p1 = "/tmp/dimer_test_sweep1.csv";
  const std::string p2 = "/tmp/dimer_test_sweep2.csv";
  write_sweep_csv(p1, c, r);
  write_sweep_csv(p2, c, run_sweep(c));
  const std::string a = slurp(p1);
  CHECK(a == slurp(p2));
  CHECK(a.rfind("# tool=dimerlab", 0) == 0);
  CHECK(a.find("# jy=0.5") != std::string::npos);
  CHECK(slurp(p1 + ".manifest.json").find("\"variable\"") != std::string::npos);
  std::remove(p1.c_str());
  std::remove(p2.c_str());
  std::remove((p1 + ".manifest.json").c_str());
  std::remove((p2 + ".manifest.json").c_str());
}

TEST_CASE("comparison enforces the variational hierarchy and fidelity") {
  SweepConfig c = small_config();
  c.methods = {Method::MF, Method::GMF, Method::ED};
  c.observables = {Observable::Energy};
  CompareReport rep = compare(c);
  CHECK(rep.pass);
  CHECK(rep.table.find("fidelity12") != std::string::npos);
  CHECK(rep.json.find("\"pass\"") != std::string::npos);

  SweepConfig approx_only = c;
  approx_only.methods = {Method::MF, Method::GMF};
  CHECK_THROWS_AS(compare(approx_only), std::invalid_argument);
}

TEST_CASE("figure presets resolve to valid configurations") {
  for (const char* name : {"fig2", "fig3", "fig4", "fig5", "fig7", "fig8", "fig9"}) {
    auto runs = figure_preset(name);
    CHECK(!runs.empty());
    for (const auto& run : runs) CHECK_NOTHROW(validate_config(run.config));
  }
  CHECK(figure_preset("fig8").size() == 5);
  CHECK_THROWS_AS(figure_preset("fig6"), std::invalid_argument);
}
