#include "dimer/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace dimer {

int SystemSpec::pair_count() const {
  return topology == Topology::DimerLattice2D ? n1 * n2 : n_pairs;
}

int SystemSpec::alpha_count() const {
  switch (topology) {
    case Topology::DimerChain:
      return 1;
    case Topology::DimerLadder:
      return 3;
    case Topology::DimerLattice2D:
      return 2;
  }
  return 1;
}

void SystemSpec::validate() const {
  if (topology == Topology::DimerLattice2D) {
    if (n1 < 2 || n2 < 2)
      throw std::invalid_argument("lattice grid dimensions must be >= 2");
  } else if (n_pairs < 1) {
    throw std::invalid_argument("n_pairs must be >= 1");
  }
  if ((int)alphas.size() != alpha_count())
    throw std::invalid_argument("wrong number of inter-dimer ratios for topology");
}

SystemSpec SystemSpec::with_total_alpha(double a) const {
  SystemSpec s = *this;
  switch (topology) {
    case Topology::DimerChain:
      s.alphas = {a};
      break;
    case Topology::DimerLadder:
      s.alphas = {a / 4, a / 4, a / 4};  // a1 + 2*a2 + a3 = a
      break;
    case Topology::DimerLattice2D:
      s.alphas = {a / 3, a / 3};  // a1 + 2*a2 = a
      break;
  }
  return s;
}

int GaugeRecord::spin_sign(int site, Axis component) const {
  int sign = 1;
  for (const auto& layer : layers) {
    if (std::find(layer.sites.begin(), layer.sites.end(), site) == layer.sites.end())
      continue;
    // pi about z flips <s^x>, <s^y>; pi about x flips <s^y>, <s^z>.
    if (layer.axis == Axis::Z && component != Axis::Z) sign = -sign;
    if (layer.axis == Axis::X && component != Axis::X) sign = -sign;
  }
  return sign;
}

int CouplingGraph::bond_count(Axis axis) const {
  int c = 0;
  for (const auto& b : bonds)
    if (b.axis == axis) ++c;
  return c;
}

CanonicalSpec canonicalize(const SystemSpec& spec) {
  spec.validate();
  CanonicalSpec out{spec, {}};
  SystemSpec& s = out.spec;
  GaugeRecord& g = out.gauge;
  const int N = s.site_count();

  if (s.Jx < 0) {
    // pi about z at every second site flips the sign of both Jx and Jy on
    // every bond that joins sites of opposite parity. Second-neighbor bonds
    // (ladder/lattice a2) join same-parity sites, so their ratio flips too.
    s.Jx = -s.Jx;
    s.Jy = -s.Jy;
    if (s.topology == Topology::DimerLadder) s.alphas[1] = -s.alphas[1];
    if (s.topology == Topology::DimerLattice2D) s.alphas[1] = -s.alphas[1];
    RotationLayer layer{Axis::Z, {}};
    for (int i = 0; i < N; i += 2) layer.sites.push_back(i);
    g.layers.push_back(std::move(layer));
    g.flipped_jxy = true;
  }

  if (s.B < 0) {
    s.B = -s.B;
    RotationLayer layer{Axis::X, {}};
    for (int i = 0; i < N; ++i) layer.sites.push_back(i);
    g.layers.push_back(std::move(layer));
    g.flipped_b = true;
  }

  if (s.topology == Topology::DimerChain && s.alphas[0] < 0) {
    // pi about z on both sites of every second pair flips the inter-dimer
    // coupling sign while intra-dimer bonds are untouched. On a ring this
    // alternation closes only for an even number of pairs.
    if (s.boundary == Boundary::Cyclic && s.n_pairs % 2 != 0)
      throw std::invalid_argument(
          "cannot flip the inter-dimer sign on a cyclic chain with an odd "
          "number of pairs");
    s.alphas[0] = -s.alphas[0];
    RotationLayer layer{Axis::Z, {}};
    for (int p = 1; p < s.n_pairs; p += 2) {
      layer.sites.push_back(2 * p);
      layer.sites.push_back(2 * p + 1);
    }
    g.layers.push_back(std::move(layer));
    g.flipped_alpha = true;
  }

  if (std::abs(s.Jy) > s.Jx) g.anisotropy_warning = true;
  for (double a : s.alphas)
    if (a < 0) g.negative_alpha_warning = true;
  return out;
}

double effective_alpha(const SystemSpec& spec) {
  switch (spec.topology) {
    case Topology::DimerChain:
      return spec.alphas[0];
    case Topology::DimerLadder:
      return spec.alphas[0] + 2 * spec.alphas[1] + spec.alphas[2];
    case Topology::DimerLattice2D:
      return spec.alphas[0] + 2 * spec.alphas[1];
  }
  return 0.0;
}

namespace {

// Accumulate one geometric link with ratio `mult` on every active axis;
// coincident unordered (i,j,axis) entries are summed (a wrapped bond on a
// very short ring genuinely appears twice in the Hamiltonian).
struct BondAccumulator {
  std::map<std::tuple<int, int, int>, double> terms;
  const SystemSpec& spec;
  explicit BondAccumulator(const SystemSpec& s) : spec(s) {}
  void add(int i, int j, double mult) {
    if (i == j) throw std::logic_error("self-bond in coupling graph");
    if (i > j) std::swap(i, j);
    const double js[3] = {spec.Jx, spec.Jy, spec.Jz};
    for (int mu = 0; mu < 3; ++mu) {
      if (mu == 2 && spec.Jz == 0.0) continue;  // z axis only when present
      terms[{i, j, mu}] += mult * js[mu];
    }
  }
};

}  // namespace

CouplingGraph coupling_graph(const SystemSpec& spec) {
  spec.validate();
  CouplingGraph g;
  g.sites = spec.site_count();
  BondAccumulator acc(spec);
  const bool cyc = spec.boundary == Boundary::Cyclic;

  if (spec.topology == Topology::DimerChain || spec.topology == Topology::DimerLadder) {
    const int n = spec.n_pairs;
    const int N = 2 * n;
    auto wrap = [&](int site) { return ((site % N) + N) % N; };
    for (int p = 0; p < n; ++p) {
      const int u = 2 * p, v = 2 * p + 1;
      acc.add(u, v, 1.0);
      const bool last = (p == n - 1);
      if (last && !cyc) continue;
      acc.add(v, wrap(u + 2), spec.alphas[0]);
      if (spec.topology == Topology::DimerLadder) {
        acc.add(u, wrap(u + 2), spec.alphas[1]);
        acc.add(v, wrap(v + 2), spec.alphas[1]);
        acc.add(u, wrap(v + 2), spec.alphas[2]);
      }
    }
  } else {
    const int n1 = spec.n1, n2 = spec.n2;
    auto site = [&](int row, int col) {  // col in [0, 2*n1)
      return ((row % n2 + n2) % n2) * 2 * n1 + ((col % (2 * n1) + 2 * n1) % (2 * n1));
    };
    for (int r = 0; r < n2; ++r)
      for (int p = 0; p < n1; ++p) {
        const int u = site(r, 2 * p), v = site(r, 2 * p + 1);
        acc.add(u, v, 1.0);
        if (cyc || p < n1 - 1) acc.add(v, site(r, 2 * p + 2), spec.alphas[0]);
        if (cyc || r < n2 - 1) {
          acc.add(u, site(r + 1, 2 * p), spec.alphas[1]);
          acc.add(v, site(r + 1, 2 * p + 1), spec.alphas[1]);
        }
      }
  }

  for (const auto& [key, w] : acc.terms)
    g.bonds.push_back({std::get<0>(key), std::get<1>(key),
                       static_cast<Axis>(std::get<2>(key)), w});
  for (int i = 0; i < g.sites; ++i) g.field_terms.push_back({i, spec.B});
  return g;
}

std::map<std::string, std::string> spec_to_keyvals(const SystemSpec& spec) {
  std::map<std::string, std::string> kv;
  const char* topo = spec.topology == Topology::DimerChain    ? "chain"
                     : spec.topology == Topology::DimerLadder ? "ladder"
                                                              : "lattice";
  kv["topology"] = topo;
  if (spec.topology == Topology::DimerLattice2D) {
    kv["n1"] = std::to_string(spec.n1);
    kv["n2"] = std::to_string(spec.n2);
  } else {
    kv["n_pairs"] = std::to_string(spec.n_pairs);
  }
  kv["boundary"] = spec.boundary == Boundary::Cyclic ? "cyclic" : "open";
  auto num = [](double x) {
    char buf[32];
    snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  kv["jx"] = num(spec.Jx);
  kv["jy"] = num(spec.Jy);
  kv["jz"] = num(spec.Jz);
  kv["b"] = num(spec.B);
  for (size_t k = 0; k < spec.alphas.size(); ++k)
    kv["alpha" + std::to_string(k + 1)] = num(spec.alphas[k]);
  return kv;
}

SystemSpec spec_from_keyvals(const std::map<std::string, std::string>& kv) {
  SystemSpec s;
  auto get = [&](const std::string& key) -> const std::string* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  if (auto* t = get("topology")) {
    if (*t == "chain")
      s.topology = Topology::DimerChain;
    else if (*t == "ladder")
      s.topology = Topology::DimerLadder;
    else if (*t == "lattice")
      s.topology = Topology::DimerLattice2D;
    else
      throw std::invalid_argument("unknown topology: " + *t);
  }
  if (auto* v = get("n_pairs")) s.n_pairs = std::stoi(*v);
  if (auto* v = get("n1")) s.n1 = std::stoi(*v);
  if (auto* v = get("n2")) s.n2 = std::stoi(*v);
  if (auto* v = get("boundary")) {
    if (*v == "cyclic")
      s.boundary = Boundary::Cyclic;
    else if (*v == "open")
      s.boundary = Boundary::Open;
    else
      throw std::invalid_argument("unknown boundary: " + *v);
  }
  if (auto* v = get("jx")) s.Jx = std::stod(*v);
  if (auto* v = get("jy")) s.Jy = std::stod(*v);
  if (auto* v = get("jz")) s.Jz = std::stod(*v);
  if (auto* v = get("b")) s.B = std::stod(*v);
  s.alphas.assign(s.alpha_count(), 0.0);
  std::set<std::string> known = {"topology", "n_pairs", "n1",
                                 "n2",       "boundary", "jx",
                                 "jy",       "jz",       "b"};
  for (int k = 0; k < s.alpha_count(); ++k) {
    const std::string key = "alpha" + std::to_string(k + 1);
    if (auto* v = get(key)) s.alphas[k] = std::stod(*v);
    known.insert(key);
  }
  for (const auto& [key, value] : kv)
    if (!known.count(key))
      throw std::invalid_argument("unknown config key: " + key);
  s.validate();
  return s;
}

}  // namespace dimer
