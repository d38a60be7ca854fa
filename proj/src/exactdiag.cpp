#include "dimer/exactdiag.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace dimer {

ParityBasis ParityBasis::build(int n_sites, int sector) {
  if (n_sites < 1 || n_sites > 16)
    throw std::invalid_argument("exactdiag supports 1..16 sites");
  if (sector != 1 && sector != -1) throw std::invalid_argument("sector must be +-1");
  ParityBasis b;
  b.n_sites = n_sites;
  b.sector = sector;
  const uint32_t full = 1u << n_sites;
  b.index.assign(full, -1);
  for (uint32_t s = 0; s < full; ++s) {
    const int par = std::popcount(s) % 2 == 0 ? +1 : -1;
    if (par == sector) {
      b.index[s] = (int32_t)b.states.size();
      b.states.push_back(s);
    }
  }
  return b;
}

SectorOperator::SectorOperator(const CouplingGraph& graph, int sector)
    : basis_(ParityBasis::build(graph.sites, sector)) {
  // group x/y bonds on the same pair into one two-site flip
  std::map<std::pair<int, int>, std::pair<double, double>> xy;  // (wx, wy)
  std::vector<Bond> zbonds;
  for (const auto& b : graph.bonds) {
    if (b.axis == Axis::X)
      xy[{b.i, b.j}].first += b.strength;
    else if (b.axis == Axis::Y)
      xy[{b.i, b.j}].second += b.strength;
    else
      zbonds.push_back(b);
  }
  for (const auto& [ij, w] : xy) {
    Flip f;
    f.mask = (1u << ij.first) | (1u << ij.second);
    f.w_anti = -(w.first + w.second) / 4;
    f.w_par = -(w.first - w.second) / 4;
    if (f.w_anti != 0 || f.w_par != 0) flips_.push_back(f);
  }
  diag_.resize(basis_.states.size());
  for (size_t a = 0; a < basis_.states.size(); ++a) {
    const uint32_t s = basis_.states[a];
    double d = 0;
    for (const auto& ft : graph.field_terms)
      d += ft.b * ((s >> ft.site & 1) ? 0.5 : -0.5);
    for (const auto& zb : zbonds) {
      const bool equal = ((s >> zb.i) & 1) == ((s >> zb.j) & 1);
      d -= zb.strength * (equal ? 0.25 : -0.25);
    }
    diag_[a] = d;
  }
}

Eigen::VectorXd SectorOperator::apply(const Eigen::VectorXd& v) const {
  Eigen::VectorXd r(dim());
  for (int a = 0; a < dim(); ++a) r(a) = diag_[a] * v(a);
  for (int a = 0; a < dim(); ++a) {
    const uint32_t s = basis_.states[a];
    const double va = v(a);
    if (va == 0.0) continue;
    for (const auto& f : flips_) {
      const bool anti = std::popcount(s & f.mask) == 1;
      const double w = anti ? f.w_anti : f.w_par;
      if (w == 0.0) continue;
      r(basis_.index[s ^ f.mask]) += w * va;
    }
  }
  return r;
}

Eigen::MatrixXd SectorOperator::dense() const {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim(), dim());
  for (int a = 0; a < dim(); ++a) h(a, a) = diag_[a];
  for (int a = 0; a < dim(); ++a) {
    const uint32_t s = basis_.states[a];
    for (const auto& f : flips_) {
      const bool anti = std::popcount(s & f.mask) == 1;
      const double w = anti ? f.w_anti : f.w_par;
      h(basis_.index[s ^ f.mask], a) += w;
    }
  }
  return h;
}

namespace {

SpectrumResult dense_solve(const SectorOperator& op, int sector, int count) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.dense());
  SpectrumResult r;
  r.sector = sector;
  const int k = std::min<int>(count, op.dim());
  for (int i = 0; i < k; ++i) {
    r.energies.push_back(es.eigenvalues()(i));
    r.vectors.push_back(es.eigenvectors().col(i));
  }
  return r;
}

// Lanczos with full reorthogonalization, deterministic all-ones seed.
SpectrumResult lanczos_solve(const SectorOperator& op, int sector, int count,
                             bool& converged) {
  const int dim = op.dim();
  const int max_iter = std::min(dim, 400);
  std::vector<Eigen::VectorXd> basis;
  std::vector<double> alpha, beta;
  Eigen::VectorXd v = Eigen::VectorXd::Ones(dim).normalized();
  basis.push_back(v);
  Eigen::VectorXd prev_ritz;
  converged = false;
  int m = 0;
  for (int j = 0; j < max_iter; ++j) {
    Eigen::VectorXd w = op.apply(basis[j]);
    if (j > 0) w -= beta[j - 1] * basis[j - 1];
    alpha.push_back(basis[j].dot(w));
    w -= alpha[j] * basis[j];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : basis) w -= u.dot(w) * u;
    const double b = w.norm();
    m = j + 1;
    if (b < 1e-13) {  // exact invariant subspace
      converged = true;
      break;
    }
    beta.push_back(b);
    basis.push_back(w / b);
    if (m >= std::max(2 * count, 10) && m % 5 == 0) {
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) t(i, i) = alpha[i];
      for (int i = 0; i + 1 < m; ++i) t(i, i + 1) = t(i + 1, i) = beta[i];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
      Eigen::VectorXd ritz = es.eigenvalues().head(std::min(count, m));
      if (prev_ritz.size() == ritz.size() &&
          (ritz - prev_ritz).cwiseAbs().maxCoeff() < 1e-13) {
        converged = true;
        break;
      }
      prev_ritz = ritz;
    }
  }
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) t(i, i) = alpha[i];
  for (int i = 0; i + 1 < m; ++i) t(i, i + 1) = t(i + 1, i) = beta[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  SpectrumResult r;
  r.sector = sector;
  const int k = std::min(count, m);
  for (int i = 0; i < k; ++i) {
    r.energies.push_back(es.eigenvalues()(i));
    Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
    for (int j = 0; j < m; ++j) x += es.eigenvectors()(j, i) * basis[j];
    r.vectors.push_back(x.normalized());
  }
  return r;
}

}  // namespace

SpectrumResult lowest_states(const SystemSpec& spec, int sector, int count) {
  const CouplingGraph graph = coupling_graph(spec);
  if (graph.sites > 16) throw std::invalid_argument("exactdiag: N > 16 rejected");
  SectorOperator op(graph, sector);
  if (graph.sites <= 12) return dense_solve(op, sector, count);
  bool ok = false;
  SpectrumResult r = lanczos_solve(op, sector, count, ok);
  if (!ok) {
    if (graph.sites <= 14) return dense_solve(op, sector, count);
    throw std::runtime_error("exactdiag: Lanczos failed to converge");
  }
  return r;
}

StateVec embed(const ParityBasis& basis, const Eigen::VectorXd& v) {
  StateVec full = StateVec::Zero(1 << basis.n_sites);
  for (size_t a = 0; a < basis.states.size(); ++a) full(basis.states[a]) = v(a);
  return full;
}

GSObservables gs_observables(const SystemSpec& spec) {
  SpectrumResult plus = lowest_states(spec, +1, 1);
  SpectrumResult minus = lowest_states(spec, -1, 1);
  GSObservables g;
  const bool plus_lower = plus.energies[0] <= minus.energies[0];
  const SpectrumResult& lo = plus_lower ? plus : minus;
  const SpectrumResult& hi = plus_lower ? minus : plus;
  g.energy = lo.energies[0];
  g.parity = lo.sector;
  g.other_energy = hi.energies[0];
  g.gap_between_sectors = hi.energies[0] - lo.energies[0];
  g.near_degenerate = g.gap_between_sectors < 1e-12;
  const ParityBasis blo = ParityBasis::build(2 * spec.pair_count(), lo.sector);
  const ParityBasis bhi = ParityBasis::build(2 * spec.pair_count(), hi.sector);
  g.state = embed(blo, lo.vectors[0]);
  g.other_state = embed(bhi, hi.vectors[0]);
  return g;
}

}  // namespace dimer
