#include "dimer/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace dimer {

namespace {

constexpr double kPsdTol = 1e-10;

Eigen::VectorXd clipped_spectrum(const Density& rho) {
  Eigen::SelfAdjointEigenSolver<Density> es(rho, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) < -kPsdTol) throw std::invalid_argument("density matrix is not PSD");
    ev(i) = std::max(ev(i), 0.0);
  }
  return ev;
}

Density matrix_sqrt(const Density& rho) {
  Eigen::SelfAdjointEigenSolver<Density> es(rho);
  Eigen::VectorXd ev = es.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) < -kPsdTol) throw std::invalid_argument("density matrix is not PSD");
    ev(i) = std::sqrt(std::max(ev(i), 0.0));
  }
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Density SingleQubitDensity::matrix() const {
  Density rho = Density::Zero(2, 2);
  rho(0, 0) = p_minus;
  rho(1, 1) = p_plus;
  return rho;
}

double concurrence(const Density& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("concurrence requires a 4x4 density");
  clipped_spectrum(rho);  // PSD gate
  // sigma_y x sigma_y in the product basis is the anti-diagonal (-1,1,1,-1).
  Density yy = Density::Zero(4, 4);
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;
  Density r = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Density> es(r);
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i)
    lam[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double entropy(const Density& rho, double log_base) {
  Eigen::VectorXd ev = clipped_spectrum(rho);
  double s = 0.0;
  for (int i = 0; i < ev.size(); ++i)
    if (ev(i) > 0.0) s -= ev(i) * std::log(ev(i));
  return std::max(0.0, s / std::log(log_base));
}

double fidelity(const Density& rho, const Density& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw std::invalid_argument("fidelity: dimension mismatch");
  Density srho = matrix_sqrt(rho);
  Eigen::VectorXd ev = clipped_spectrum(srho * sigma * srho);
  double f = 0.0;
  for (int i = 0; i < ev.size(); ++i) f += std::sqrt(ev(i));
  return std::min(f, 1.0);
}

namespace {

// Shared index bookkeeping: returns (sorted keep list, traced list).
std::pair<std::vector<int>, std::vector<int>> split_sites(int n_sites,
                                                          std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  for (size_t m = 0; m < keep.size(); ++m) {
    if (keep[m] < 0 || keep[m] >= n_sites)
      throw std::out_of_range("partial_trace: site index out of range");
    if (m > 0 && keep[m] == keep[m - 1])
      throw std::invalid_argument("partial_trace: duplicate site");
  }
  std::vector<int> traced;
  for (int i = 0; i < n_sites; ++i)
    if (!std::binary_search(keep.begin(), keep.end(), i)) traced.push_back(i);
  return {std::move(keep), std::move(traced)};
}

// Global basis index from a kept-subsystem index (first kept site is the
// most significant bit of `r`) and a traced-subsystem index.
int assemble(const std::vector<int>& keep, const std::vector<int>& traced, int r,
             int t) {
  int g = 0;
  const int nk = (int)keep.size();
  for (int m = 0; m < nk; ++m)
    if (r >> (nk - 1 - m) & 1) g |= 1 << keep[m];
  for (size_t m = 0; m < traced.size(); ++m)
    if (t >> m & 1) g |= 1 << traced[m];
  return g;
}

}  // namespace

Density partial_trace(const StateVec& state, int n_sites, std::vector<int> keep_sites) {
  if (state.size() != (1LL << n_sites))
    throw std::invalid_argument("partial_trace: state dimension mismatch");
  auto [keep, traced] = split_sites(n_sites, std::move(keep_sites));
  const int dk = 1 << keep.size(), dt = 1 << traced.size();
  Density rho = Density::Zero(dk, dk);
  for (int t = 0; t < dt; ++t)
    for (int r = 0; r < dk; ++r) {
      const auto ar = state(assemble(keep, traced, r, t));
      if (ar == std::complex<double>(0)) continue;
      for (int c = 0; c < dk; ++c)
        rho(r, c) += ar * std::conj(state(assemble(keep, traced, c, t)));
    }
  return rho;
}

Density partial_trace(const Density& rho_in, int n_sites, std::vector<int> keep_sites) {
  if (rho_in.rows() != (1LL << n_sites))
    throw std::invalid_argument("partial_trace: density dimension mismatch");
  auto [keep, traced] = split_sites(n_sites, std::move(keep_sites));
  const int dk = 1 << keep.size(), dt = 1 << traced.size();
  Density rho = Density::Zero(dk, dk);
  for (int t = 0; t < dt; ++t)
    for (int r = 0; r < dk; ++r)
      for (int c = 0; c < dk; ++c)
        rho(r, c) += rho_in(assemble(keep, traced, r, t), assemble(keep, traced, c, t));
  return rho;
}

Eigen::Vector4d pair_state(double theta, double phi) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Vector4d a;
  a << c * std::cos(phi / 2), s / std::sqrt(2.0), s / std::sqrt(2.0),
      c * std::sin(phi / 2);
  return a;
}

namespace {

Eigen::Vector4d parity_image(const Eigen::Vector4d& a) {
  // local parity diag(1,-1,-1,1); equals the theta -> -theta partner.
  Eigen::Vector4d b = a;
  b(1) = -b(1);
  b(2) = -b(2);
  return b;
}

}  // namespace

RestoredPair restore_parity(const std::vector<Eigen::Vector4d>& plus_family,
                            OverlapMode mode) {
  if (plus_family.empty()) throw std::invalid_argument("restore_parity: empty family");
  RestoredPair r;
  r.overlap = 1.0;
  for (const auto& a : plus_family) r.overlap *= a.dot(parity_image(a));
  if (mode == OverlapMode::Keep) {
    r.p_plus = (1 + std::abs(r.overlap)) / 2;
    r.p_minus = (1 - std::abs(r.overlap)) / 2;
  } else {
    r.p_plus = r.p_minus = 0.5;
  }
  return r;
}

Density restored_cluster_density(double theta, double phi, int n_pairs,
                                 OverlapMode mode) {
  const Eigen::Vector4d a = pair_state(theta, phi);
  const Eigen::Vector4d b = parity_image(a);
  if (mode == OverlapMode::Neglect)
    return 0.5 * (a * a.transpose() + b * b.transpose()).cast<std::complex<double>>();
  // Exact reduced state of the even-parity combination: cross terms carry
  // the overlap product over the other n-1 pairs.
  const double o = a.dot(b);
  const double rest = std::pow(o, n_pairs - 1);
  const double full = o * rest;
  Eigen::Matrix4d m = (a * a.transpose() + b * b.transpose() +
                       rest * (a * b.transpose() + b * a.transpose())) /
                      (2 * (1 + full));
  return m.cast<std::complex<double>>();
}

GMFReducedStates gmf_reduced_states(double theta, double phi) {
  GMFReducedStates out;
  out.rho12 = restored_cluster_density(theta, phi, 2, OverlapMode::Neglect);
  const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
  out.rho1.p_plus = (1 - c2 * std::cos(phi)) / 2;
  out.rho1.p_minus = (1 + c2 * std::cos(phi)) / 2;
  // rho23 mixes the pre-restoration single-spin marginals of the +-theta pair
  // states (one spin from each of two adjacent pairs).
  const Eigen::Vector4d a = pair_state(theta, phi);
  const Eigen::Vector4d b = parity_image(a);
  auto marginal = [](const Eigen::Vector4d& v) {
    Density psi = (v * v.transpose()).cast<std::complex<double>>();
    Density r(2, 2);
    r(0, 0) = psi(0, 0) + psi(1, 1);
    r(0, 1) = psi(0, 2) + psi(1, 3);
    r(1, 0) = psi(2, 0) + psi(3, 1);
    r(1, 1) = psi(2, 2) + psi(3, 3);
    return r;
  };
  Density ra = marginal(a), rb = marginal(b);
  out.rho23 = 0.5 * (Eigen::kroneckerProduct(ra, ra) + Eigen::kroneckerProduct(rb, rb));
  return out;
}

Concurrence12 gmf_concurrence12(double theta, double phi) {
  const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
  const double t = c2 * (1 + std::sin(phi));
  return {std::abs(t - 1), t > 1 ? Alignment::Parallel : Alignment::Antiparallel};
}

MFRestoredStates mf_restored_states(double theta) {
  MFRestoredStates out;
  const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
  const double s2 = std::sin(theta / 2) * std::sin(theta / 2);
  const double q = std::sin(theta) * std::sin(theta) / 4;  // = c2*s2
  Density rho = Density::Zero(4, 4);
  rho(0, 0) = c2 * c2;
  rho(1, 1) = q;
  rho(2, 2) = q;
  rho(3, 3) = s2 * s2;
  rho(0, 3) = rho(3, 0) = q;
  rho(1, 2) = rho(2, 1) = q;
  out.rho12 = rho;
  out.rho1.p_plus = (1 - std::cos(theta)) / 2;
  out.rho1.p_minus = (1 + std::cos(theta)) / 2;
  return out;
}

}  // namespace dimer
