#include "dimer/freefermion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace dimer {

namespace {

constexpr double kPi = 3.14159265358979323846;
using cd = std::complex<double>;

void check_supported(const SystemSpec& spec) {
  if (spec.topology != Topology::DimerChain || spec.boundary != Boundary::Cyclic)
    throw std::invalid_argument("freefermion requires a cyclic dimerized chain");
  if (spec.Jz != 0.0)
    throw std::invalid_argument("freefermion requires Jz = 0");
}

// Real-space quadratic form M = [[A, Bp], [-Bp, -A]] acting on (c+; c)
// coordinates; boundary bond carries the parity-dependent sign (antiperiodic
// in the even sector).
Eigen::MatrixXd quadratic_form(const SystemSpec& spec, int parity) {
  const int N = spec.site_count();
  const double Jp = (spec.Jx + spec.Jy) / 4, Jm = (spec.Jx - spec.Jy) / 4;
  const double alpha = spec.alphas[0];
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
  Eigen::MatrixXd Bp = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i < N; ++i) A(i, i) = spec.B;
  for (int j = 0; j < N; ++j) {
    const int j1 = (j + 1) % N;
    const double r = (j % 2 == 0) ? 1.0 : alpha;
    const double eta = (j == N - 1) ? (parity == +1 ? -1.0 : 1.0) : 1.0;
    A(j, j1) += -eta * r * Jp;
    A(j1, j) += -eta * r * Jp;
    Bp(j, j1) += -eta * r * Jm;
    Bp(j1, j) += eta * r * Jm;
  }
  Eigen::MatrixXd M(2 * N, 2 * N);
  M << A, Bp, -Bp, -A;
  return M;
}

struct BdgModes {
  Eigen::MatrixXd U, V;      // N x N, columns are modes, lambda >= 0
  Eigen::VectorXd lambdas;   // ascending
};

// Diagonalize M and return the nonnegative-energy mode pairs. Within a
// (near-)zero eigenspace the eigensolver's vectors need not respect the
// particle-hole pairing; rebuild them from the swap-operator eigenvectors.
BdgModes bdg_modes(const Eigen::MatrixXd& M) {
  const int N = (int)M.rows() / 2;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  const auto& ev = es.eigenvalues();
  const auto& evec = es.eigenvectors();
  const double ztol = 1e-11;
  std::vector<int> pos, zero;
  for (int i = 0; i < 2 * N; ++i) {
    if (ev(i) > ztol)
      pos.push_back(i);
    else if (ev(i) > -ztol)
      zero.push_back(i);
  }
  BdgModes out;
  const int nmodes = (int)pos.size() + (int)zero.size() / 2;
  if (nmodes != N) throw std::runtime_error("freefermion: mode pairing failed");
  out.U.resize(N, N);
  out.V.resize(N, N);
  out.lambdas.resize(N);
  int m = 0;
  // zero modes first (they are the smallest)
  if (!zero.empty()) {
    const int nz = (int)zero.size();
    Eigen::MatrixXd Z(2 * N, nz);
    for (int i = 0; i < nz; ++i) Z.col(i) = evec.col(zero[i]);
    // swap operator S(u;v) = (v;u) restricted to the null space
    Eigen::MatrixXd SZ(2 * N, nz);
    SZ.topRows(N) = Z.bottomRows(N);
    SZ.bottomRows(N) = Z.topRows(N);
    Eigen::MatrixXd s_small = Z.transpose() * SZ;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ss(s_small);
    std::vector<Eigen::VectorXd> p_vecs, m_vecs;
    for (int i = 0; i < nz; ++i) {
      Eigen::VectorXd w = Z * ss.eigenvectors().col(i);
      if (ss.eigenvalues()(i) > 0)
        p_vecs.push_back(w);
      else
        m_vecs.push_back(w);
    }
    if (p_vecs.size() != m_vecs.size())
      throw std::runtime_error("freefermion: unbalanced zero modes");
    for (size_t i = 0; i < p_vecs.size(); ++i) {
      Eigen::VectorXd w = (p_vecs[i] + m_vecs[i]) / std::sqrt(2.0);
      w.normalize();
      out.U.col(m) = w.head(N);
      out.V.col(m) = w.tail(N);
      out.lambdas(m) = 0.0;
      ++m;
    }
  }
  for (int i : pos) {
    out.U.col(m) = evec.col(i).head(N);
    out.V.col(m) = evec.col(i).tail(N);
    out.lambdas(m) = ev(i);
    ++m;
  }
  return out;
}

int vacuum_parity(const Eigen::MatrixXd& U, const Eigen::MatrixXd& V) {
  const int N = (int)U.rows();
  Eigen::MatrixXd T(2 * N, 2 * N);
  T << U, V, V, U;
  return T.determinant() > 0 ? +1 : -1;
}

}  // namespace

Eigen::Matrix4cd block_matrix(double k, const SystemSpec& spec) {
  check_supported(spec);
  const int n = spec.n_pairs;
  const double Jp = (spec.Jx + spec.Jy) / 4, Jm = (spec.Jx - spec.Jy) / 4;
  const cd ph = std::exp(cd(0, -2 * kPi * k / n));
  const cd jpk = Jp * (1.0 + spec.alphas[0] * ph);
  const cd jmk = Jm * (1.0 - spec.alphas[0] * ph);
  Eigen::Matrix4cd h;
  const double B = spec.B;
  h << B, -jpk, 0, -jmk,                      //
      -std::conj(jpk), B, std::conj(jmk), 0,  //
      0, jmk, -B, jpk,                        //
      -std::conj(jmk), 0, std::conj(jpk), -B;
  return h;
}

std::pair<double, double> block_lambdas(double k, const SystemSpec& spec) {
  check_supported(spec);
  const int n = spec.n_pairs;
  const double Jp = (spec.Jx + spec.Jy) / 4, Jm = (spec.Jx - spec.Jy) / 4;
  const cd ph = std::exp(cd(0, -2 * kPi * k / n));
  const cd jpk = Jp * (1.0 + spec.alphas[0] * ph);
  const cd jmk = Jm * (1.0 - spec.alphas[0] * ph);
  const double B2 = spec.B * spec.B;
  const double delta = B2 + std::norm(jpk) + std::norm(jmk);
  const double inner =
      std::abs(cd(B2, 0) - (jpk + jmk) * (std::conj(jpk) - std::conj(jmk)));
  const double root = std::sqrt(std::max(0.0, delta * delta - inner * inner));
  return {std::sqrt(std::max(0.0, delta + root)),
          std::sqrt(std::max(0.0, delta - root))};
}

SectorSpectrum sector_spectrum(const SystemSpec& spec, int parity) {
  check_supported(spec);
  const int n = spec.n_pairs;
  SectorSpectrum s;
  s.parity = parity;
  BdgModes bm = bdg_modes(quadratic_form(spec, parity));
  s.ground_energy = -0.5 * bm.lambdas.sum();
  s.lambda_min = bm.lambdas.minCoeff();
  if (vacuum_parity(bm.U, bm.V) != parity) {
    // occupy the cheapest quasiparticle to land in the requested sector
    int imin = 0;
    bm.lambdas.minCoeff(&imin);
    s.ground_energy += bm.lambdas(imin);
    bm.U.col(imin).swap(bm.V.col(imin));
    s.parity_flip_applied = true;
  }
  s.U = bm.U;
  s.V = bm.V;
  for (int m = 0; m < n; ++m) {
    const double k = parity == +1 ? m + 0.5 : m;
    auto [lp, lm] = block_lambdas(k, spec);
    s.modes.push_back({k, lp, lm});
  }
  return s;
}

ExactCriticalFields exact_critical_fields(const SystemSpec& spec) {
  const double a = spec.alphas[0];
  ExactCriticalFields out;
  const double r1 = (spec.Jy - a * spec.Jx) * (spec.Jx - a * spec.Jy);
  if (r1 >= 0) out.B_c1_ex = std::sqrt(r1) / 2;
  const double r2 = (a * spec.Jx + spec.Jy) * (spec.Jx + a * spec.Jy);
  if (r2 >= 0) out.B_c2_ex = std::sqrt(r2) / 2;
  return out;
}

CorrelationSet contractions(const SystemSpec& spec, int parity) {
  SectorSpectrum s = sector_spectrum(spec, parity);
  const int N = spec.site_count();
  CorrelationSet c;
  c.f = s.V * s.V.transpose() - 0.5 * Eigen::MatrixXd::Identity(N, N);
  c.g = s.V * s.U.transpose();
  return c;
}

SpinCorrelators spin_correlators(const CorrelationSet& c, int i, int j) {
  if (!(i < j)) throw std::invalid_argument("spin_correlators requires i < j");
  SpinCorrelators out;
  out.sz_i = c.f(i, i);
  out.sz_j = c.f(j, j);
  out.szsz = c.f(i, i) * c.f(j, j) - c.f(i, j) * c.f(i, j) + c.g(i, j) * c.g(i, j);
  const int d = j - i;
  if (d == 1) {  // direct contraction, no string
    out.spsm = c.f(i, j);
    out.spsp = c.g(i, j);
    return out;
  }
  Eigen::MatrixXd ap(d, d), am(d, d);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      ap(p, q) = 2 * (c.f(i + p, i + q + 1) + c.g(i + p, i + q + 1));
      am(p, q) = 2 * (c.f(i + p + 1, i + q) + c.g(i + p + 1, i + q));
    }
  const double dp = ap.determinant(), dm = am.determinant();
  out.spsm = (dp + dm) / 4;
  out.spsp = (dp - dm) / 4;
  return out;
}

Density exact_rdm(const CorrelationSet& c, std::vector<int> sites) {
  std::sort(sites.begin(), sites.end());
  if (sites.empty() || sites.size() > 2)
    throw std::invalid_argument("exact_rdm supports 1 or 2 sites");
  if (sites.size() == 1) {
    const int i = sites[0];
    Density rho = Density::Zero(2, 2);
    rho(0, 0) = 0.5 - c.f(i, i);
    rho(1, 1) = 0.5 + c.f(i, i);
    return rho;
  }
  const auto sc = spin_correlators(c, sites[0], sites[1]);
  const double sxsx = (sc.spsm + sc.spsp) / 2;
  const double sysy = (sc.spsm - sc.spsp) / 2;
  Density rho = Density::Zero(4, 4);
  // diagonal from z correlators; basis {dd, du, ud, uu}, site i first
  rho(0, 0) = 0.25 - sc.sz_i / 2 - sc.sz_j / 2 + sc.szsz;
  rho(1, 1) = 0.25 - sc.sz_i / 2 + sc.sz_j / 2 - sc.szsz;
  rho(2, 2) = 0.25 + sc.sz_i / 2 - sc.sz_j / 2 - sc.szsz;
  rho(3, 3) = 0.25 + sc.sz_i / 2 + sc.sz_j / 2 + sc.szsz;
  rho(1, 2) = rho(2, 1) = sxsx + sysy;  // <s+_i s-_j> + c.c.
  rho(0, 3) = rho(3, 0) = sxsx - sysy;  // <s+_i s+_j> + c.c.
  return rho;
}

Density exact_rdm(const SystemSpec& spec, int parity, std::vector<int> sites) {
  return exact_rdm(contractions(spec, parity), std::move(sites));
}

namespace {

double sector_gap(const SystemSpec& spec, double B) {
  SystemSpec s = spec.with_field(B);
  return sector_spectrum(s, +1).ground_energy - sector_spectrum(s, -1).ground_energy;
}

std::vector<double> scan_crossings(const SystemSpec& spec, double b_lo, double b_hi,
                                   int resolution) {
  std::vector<double> out;
  double prev = sector_gap(spec, b_lo);
  for (int i = 1; i <= resolution; ++i) {
    const double b = b_lo + (b_hi - b_lo) * i / resolution;
    const double cur = sector_gap(spec, b);
    if ((prev < 0) != (cur < 0)) {
      double lo = b_lo + (b_hi - b_lo) * (i - 1) / resolution, hi = b;
      double flo = prev;
      while (hi - lo > 1e-10) {
        const double mid = (lo + hi) / 2, fmid = sector_gap(spec, mid);
        if ((fmid < 0) == (flo < 0)) {
          lo = mid;
          flo = fmid;
        } else {
          hi = mid;
        }
      }
      out.push_back((lo + hi) / 2);
    }
    prev = cur;
  }
  return out;
}

}  // namespace

ParityCrossings parity_crossings(const SystemSpec& spec, double b_lo, double b_hi,
                                 int resolution) {
  check_supported(spec);
  ParityCrossings pc;
  pc.fields = scan_crossings(spec, b_lo, b_hi, resolution);
  pc.resolution_suspect =
      scan_crossings(spec, b_lo, b_hi, 2 * resolution).size() != pc.fields.size();
  return pc;
}

}  // namespace dimer
