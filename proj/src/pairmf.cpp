#include "dimer/pairmf.hpp"

#include <cmath>
#include <stdexcept>

namespace dimer {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Couplings {
  double B, Jx, Jy, Jz, Jp, Jm, alpha;
};

Couplings unpack(const SystemSpec& spec) {
  return {spec.B,
          spec.Jx,
          spec.Jy,
          spec.Jz,
          (spec.Jx + spec.Jy) / 4,
          (spec.Jx - spec.Jy) / 4,
          effective_alpha(spec)};
}

double energy(const Couplings& c, double theta, double phi) {
  const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
  const double s2 = 1 - c2;
  const double st2 = std::sin(theta) * std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  return -((c.B * cp + c.Jm * sp) * c2 + c.Jp * s2 +
           c.alpha * c.Jx / 8 * st2 * (1 + sp)) -
         c.Jz / 4 * (std::cos(theta) + c.alpha * cp * cp * c2 * c2);
}

// Analytic gradient of the energy functional.
void gradient(const Couplings& c, double theta, double phi, double& gt, double& gp) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double c2 = (1 + ct) / 2;
  const double cp = std::cos(phi), sp = std::sin(phi);
  gt = st * ((c.B * cp + c.Jm * sp - c.Jp) / 2 - c.alpha * c.Jx / 4 * (1 + sp) * ct +
             c.Jz / 4 * (1 + c.alpha * cp * cp * c2));
  gp = (c.B * sp - c.Jm * cp) * c2 - c.alpha * c.Jx / 8 * st * st * cp +
       c.Jz * c.alpha / 2 * sp * cp * c2 * c2;
}

// Energy-minimizing phi at fixed theta: grid + golden section, then Newton
// on the phi gradient.
double stationary_phi(const Couplings& c, double theta) {
  const int n = 128;
  double best = 0, ebest = 1e300;
  for (int i = 0; i <= n; ++i) {
    const double p = -kPi / 2 + kPi * i / n;
    const double e = energy(c, theta, p);
    if (e < ebest) {
      ebest = e;
      best = p;
    }
  }
  double lo = std::max(-kPi / 2, best - kPi / n);
  double hi = std::min(kPi / 2, best + kPi / n);
  const double gr = (std::sqrt(5.0) - 1) / 2;
  double p1 = hi - gr * (hi - lo), p2 = lo + gr * (hi - lo);
  double e1 = energy(c, theta, p1), e2 = energy(c, theta, p2);
  for (int it = 0; it < 80; ++it) {
    if (e1 < e2) {
      hi = p2;
      p2 = p1;
      e2 = e1;
      p1 = hi - gr * (hi - lo);
      e1 = energy(c, theta, p1);
    } else {
      lo = p1;
      p1 = p2;
      e1 = e2;
      p2 = lo + gr * (hi - lo);
      e2 = energy(c, theta, p2);
    }
  }
  double p = (lo + hi) / 2;
  for (int it = 0; it < 40; ++it) {  // polish the stationarity condition
    double gt, gp, gt2, gp2;
    const double h = 1e-7;
    gradient(c, theta, p, gt, gp);
    gradient(c, theta, p + h, gt2, gp2);
    const double d2 = (gp2 - gp) / h;
    if (d2 <= 0) break;
    const double pn = std::clamp(p - gp / d2, -kPi / 2, kPi / 2);
    if (std::abs(pn - p) < 1e-16) {
      p = pn;
      break;
    }
    p = pn;
  }
  return p;
}

// gtheta/sin(theta) = 0 is linear in x = cos(theta) at fixed phi.
bool theta_from_phi(const Couplings& c, double phi, double& theta) {
  const double cp = std::cos(phi), sp = std::sin(phi);
  const double a =
      -c.alpha * c.Jx / 4 * (1 + sp) + c.Jz * c.alpha / 8 * cp * cp;
  const double b = (c.B * cp + c.Jm * sp - c.Jp) / 2 + c.Jz / 4 +
                   c.Jz * c.alpha / 8 * cp * cp;
  if (a == 0) return false;
  const double x = -b / a;
  if (!(x > -1 + 1e-12 && x < 1 - 1e-12)) return false;
  theta = std::acos(x);
  return true;
}

// Damped 2D Newton on the analytic gradient (numeric Hessian).
bool newton_polish(const Couplings& c, double& theta, double& phi, bool& psd) {
  const double h = 1e-6;
  for (int it = 0; it < 80; ++it) {
    double gt, gp;
    gradient(c, theta, phi, gt, gp);
    double gt1, gp1, gt2, gp2;
    gradient(c, theta + h, phi, gt1, gp1);
    gradient(c, theta, phi + h, gt2, gp2);
    const double htt = (gt1 - gt) / h, htp = (gt2 - gt) / h;
    const double hpt = (gp1 - gp) / h, hpp = (gp2 - gp) / h;
    const double det = htt * hpp - htp * hpt;
    if (std::abs(det) < 1e-14) break;
    double dt = -(hpp * gt - htp * gp) / det;
    double dp = -(-hpt * gt + htt * gp) / det;
    const double cap = 0.3;
    dt = std::clamp(dt, -cap, cap);
    dp = std::clamp(dp, -cap, cap);
    theta += dt;
    phi += dp;
    if (std::abs(dt) + std::abs(dp) < 1e-14) break;
  }
  double gt, gp;
  gradient(c, theta, phi, gt, gp);
  double gt1, gp1, gt2, gp2;
  gradient(c, theta + h, phi, gt1, gp1);
  gradient(c, theta, phi + h, gt2, gp2);
  const double htt = (gt1 - gt) / h, hpp = (gp2 - gp) / h, htp = (gt2 - gt) / h;
  psd = htt >= -1e-8 && htt * hpp - htp * htp >= -1e-8;
  return std::hypot(gt, gp) < 1e-10;
}

double mean_sx_of(double theta, double phi) {
  return std::sin(theta) / (2 * std::sqrt(2.0)) *
         (std::cos(phi / 2) + std::sin(phi / 2));
}

PairMFSolution make_solution(const Couplings& c, double theta, double phi) {
  PairMFSolution s;
  s.theta = theta;
  s.phi = phi;
  s.energy_per_pair = energy(c, theta, phi);
  s.mean_sx = mean_sx_of(theta, phi);
  if (theta >= kPi - 1e-12) {
    s.phase = PairPhase::Dimerized;
    s.theta = kPi;
    s.phi = 0;  // the pair state at theta = pi does not depend on phi
    s.mean_sx = 0;
  } else if (theta <= 1e-12) {
    s.phase = PairPhase::Aligned;
    s.theta = 0;
    s.mean_sx = 0;
  } else {
    s.phase = PairPhase::ParityBreaking;
    s.degenerate = true;
  }
  return s;
}

}  // namespace

double pair_energy(double theta, double phi, const SystemSpec& spec) {
  return energy(unpack(spec), theta, phi);
}

PairMFSolution pairmf_solve(const SystemSpec& spec) {
  if (std::abs(spec.Jy) >= spec.Jx)
    throw std::invalid_argument("pairmf_solve requires |Jy| < Jx");
  const Couplings c = unpack(spec);

  // Parity-preserving candidates: fully dimerized and field-aligned.
  const double e_dim = energy(c, kPi, 0.0);
  const double phi_al = stationary_phi(c, 0.0);
  const double e_al = energy(c, 0.0, phi_al);

  // Interior (parity-breaking) candidate: alternate the two stationarity
  // conditions, then Newton on the joint gradient.
  bool have_int = false, fallback = false;
  double th = kPi / 2, ph = phi_al / 2;
  bool iter_ok = false;
  for (int it = 0; it < 300; ++it) {
    double th_new;
    if (!theta_from_phi(c, ph, th_new)) break;
    const double ph_new = stationary_phi(c, th_new);
    const double delta = std::abs(th_new - th) + std::abs(ph_new - ph);
    th = (th + th_new) / 2;  // mild damping keeps oscillatory cases stable
    ph = (ph + ph_new) / 2;
    if (delta < 1e-11) {
      iter_ok = true;
      break;
    }
  }
  double e_int = 1e300;
  bool psd = false;
  if (iter_ok && newton_polish(c, th, ph, psd) && psd && th > 1e-9 &&
      th < kPi - 1e-9 && std::abs(ph) < kPi / 2 + 1e-9) {
    have_int = true;
    e_int = energy(c, th, ph);
  } else {
    // dense grid + polish, flagged
    double bt = 0, bp = 0, be = 1e300;
    for (int i = 1; i < 61; ++i)
      for (int j = 0; j <= 61; ++j) {
        const double t = kPi * i / 61, p = -kPi / 2 + kPi * j / 61;
        const double e = energy(c, t, p);
        if (e < be) {
          be = e;
          bt = t;
          bp = p;
        }
      }
    th = bt;
    ph = bp;
    if (newton_polish(c, th, ph, psd) && psd && th > 1e-6 && th < kPi - 1e-6) {
      have_int = true;
      fallback = true;
      e_int = energy(c, th, ph);
    }
  }

  // Branch comparison; prefer parity-preserving on ties.
  const double e_par = std::min(e_dim, e_al);
  PairMFSolution sol;
  if (have_int && e_int < e_par - 1e-12) {
    sol = make_solution(c, th, ph);
    sol.grid_fallback = fallback;
  } else if (e_dim <= e_al) {
    sol = make_solution(c, kPi, stationary_phi(c, kPi));
  } else {
    sol = make_solution(c, 0.0, phi_al);
  }
  return sol;
}

namespace {

// theta -> 0 limit of the interior stationarity condition along the aligned
// branch; its root in B is the upper critical field.
double aligned_edge(const Couplings& c0, double B) {
  Couplings c = c0;
  c.B = B;
  const double phi = stationary_phi(c, 0.0);
  const double cp = std::cos(phi), sp = std::sin(phi);
  return (B * cp + c.Jm * sp - c.Jp) / 2 - c.alpha * c.Jx / 4 * (1 + sp) +
         c.Jz / 4 * (1 + c.alpha * cp * cp);
}

}  // namespace

CriticalFields critical_fields(const SystemSpec& spec) {
  const Couplings c = unpack(spec);
  CriticalFields out;
  const double r1 = (c.Jx - c.Jz) * (c.Jy - c.Jz - 2 * c.alpha * c.Jx);
  if (r1 >= 0) out.B_c1 = std::sqrt(r1) / 2;
  if (c.Jz == 0) {
    const double t = c.Jp + c.alpha * c.Jx / 2;
    const double u = t + std::sqrt(t * t + 2 * c.alpha * c.Jx * c.Jm);
    const double r2 = u * u - 4 * c.Jm * c.Jm;
    if (r2 >= 0) out.B_c2 = std::sqrt(r2) / 2;
  } else {
    // numeric root of the aligned-branch edge condition
    double lo = 0, hi = 4 * (c.Jx + std::abs(c.Jz)) * (1 + std::abs(c.alpha));
    double flo = aligned_edge(c, lo), fhi = aligned_edge(c, hi);
    if (flo < 0 && fhi > 0) {
      for (int it = 0; it < 200; ++it) {
        const double mid = (lo + hi) / 2;
        if (aligned_edge(c, mid) < 0)
          lo = mid;
        else
          hi = mid;
        if (hi - lo < 1e-13) break;
      }
      out.B_c2 = (lo + hi) / 2;
    }
  }
  return out;
}

AlphaCritical alpha_critical(const SystemSpec& spec) {
  AlphaCritical a;
  const double y = spec.Jy - spec.Jz;
  a.value = y / (2 * spec.Jx);
  a.parity_window_absent = y < 0 && effective_alpha(spec) <= -y / (2 * spec.Jx);
  return a;
}

Eigen::Matrix4d pair_hamiltonian(const SystemSpec& spec, double mean_sx,
                                 double mean_sz) {
  const double alpha = effective_alpha(spec);
  const double lx = alpha * spec.Jx * mean_sx;
  const double lz = alpha * spec.Jz * mean_sz;
  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
  h(0, 0) = -spec.B - spec.Jz / 4 + lz;
  h(1, 1) = h(2, 2) = spec.Jz / 4;
  h(3, 3) = spec.B - spec.Jz / 4 - lz;
  h(0, 3) = h(3, 0) = (spec.Jy - spec.Jx) / 4;
  h(1, 2) = h(2, 1) = -(spec.Jx + spec.Jy) / 4;
  h(0, 1) = h(1, 0) = h(0, 2) = h(2, 0) = -lx / 2;
  h(1, 3) = h(3, 1) = h(2, 3) = h(3, 2) = -lx / 2;
  return h;
}

PairMFSolution selfconsistent_iterate(const SystemSpec& spec, double seed_sx,
                                      double tol, int max_iter) {
  const double alpha = effective_alpha(spec);
  double mx = seed_sx, mz = -0.25;
  double damp = 1.0, prev_dx = 0.0;
  PairMFSolution sol;
  sol.converged = false;
  Eigen::Vector4d gs;
  double e0 = 0;
  int it = 0;
  for (; it < max_iter; ++it) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(
        pair_hamiltonian(spec, mx, mz));
    gs = es.eigenvectors().col(0);
    e0 = es.eigenvalues()(0);
    // single-spin means from the (swap-symmetric) pair ground state
    const double nx = (gs(0) + gs(3)) * (gs(1) + gs(2)) / 2;
    const double nz =
        (-gs(0) * gs(0) + gs(3) * gs(3)) / 2;  // (<s1z>+<s2z>)/2 with middle terms 0
    const double dx = nx - mx, dz = nz - mz;
    if (std::abs(dx) + std::abs(dz) < tol) {
      mx = nx;
      mz = nz;
      sol.converged = true;
      break;
    }
    if (dx * prev_dx < 0) damp = 0.5;  // oscillation: damp
    prev_dx = dx;
    mx += damp * dx;
    mz += damp * dz;
  }
  sol.iterations = it;
  sol.energy_per_pair = e0 + alpha * (spec.Jx * mx * mx + spec.Jz * mz * mz);
  sol.mean_sx = mx;
  // angles from the ground-state amplitudes (global sign: make v0 >= 0)
  Eigen::Vector4d v = gs;
  if (v(0) < 0 || (std::abs(v(0)) < 1e-14 && v(1) + v(2) < 0)) v = -v;
  const double w = (v(1) + v(2)) / 2;
  sol.theta = 2 * std::atan2(std::sqrt(2.0) * std::abs(w), std::hypot(v(0), v(3)));
  sol.phi = std::hypot(v(0), v(3)) > 1e-14 ? 2 * std::atan2(v(3), v(0)) : 0.0;
  if (sol.theta >= kPi - 1e-9)
    sol.phase = PairPhase::Dimerized;
  else if (sol.theta <= 1e-9)
    sol.phase = PairPhase::Aligned;
  else {
    sol.phase = PairPhase::ParityBreaking;
    sol.degenerate = true;
  }
  return sol;
}

}  // namespace dimer
