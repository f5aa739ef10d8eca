#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace disphyp {

using Vec = Eigen::VectorXd;

struct ZoneParams {
  double N = 1.0;   // zone constant
  double nu = 0.0;  // oscillation parameter in [0,1]

  ZoneParams() = default;
  ZoneParams(double N_, double nu_) : N(N_), nu(nu_) {
    if (!(N > 0.0)) throw std::invalid_argument("ZoneParams: N must be > 0");
    if (nu < 0.0 || nu > 1.0) throw std::invalid_argument("ZoneParams: nu must lie in [0,1]");
  }
};

enum class Zone { pd, osc, reg };

struct ZoneLabel {
  Zone zone;
  double t_xi;        // boundary of Z_pd
  double t_xi_tilde;  // boundary of the oscillating sub-zone (== t_xi when nu = 0)
};

namespace detail {

// g(t) = (1+t)|xi| - N log(e+t)^ex; strictly increasing crossing since
// N log(e+t)^ex / (1+t) is strictly decreasing from N.
inline double zone_boundary_residual(double t, double axi, double N, double ex) {
  return (1.0 + t) * axi - N * std::pow(std::log(std::exp(1.0) + t), ex);
}

inline double solve_zone_boundary(double axi, double N, double ex) {
  if (axi >= N) return 0.0;
  if (ex == 0.0) return N / axi - 1.0;
  double lo = 0.0;
  double hi = 10.0 * N * (1.0 + std::log(std::exp(1.0) + 1.0 / axi)) / axi;
  while (zone_boundary_residual(hi, axi, N, ex) < 0.0) hi *= 2.0;
  while (hi - lo > 1e-3) {
    const double mid = 0.5 * (lo + hi);
    if (zone_boundary_residual(mid, axi, N, ex) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 60; ++it) {
    const double r = zone_boundary_residual(t, axi, N, ex);
    if (std::abs(r) <= 1e-12 * N) break;
    const double e = std::exp(1.0);
    const double dr = axi - N * ex * std::pow(std::log(e + t), ex - 1.0) / (e + t);
    double step = r / dr;
    double tn = t - step;
    if (!(tn >= lo && tn <= hi)) tn = 0.5 * (lo + hi);  // fall back to bisection bracket
    if (zone_boundary_residual(tn, axi, N, ex) < 0.0)
      lo = tn;
    else
      hi = tn;
    t = tn;
  }
  return t;
}

}  // namespace detail

/// Solves (1+t)|xi| = N log(e+t)^nu for t (doubled: exponent 2 nu). Returns 0
/// when the point is already hyperbolic at t = 0.
inline double zone_boundary(const Vec& xi, const ZoneParams& zp, bool doubled = false) {
  const double axi = xi.norm();
  if (axi == 0.0) throw std::domain_error("zone_boundary: zero frequency");
  return detail::solve_zone_boundary(axi, zp.N, doubled ? 2.0 * zp.nu : zp.nu);
}

inline double zone_boundary(double axi, const ZoneParams& zp, bool doubled = false) {
  if (axi == 0.0) throw std::domain_error("zone_boundary: zero frequency");
  return detail::solve_zone_boundary(axi, zp.N, doubled ? 2.0 * zp.nu : zp.nu);
}

inline ZoneLabel classify_zone(double t, const Vec& xi, const ZoneParams& zp) {
  const double t_xi = zone_boundary(xi, zp, false);
  const double t_xi_tilde = zp.nu == 0.0 ? t_xi : zone_boundary(xi, zp, true);
  Zone z;
  if (t <= t_xi)
    z = Zone::pd;
  else if (t <= t_xi_tilde)
    z = Zone::osc;
  else
    z = Zone::reg;
  return {z, t_xi, t_xi_tilde};
}

inline ZoneLabel classify_zone(double t, double axi, const ZoneParams& zp) {
  Vec xi(1);
  xi << axi;
  return classify_zone(t, xi, zp);
}

/// |xi|_t = max(|xi|, N log(e+t)^nu / (1+t)); strictly positive everywhere.
inline double weight_xi_t(double t, const Vec& xi, const ZoneParams& zp) {
  const double floor = zp.N * std::pow(std::log(std::exp(1.0) + t), zp.nu) / (1.0 + t);
  return std::max(xi.norm(), floor);
}

inline double weight_xi_t(double t, double axi, const ZoneParams& zp) {
  const double floor = zp.N * std::pow(std::log(std::exp(1.0) + t), zp.nu) / (1.0 + t);
  return std::max(std::abs(axi), floor);
}

namespace detail {

// C^inf transition: 1 on s <= 1/2, 0 on s >= 1, strictly monotone between.
inline double smooth_transition(double x) {  // 0 -> 1 over [0,1]
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / x);
  const double b = std::exp(-1.0 / (1.0 - x));
  return a / (a + b);
}

}  // namespace detail

enum class CutoffSide { pd, hyp };

/// Smooth partition of unity chi_pd + chi_hyp = 1 in the zone variable
/// s = |xi|(1+t) log(e+t)^{-nu} / N. The doubled flag uses exponent 2 nu
/// (regular-zone cutoff).
inline double cutoff_chi(double t, const Vec& xi, const ZoneParams& zp, CutoffSide side,
                         bool doubled = false) {
  const double ex = doubled ? 2.0 * zp.nu : zp.nu;
  const double s =
      xi.norm() * (1.0 + t) * std::pow(std::log(std::exp(1.0) + t), -ex) / zp.N;
  const double chi_pd = 1.0 - detail::smooth_transition(2.0 * (s - 0.5));
  return side == CutoffSide::pd ? chi_pd : 1.0 - chi_pd;
}

inline double cutoff_chi(double t, double axi, const ZoneParams& zp, CutoffSide side,
                         bool doubled = false) {
  Vec xi(1);
  xi << std::abs(axi);
  return cutoff_chi(t, xi, zp, side, doubled);
}

}  // namespace disphyp
