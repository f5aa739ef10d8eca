#include "disphyp/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "disphyp/errors.hpp"

namespace disphyp {

namespace {

std::vector<double> sorted_real_roots(const Eigen::MatrixXcd& A1, double scale) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A1, /*computeEigenvectors=*/false);
  std::vector<double> roots;
  for (int i = 0; i < A1.rows(); ++i) {
    const Complex ev = es.eigenvalues()[i];
    if (std::abs(ev.imag()) > 1e-8 * std::max(scale, 1e-300))
      throw HyperbolicityError("complex characteristic root beyond tolerance");
    roots.push_back(ev.real());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

void check_gap(const std::vector<double>& roots, double scale) {
  for (size_t i = 0; i + 1 < roots.size(); ++i)
    if (roots[i + 1] - roots[i] < 1e-10 * std::max(scale, 1e-300))
      throw StrictHyperbolicityError("multiple characteristic root");
}

}  // namespace

SpectralDecomposition decompose(const Eigen::MatrixXcd& A1_at, double t, const Vec& xi,
                                const SpectralDecomposition* continuity_ref) {
  const int m = static_cast<int>(A1_at.rows());
  const double scale = A1_at.norm();
  const auto roots = sorted_real_roots(A1_at, scale);
  check_gap(roots, scale);

  SpectralDecomposition d;
  d.t = t;
  d.xi = xi;
  d.roots = Eigen::Map<const Eigen::VectorXd>(roots.data(), m);
  d.gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i + 1 < m; ++i) d.gap = std::min(d.gap, roots[i + 1] - roots[i]);
  if (m == 1) d.gap = std::numeric_limits<double>::infinity();

  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(m, m);
  d.projections.resize(m);
  for (int j = 0; j < m; ++j) {
    Eigen::MatrixXcd P = I;
    for (int i = 0; i < m; ++i) {
      if (i == j) continue;
      P = P * (A1_at - roots[i] * I) / (roots[j] - roots[i]);
    }
    d.projections[j] = P;
  }

  d.M = Eigen::MatrixXcd(m, m);
  d.ref_axes.resize(m);
  for (int j = 0; j < m; ++j) {
    int axis = 0;
    if (continuity_ref) {
      axis = continuity_ref->ref_axes[j];
    } else {
      double best = -1.0;
      for (int i = 0; i < m; ++i) {
        const double v = d.projections[j].col(i).norm();
        if (v > best) {
          best = v;
          axis = i;
        }
      }
    }
    d.ref_axes[j] = axis;
    Eigen::VectorXcd v = d.projections[j].col(axis);
    const double nv = v.norm();
    if (!(nv > 0)) throw StrictHyperbolicityError("degenerate eigenprojection column");
    v /= nv;
    if (continuity_ref) {
      const Complex inner = (continuity_ref->M.col(j).adjoint() * v)(0);
      if (std::abs(inner) > 0) v *= std::conj(inner) / std::abs(inner);
    } else {
      const Complex lead = v[axis];
      if (std::abs(lead) > 0) v *= std::conj(lead) / std::abs(lead);
    }
    d.M.col(j) = v;
  }

  d.M_inv = d.M.inverse();
  const double cond = d.M.norm() * d.M_inv.norm();
  if (!(cond < 1e8)) throw StrictHyperbolicityError("diagonaliser condition number too large");

  d.D = Eigen::MatrixXcd::Zero(m, m);
  for (int j = 0; j < m; ++j) d.D(j, j) = roots[j];
  d.H = Eigen::MatrixXcd::Zero(m, m);
  for (int j = 0; j < m; ++j) d.H += d.projections[j].adjoint() * d.projections[j];
  return d;
}

SpectralFrame::SpectralFrame(TimeFrequencySymbol A1, double t_gauge, Vec xi_gauge)
    : A1_(std::move(A1)) {
  const Eigen::MatrixXcd a = A1_.eval(t_gauge, xi_gauge);
  const SpectralDecomposition d = decompose(a, t_gauge, xi_gauge);
  ref_axes_ = d.ref_axes;
}

SpectralFrame::JetData SpectralFrame::eval(double t, const Vec& xi, const Vec& dir,
                                           int kt, int kr) const {
  const int m = A1_.dim();
  const TRMat a = A1_.eval_jet(t, xi, dir, kt, kr);
  const Eigen::MatrixXcd a0 = a.values();
  const double scale = a0.norm();
  const auto roots = sorted_real_roots(a0, scale);
  check_gap(roots, scale);

  // Characteristic polynomial p(x) = x^m + c_{m-1} x^{m-1} + ... + c_0 over
  // the jet ring (Faddeev-LeVerrier).
  const TRJet jzero = tr_constant(Complex(0, 0), kt, kr);
  const TRJet jone = tr_constant(Complex(1, 0), kt, kr);
  std::vector<TRJet> c(static_cast<size_t>(m) + 1, jzero);
  c[static_cast<size_t>(m)] = jone;
  {
    TRMat B = a;
    TRJet ck = -(B.trace());
    c[static_cast<size_t>(m - 1)] = ck;
    for (int k = 2; k <= m; ++k) {
      TRMat shift = TRMat::identity_like(m, jone);
      B = a * (B + ck * shift);
      ck = B.trace() * (-1.0 / k);
      c[static_cast<size_t>(m - k)] = ck;
    }
  }
  auto poly_eval = [&](const std::vector<TRJet>& coef, const TRJet& x) {
    TRJet r = coef.back();
    for (int i = static_cast<int>(coef.size()) - 2; i >= 0; --i)
      r = r * x + coef[static_cast<size_t>(i)];
    return r;
  };
  std::vector<TRJet> dc(static_cast<size_t>(m), jzero);
  for (int i = 1; i <= m; ++i)
    dc[static_cast<size_t>(i - 1)] = c[static_cast<size_t>(i)] * static_cast<double>(i);

  JetData out;
  out.lambda.reserve(static_cast<size_t>(m));
  const int newton_iters = 2 + static_cast<int>(std::ceil(std::log2(kt + kr + 2.0)));
  for (int j = 0; j < m; ++j) {
    TRJet lam = tr_constant(Complex(roots[static_cast<size_t>(j)], 0.0), kt, kr);
    for (int it = 0; it < newton_iters; ++it)
      lam = lam - poly_eval(c, lam) / poly_eval(dc, lam);
    out.lambda.push_back(lam);
  }

  const TRMat I = TRMat::identity_like(m, jone);
  out.projections.resize(static_cast<size_t>(m), TRMat(m, jzero));
  for (int j = 0; j < m; ++j) {
    TRMat P = I;
    for (int i = 0; i < m; ++i) {
      if (i == j) continue;
      const TRJet inv_gap = recip(out.lambda[j] - out.lambda[i]);
      P = P * (inv_gap * (a - out.lambda[i] * I));
    }
    out.projections[static_cast<size_t>(j)] = P;
  }

  out.M = TRMat(m, jzero);
  for (int j = 0; j < m; ++j) {
    const int axis = ref_axes_[static_cast<size_t>(j)];
    std::vector<TRJet> v(static_cast<size_t>(m), jzero);
    TRJet norm2 = jzero;
    for (int i = 0; i < m; ++i) {
      v[static_cast<size_t>(i)] = out.projections[static_cast<size_t>(j)](i, axis);
      norm2 += v[static_cast<size_t>(i)] * conj_ring(v[static_cast<size_t>(i)]);
    }
    const TRJet inv_norm = recip(sqrt(norm2));
    // phase gauge: reference component real positive
    const TRJet lead = v[static_cast<size_t>(axis)] * inv_norm;
    const TRJet phase = conj_ring(lead) * recip(sqrt(lead * conj_ring(lead)));
    for (int i = 0; i < m; ++i)
      out.M(i, j) = v[static_cast<size_t>(i)] * inv_norm * phase;
  }
  out.M_inv = out.M.inverse();

  out.D = TRMat(m, jzero);
  for (int j = 0; j < m; ++j) out.D(j, j) = out.lambda[static_cast<size_t>(j)];
  return out;
}

Eigen::MatrixXcd compute_F0(const TimeFrequencySymbol& A, const TimeFrequencySymbol& A1,
                            double t, const Vec& xi) {
  const double h = 1e-4 * (1.0 + t);
  const SpectralDecomposition base = decompose(A1.eval(t, xi), t, xi);
  const SpectralDecomposition plus = decompose(A1.eval(t + h, xi), t + h, xi, &base);
  const SpectralDecomposition minus = decompose(A1.eval(t - h, xi), t - h, xi, &base);
  const Eigen::MatrixXcd DtM =
      Complex(0, -1) * (plus.M - minus.M) / (2.0 * h);
  const Eigen::MatrixXcd G =
      base.M_inv * (A.eval(t, xi) - A1.eval(t, xi)) * base.M - base.M_inv * DtM;
  Eigen::MatrixXcd F0 = Eigen::MatrixXcd::Zero(G.rows(), G.cols());
  for (int i = 0; i < G.rows(); ++i) F0(i, i) = G(i, i);
  return F0;
}

AssumptionGrids default_assumption_grids(int n, const ZoneParams& zp) {
  AssumptionGrids g;
  g.hyp = make_class_grid(n, zp, ZoneFilter::hyp);
  g.pd = make_class_grid(n, zp, ZoneFilter::pd, 24, 1e4, 10, 2, 6, 1.0 / 1024.0);
  g.sphere = sphere_directions(n, 8);
  for (int i = 0; i < 12; ++i) g.late_times.push_back(1e2 * std::pow(100.0, i / 11.0));
  g.a3_times.push_back(0.0);
  for (int i = 0; i < 28; ++i) g.a3_times.push_back(1e-1 * std::pow(1e5, i / 27.0));
  return g;
}

namespace {

// Cumulative integral of Im F0 along a t-ray at fixed xi, on the given time
// ladder (4-node Gauss-Legendre per sub-interval, branch-locked sweep).
std::vector<Eigen::MatrixXcd> cumulative_im_F0(const TimeFrequencySymbol& A,
                                               const TimeFrequencySymbol& A1,
                                               const Vec& xi,
                                               const std::vector<double>& times) {
  static const double gl_x[4] = {-0.8611363115940526, -0.3399810435848563,
                                 0.3399810435848563, 0.8611363115940526};
  static const double gl_w[4] = {0.3478548451374538, 0.6521451548625461,
                                 0.6521451548625461, 0.3478548451374538};
  const int m = A.dim();
  std::vector<Eigen::MatrixXcd> cum;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(m, m);
  cum.push_back(acc);
  for (size_t i = 0; i + 1 < times.size(); ++i) {
    const double a = times[i], b = times[i + 1];
    Eigen::MatrixXcd seg = Eigen::MatrixXcd::Zero(m, m);
    for (int q = 0; q < 4; ++q) {
      const double tq = 0.5 * (a + b) + 0.5 * (b - a) * gl_x[q];
      const Eigen::MatrixXcd F0 = compute_F0(A, A1, tq, xi);
      const Eigen::MatrixXcd imF0 = (F0 - F0.adjoint()) / Complex(0, 2);
      seg += gl_w[q] * 0.5 * (b - a) * imF0;
    }
    acc += seg;
    cum.push_back(acc);
  }
  return cum;
}

}  // namespace

AssumptionReport check_assumptions(const TimeFrequencySymbol& A,
                                   const TimeFrequencySymbol& A1,
                                   const std::function<double(double)>& gamma,
                                   const ZoneParams& zp, const AssumptionGrids& grids,
                                   const AssumptionCeilings& ceilings) {
  AssumptionReport rep;

  // (A1): class constants of A in S{1,0} over the hyperbolic grid plus the
  // eigenvalue strip.
  {
    SymbolClassSpec spec{1.0, 0.0, std::min(1, A.ell1()), std::min(1, A.ell2())};
    const ClassReport cr = check_symbol_class(A, spec, zp, grids.hyp, ceilings.a1_class);
    rep.a1_class_constant = cr.max_constant;
    double strip = 0.0, a4c = 0.0;
    for (const auto& gp : grids.hyp) {
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A.eval(gp.t, gp.xi), false);
      for (int i = 0; i < A.dim(); ++i) {
        strip = std::max(strip, std::abs(es.eigenvalues()[i].imag()));
        a4c = std::max(a4c, std::abs(es.eigenvalues()[i].imag()) / gp.xi.norm());
      }
    }
    rep.strip_c = strip;
    rep.a4_c = a4c;
    rep.a1_pass = !cr.fail;
  }

  // (A2): minimal root gap over late times x sphere directions.
  {
    double margin = std::numeric_limits<double>::infinity();
    for (double t : grids.late_times)
      for (const auto& w : grids.sphere) {
        try {
          const SpectralDecomposition d = decompose(A1.eval(t, w), t, w);
          margin = std::min(margin, d.gap);
        } catch (const HyperbolicityError&) {
          margin = 0.0;
        }
      }
    rep.hyperbolicity_margin = margin;
    rep.a2_pass = margin > ceilings.a2_margin;
  }

  // (A3): sup over xi-rays and ordered time pairs inside Z_hyp.
  {
    double sup = 0.0;
    std::vector<Vec> xis;
    for (const auto& gp : grids.hyp) {
      bool seen = false;
      for (const auto& x : xis)
        if ((x - gp.xi).norm() < 1e-12) seen = true;
      if (!seen) xis.push_back(gp.xi);
    }
    for (const auto& xi : xis) {
      const double t_xi = zone_boundary(xi, zp);
      std::vector<double> ladder;
      ladder.push_back(t_xi);
      for (double t : grids.a3_times)
        if (t > t_xi) ladder.push_back(t);
      if (ladder.size() < 2) continue;
      const auto cum = cumulative_im_F0(A, A1, xi, ladder);
      for (size_t i = 0; i < cum.size(); ++i)
        for (size_t j = i + 1; j < cum.size(); ++j)
          sup = std::max(sup, (cum[j] - cum[i]).norm());
    }
    rep.a3_sup = sup;
    rep.a3_pass = sup < ceilings.a3_sup;
  }

  // (A4): matrix inequality on the pseudo-differential grid and the gamma
  // budget constant.
  {
    double min_eig = std::numeric_limits<double>::infinity();
    for (const auto& gp : grids.pd) {
      const Eigen::MatrixXcd a = A.eval(gp.t, gp.xi);
      const Eigen::MatrixXcd imA = (a - a.adjoint()) / Complex(0, 2);
      Eigen::MatrixXcd Mm = imA;
      Mm += (rep.a4_c * gp.xi.norm() + 0.5 * gamma(gp.t)) *
            Eigen::MatrixXcd::Identity(A.dim(), A.dim());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Mm);
      min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
    }
    rep.a4_min_eig = min_eig;
    double gamma_c = 0.0;
    double acc = 0.0, t_prev = 0.0;
    for (double t : grids.a3_times) {
      if (t <= t_prev) continue;
      acc += 0.5 * (gamma(t_prev) + gamma(t)) * (t - t_prev);
      t_prev = t;
      gamma_c = std::max(gamma_c, acc / std::pow(std::log(std::exp(1.0) + t), zp.nu));
    }
    rep.a4_gamma_log_constant = gamma_c;
    rep.a4_pass = min_eig >= ceilings.a4_eig_floor;
  }

  return rep;
}

}  // namespace disphyp
