#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "disphyp/symbol.hpp"
#include "disphyp/zones.hpp"

namespace disphyp {

struct SpectralDecomposition {
  Eigen::VectorXd roots;                        // ascending
  std::vector<Eigen::MatrixXcd> projections;    // P_j
  Eigen::MatrixXcd M;                           // columns v_j
  Eigen::MatrixXcd M_inv;
  Eigen::MatrixXcd D;                           // diag(roots)
  Eigen::MatrixXcd H;                           // symmetriser sum P_j^* P_j
  double gap = 0.0;
  std::vector<int> ref_axes;                    // gauge: axis per column
  double t = 0.0;
  Vec xi;
};

/// Pointwise spectral analysis of A1(t,xi): roots by a dense eigensolver,
/// projections by the product formula, diagonaliser columns v_j = P_j e /
/// |P_j e|. Phase gauge: overlap-aligned with continuity_ref when given,
/// otherwise the reference component is made real positive.
SpectralDecomposition decompose(const Eigen::MatrixXcd& A1_at, double t, const Vec& xi,
                                const SpectralDecomposition* continuity_ref = nullptr);

/// Fixed-gauge jet evaluation of the spectral objects of one principal
/// symbol: lambda_j, P_j, M, M^{-1} as mixed (t,rho)-jets. The gauge (axis
/// per column, reference component real positive) is frozen at construction
/// so evaluation stays pointwise-deterministic.
class SpectralFrame {
 public:
  SpectralFrame(TimeFrequencySymbol A1, double t_gauge, Vec xi_gauge);

  struct JetData {
    std::vector<TRJet> lambda;       // ascending at the base point
    std::vector<TRMat> projections;
    TRMat M, M_inv;
    TRMat D;                         // diag(lambda)
  };

  JetData eval(double t, const Vec& xi, const Vec& dir, int kt, int kr) const;
  const TimeFrequencySymbol& principal() const { return A1_; }
  const std::vector<int>& ref_axes() const { return ref_axes_; }

 private:
  TimeFrequencySymbol A1_;
  std::vector<int> ref_axes_;
};

/// F_0 = diag(M^{-1}(A - A1)M - M^{-1} D_t M) with D_t M by a centered
/// difference of the branch-locked eigenvector field, h = 1e-4 (1+t).
Eigen::MatrixXcd compute_F0(const TimeFrequencySymbol& A, const TimeFrequencySymbol& A1,
                            double t, const Vec& xi);

struct AssumptionGrids {
  ClassGrid hyp;       // (A1) class constants, strip, (A3)
  ClassGrid pd;        // (A4)
  std::vector<Vec> sphere;       // (A2) directions
  std::vector<double> late_times;  // (A2) liminf proxy window
  std::vector<double> a3_times;    // time ladder for the (A3) cumulative integral
};

AssumptionGrids default_assumption_grids(int n, const ZoneParams& zp);

struct AssumptionReport {
  double a1_class_constant = 0.0;   // empirical S{1,0} constant of A
  double strip_c = 0.0;             // max |Im eig A| over Z_hyp grid
  bool a1_pass = false;
  double hyperbolicity_margin = 0.0;  // min root gap, late times x sphere
  bool a2_pass = false;
  double a3_sup = 0.0;              // sup over (s,t,xi) of |int Im F0|
  bool a3_pass = false;
  double a4_c = 0.0;                // max |Im eig A| / |xi| over grid
  double a4_min_eig = 0.0;          // min eig of Im A + c|xi| + gamma/2 on Z_pd
  double a4_gamma_log_constant = 0.0;  // C with int_0^t gamma <= C log(e+t)^nu
  bool a4_pass = false;
};

struct AssumptionCeilings {
  double a1_class = 1e3;
  double a2_margin = 1e-6;
  double a3_sup = 50.0;
  double a4_eig_floor = -1e-8;
};

AssumptionReport check_assumptions(const TimeFrequencySymbol& A,
                                   const TimeFrequencySymbol& A1,
                                   const std::function<double(double)>& gamma,
                                   const ZoneParams& zp, const AssumptionGrids& grids,
                                   const AssumptionCeilings& ceilings = {});

}  // namespace disphyp
