#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "disphyp/errors.hpp"
#include "disphyp/expression.hpp"
#include "disphyp/ring_matrix.hpp"
#include "disphyp/zones.hpp"

namespace disphyp {

using MultiIndex = std::vector<int>;

inline int multi_order(const MultiIndex& a) {
  int r = 0;
  for (int x : a) r += x;
  return r;
}

std::vector<MultiIndex> enumerate_multi_indices(int n, int max_order);

enum class DerivBackend { exact_expression, central_fd };

/// Evaluation core behind a TimeFrequencySymbol: mixed jets along
/// t = t0 + s, xi = xi0 + rho * dir.
class SymbolImpl {
 public:
  virtual ~SymbolImpl() = default;
  virtual int dim() const = 0;
  virtual int space_dim() const = 0;
  virtual TRMat eval_jet(double t0, const Vec& xi0, const Vec& dir, int kt, int kr) const = 0;
};

/// Matrix Fourier-multiplier symbol a(t, xi) with derivative access up to
/// declared budgets. eval returns plain partials d_t^k d_xi^alpha; these have
/// the same modulus as the D-convention derivatives entering the class
/// estimates.
class TimeFrequencySymbol {
 public:
  TimeFrequencySymbol() = default;
  TimeFrequencySymbol(std::shared_ptr<const SymbolImpl> impl, int ell1, int ell2,
                      DerivBackend backend, bool homogeneous1 = false)
      : impl_(std::move(impl)),
        ell1_(ell1),
        ell2_(ell2),
        backend_(backend),
        homogeneous1_(homogeneous1) {}

  int dim() const { return impl_->dim(); }
  int space_dim() const { return impl_->space_dim(); }
  int ell1() const { return ell1_; }
  int ell2() const { return ell2_; }
  DerivBackend backend() const { return backend_; }
  bool homogeneous1() const { return homogeneous1_; }
  const std::shared_ptr<const SymbolImpl>& impl() const { return impl_; }

  Eigen::MatrixXcd eval(double t, const Vec& xi, int k = 0,
                        const MultiIndex& alpha = {}) const;

  /// Directional jet (exact backend); order budget enforced.
  TRMat eval_jet(double t, const Vec& xi, const Vec& dir, int kt, int kr) const;

  static TimeFrequencySymbol from_expressions(
      const std::vector<std::vector<std::string>>& entries, int space_dim, int ell1,
      int ell2, bool homogeneous1 = false);

  /// Parses {"m":..,"n":..,"entries":[[expr,..],..]} JSON text.
  static TimeFrequencySymbol from_json(const std::string& json_text, int ell1 = 4,
                                       int ell2 = 8);

  static TimeFrequencySymbol from_black_box(
      std::function<Eigen::MatrixXcd(double, const Vec&)> fn, int m, int n, int ell1,
      int ell2);

 private:
  std::shared_ptr<const SymbolImpl> impl_;
  int ell1_ = 0;
  int ell2_ = 0;
  DerivBackend backend_ = DerivBackend::exact_expression;
  bool homogeneous1_ = false;
};

struct SymbolClassSpec {
  double m1 = 0.0;
  double m2 = 0.0;
  int ell1 = 2;
  int ell2 = 2;
};

struct GridPoint {
  double t;
  Vec xi;
};

using ClassGrid = std::vector<GridPoint>;

enum class ZoneFilter { all, pd, hyp, osc, reg };

/// Default class-check grid: log-spaced times in [0, t_max], dyadic frequency
/// shells with a few magnitudes each, deterministic sphere directions.
ClassGrid make_class_grid(int n, const ZoneParams& zp, ZoneFilter filter,
                          int n_times = 32, double t_max = 1e4, int shells = 12,
                          int mags_per_shell = 3, int n_dirs = 8,
                          double shell_lo = 1.0 / 64.0);

std::vector<Vec> sphere_directions(int n, int count);

struct ClassConstant {
  int k;
  MultiIndex alpha;
  double constant;       // empirical C_{k,alpha}
  GridPoint witness;     // where the sup is attained
};

struct ClassReport {
  SymbolClassSpec spec;
  std::vector<ClassConstant> constants;
  bool fail = false;
  double ceiling = 0.0;
  double max_constant = 0.0;
};

/// Empirical symbol-class constants: sup over the grid of
/// |d^k_t d^alpha_xi a| / (|xi|_t^{m1-|alpha|} (log(e+t)^nu/(1+t))^{m2+k}).
ClassReport check_symbol_class(const TimeFrequencySymbol& sym,
                               const SymbolClassSpec& spec, const ZoneParams& zp,
                               const ClassGrid& grid, double ceiling = 1e6);

}  // namespace disphyp
