#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "disphyp/expression.hpp"
#include "disphyp/symbol.hpp"
#include "disphyp/zones.hpp"

namespace disphyp {

/// Scalar coefficient of t with exact derivatives and a declared T_nu{rho}
/// class: |d_t^k f| <= C_k (log(e+t)^nu / (1+t))^{rho+k}.
class CoefficientFunction {
 public:
  CoefficientFunction() = default;
  CoefficientFunction(std::string expr_text, double nu, double rho);
  static CoefficientFunction constant(double v);

  double operator()(double t) const;
  Complex eval_complex(double t) const;
  CJet jet(double t, int order) const;
  TRJet tr_jet(double t, int kt, int kr) const;  // rho-constant
  double nu() const { return nu_; }
  double rho() const { return rho_; }
  const std::string& text() const { return text_; }
  bool is_zero() const;

 private:
  Expression expr_;
  std::string text_;
  double nu_ = 0.0;
  double rho_ = 0.0;
};

struct TClassReport {
  std::vector<double> constants;  // C_k by derivative order
  bool pass = true;
  int first_fail_k = -1;
  double witness_t = 0.0;
  double ceiling = 0.0;
};

TClassReport check_T_class(const CoefficientFunction& f, const std::vector<double>& grid,
                           int k_max = 3, double ceiling = 1e3);

std::vector<double> default_t_grid(int count = 64, double t_max = 1e4);

enum class SystemKind { differential, second_order, higher_order, raw };

struct SystemFamily {
  SystemKind kind = SystemKind::raw;
  std::string name;
  int m = 0;
  int n = 0;
  ZoneParams zp;
  TimeFrequencySymbol A;   // full symbol, zone-bridged where the kind needs it
  TimeFrequencySymbol A1;  // 1-homogeneous principal part
  std::function<double(double)> gamma = [](double) { return 0.0; };
  bool symmetric_hyperbolic = false;
  bool isotropic = false;  // A(t,xi) depends on xi through |xi| only
};

using CoeffMatrix = std::vector<std::vector<CoefficientFunction>>;

/// D_t U = (sum_j A_j(t) D_{x_j} + B(t)) U.
SystemFamily build_differential_system(const std::vector<CoeffMatrix>& A_j,
                                       const CoeffMatrix& B, const ZoneParams& zp);

/// Second-order scalar equation reduced to the 2x2 system in
/// U = (h(t,D)u, D_t u) with h ~ |xi|_t bridged across the zone boundary.
/// a is the upper-triangular coefficient set a_{ij}, i <= j.
SystemFamily build_second_order(const std::vector<std::vector<CoefficientFunction>>& a,
                                const std::vector<CoefficientFunction>& b,
                                const CoefficientFunction& c,
                                const std::vector<CoefficientFunction>& d,
                                const CoefficientFunction& e, int n,
                                const ZoneParams& zp);

struct HigherOrderTerm {
  int j;             // D_t power
  MultiIndex alpha;  // D_x multi-index
  CoefficientFunction coeff;
};

SystemFamily build_higher_order(int m, const std::vector<HigherOrderTerm>& terms,
                                bool homogeneous, int n, const ZoneParams& zp);

/// Raw family from a pair of symbol JSON/expression tables.
SystemFamily build_raw_system(const TimeFrequencySymbol& A, const TimeFrequencySymbol& A1,
                              const ZoneParams& zp, const std::string& name,
                              bool isotropic = false);

/// Named families addressable from the CLI. Parameters come as a small
/// key -> value map (family-specific; unknown keys rejected).
SystemFamily make_named_system(const std::string& name,
                               const std::map<std::string, double>& params = {});

std::vector<std::string> named_system_list();

/// Uniform strict-hyperbolicity condition of the second-order family:
/// (sum b_j xi_j)^2 + 4 sum_{i<=j} a_ij xi_i xi_j > 0, probed on a grid.
double second_order_hyperbolicity_min(
    const std::vector<std::vector<CoefficientFunction>>& a,
    const std::vector<CoefficientFunction>& b, int n,
    const std::vector<double>& times);

/// Condition (4.14) for homogeneous higher-order equations:
/// sup_{T,xi} |sum_{k != j} int_0^T d_t lambda_j / (lambda_j - lambda_k) dt|.
double higher_order_condition_414(const SystemFamily& family,
                                  const std::vector<double>& horizons,
                                  const std::vector<Vec>& directions);

}  // namespace disphyp
