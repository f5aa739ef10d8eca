#include "disphyp/symbol.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace disphyp {

std::vector<MultiIndex> enumerate_multi_indices(int n, int max_order) {
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      rec(pos + 1, remaining - v);
    }
    cur[static_cast<size_t>(pos)] = 0;
  };
  rec(0, max_order);
  std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    const int oa = multi_order(a), ob = multi_order(b);
    if (oa != ob) return oa < ob;
    return a < b;
  });
  return out;
}

namespace {

class ExpressionSymbolImpl : public SymbolImpl {
 public:
  ExpressionSymbolImpl(std::vector<std::vector<Expression>> entries, int n)
      : entries_(std::move(entries)), n_(n) {}

  int dim() const override { return static_cast<int>(entries_.size()); }
  int space_dim() const override { return n_; }

  TRMat eval_jet(double t0, const Vec& xi0, const Vec& dir, int kt,
                 int kr) const override {
    const int m = dim();
    TRJet t = tr_time(t0, kt, kr);
    std::vector<TRJet> xi;
    xi.reserve(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) xi.push_back(tr_freq(xi0[i], dir[i], kt, kr));
    TRMat out(m, tr_constant(Complex(0, 0), kt, kr));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) out(i, j) = entries_[i][j].eval(t, xi);
    return out;
  }

 private:
  std::vector<std::vector<Expression>> entries_;
  int n_;
};

class BlackBoxSymbolImpl : public SymbolImpl {
 public:
  BlackBoxSymbolImpl(std::function<Eigen::MatrixXcd(double, const Vec&)> fn, int m, int n)
      : fn_(std::move(fn)), m_(m), n_(n) {}

  int dim() const override { return m_; }
  int space_dim() const override { return n_; }

  // Taylor coefficients estimated by composed central differences; step
  // h = max(1e-5, 1e-5 |.|) per axis.
  TRMat eval_jet(double t0, const Vec& xi0, const Vec& dir, int kt,
                 int kr) const override {
    const double ht = std::max(1e-5, 1e-5 * std::abs(t0));
    const double hr = std::max(1e-5, 1e-5 * xi0.norm());
    TRMat out(m_, tr_constant(Complex(0, 0), kt, kr));
    for (int it = 0; it <= kt; ++it)
      for (int jr = 0; jr <= kr; ++jr) {
        Eigen::MatrixXcd d = mixed_fd(t0, xi0, dir, it, jr, ht, hr);
        double fac = 1.0;
        for (int q = 2; q <= it; ++q) fac *= q;
        for (int q = 2; q <= jr; ++q) fac *= q;
        for (int i = 0; i < m_; ++i)
          for (int j = 0; j < m_; ++j) out(i, j)[it][jr] = d(i, j) / fac;
      }
    return out;
  }

 private:
  Eigen::MatrixXcd mixed_fd(double t0, const Vec& xi0, const Vec& dir, int it, int jr,
                            double ht, double hr) const {
    if (it > 0) {
      Eigen::MatrixXcd p = mixed_fd(t0 + ht, xi0, dir, it - 1, jr, ht, hr);
      Eigen::MatrixXcd q = mixed_fd(t0 - ht, xi0, dir, it - 1, jr, ht, hr);
      return (p - q) / (2.0 * ht);
    }
    if (jr > 0) {
      Eigen::MatrixXcd p = mixed_fd(t0, xi0 + hr * dir, dir, 0, jr - 1, ht, hr);
      Eigen::MatrixXcd q = mixed_fd(t0, xi0 - hr * dir, dir, 0, jr - 1, ht, hr);
      return (p - q) / (2.0 * hr);
    }
    return fn_(t0, xi0);
  }

  std::function<Eigen::MatrixXcd(double, const Vec&)> fn_;
  int m_, n_;
};

}  // namespace

Eigen::MatrixXcd TimeFrequencySymbol::eval(double t, const Vec& xi, int k,
                                           const MultiIndex& alpha) const {
  const int r = alpha.empty() ? 0 : multi_order(alpha);
  if (k > ell2_)
    throw OrderBudgetError("time-derivative order " + std::to_string(k) +
                           " exceeds budget ell2=" + std::to_string(ell2_));
  if (r > ell1_)
    throw OrderBudgetError("frequency-derivative order " + std::to_string(r) +
                           " exceeds budget ell1=" + std::to_string(ell1_));
  const int n = space_dim();
  Vec zero_dir = Vec::Zero(n);
  if (r == 0) {
    TRMat jm = impl_->eval_jet(t, xi, zero_dir, k, 0);
    return tr_mat_mixed_derivative(jm, k, 0);
  }
  // One axis only: single directional jet.
  int nz = 0, axis = -1;
  for (int i = 0; i < n; ++i)
    if (alpha[static_cast<size_t>(i)] > 0) {
      ++nz;
      axis = i;
    }
  if (nz == 1) {
    Vec dir = Vec::Zero(n);
    dir[axis] = 1.0;
    TRMat jm = impl_->eval_jet(t, xi, dir, k, r);
    return tr_mat_mixed_derivative(jm, k, r);
  }
  // Polarisation: d^alpha f = (1/(2^r r!)) sum_eps (prod eps) d_rho^r f along
  // sum eps_i v_i, with v the axis list with multiplicities.
  std::vector<int> axes;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < alpha[static_cast<size_t>(i)]; ++c) axes.push_back(i);
  const int total = 1 << r;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim(), dim());
  for (int mask = 0; mask < total; ++mask) {
    Vec dir = Vec::Zero(n);
    double sign = 1.0;
    for (int b = 0; b < r; ++b) {
      const double e = (mask >> b) & 1 ? 1.0 : -1.0;
      sign *= e;
      dir[axes[static_cast<size_t>(b)]] += e;
    }
    TRMat jm = impl_->eval_jet(t, xi, dir, k, r);
    acc += sign * tr_mat_mixed_derivative(jm, k, r);
  }
  double rfac = 1.0;
  for (int j = 2; j <= r; ++j) rfac *= j;
  return acc / (static_cast<double>(total) * rfac);
}

TRMat TimeFrequencySymbol::eval_jet(double t, const Vec& xi, const Vec& dir, int kt,
                                    int kr) const {
  if (kt > ell2_)
    throw OrderBudgetError("time jet order exceeds budget ell2");
  if (kr > ell1_)
    throw OrderBudgetError("frequency jet order exceeds budget ell1");
  return impl_->eval_jet(t, xi, dir, kt, kr);
}

TimeFrequencySymbol TimeFrequencySymbol::from_expressions(
    const std::vector<std::vector<std::string>>& entries, int space_dim, int ell1,
    int ell2, bool homogeneous1) {
  std::vector<std::vector<Expression>> parsed;
  for (const auto& row : entries) {
    std::vector<Expression> prow;
    for (const auto& s : row) prow.push_back(Expression::parse(s, space_dim));
    parsed.push_back(std::move(prow));
  }
  const size_t m = parsed.size();
  for (const auto& row : parsed)
    if (row.size() != m) throw std::invalid_argument("symbol entries must be square");
  return TimeFrequencySymbol(
      std::make_shared<ExpressionSymbolImpl>(std::move(parsed), space_dim), ell1, ell2,
      DerivBackend::exact_expression, homogeneous1);
}

TimeFrequencySymbol TimeFrequencySymbol::from_json(const std::string& json_text,
                                                   int ell1, int ell2) {
  const auto j = nlohmann::json::parse(json_text);
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  std::vector<std::vector<std::string>> entries;
  for (const auto& row : j.at("entries")) {
    std::vector<std::string> r;
    for (const auto& cell : row) r.push_back(cell.get<std::string>());
    entries.push_back(std::move(r));
  }
  if (static_cast<int>(entries.size()) != m)
    throw std::invalid_argument("symbol json: entries rows != m");
  return from_expressions(entries, n, ell1, ell2);
}

TimeFrequencySymbol TimeFrequencySymbol::from_black_box(
    std::function<Eigen::MatrixXcd(double, const Vec&)> fn, int m, int n, int ell1,
    int ell2) {
  return TimeFrequencySymbol(std::make_shared<BlackBoxSymbolImpl>(std::move(fn), m, n),
                             ell1, ell2, DerivBackend::central_fd);
}

std::vector<Vec> sphere_directions(int n, int count) {
  std::vector<Vec> dirs;
  if (n == 1) {
    Vec p(1), q(1);
    p << 1.0;
    q << -1.0;
    dirs = {p, q};
    return dirs;
  }
  if (n == 2) {
    for (int k = 0; k < count; ++k) {
      const double th = 2.0 * M_PI * k / count + 0.1;  // offset avoids axes
      Vec d(2);
      d << std::cos(th), std::sin(th);
      dirs.push_back(d);
    }
    return dirs;
  }
  // n == 3: offset cube corners, normalised
  for (int k = 0; k < count; ++k) {
    Vec d(3);
    d << ((k & 1) ? 1.0 : -1.0) + 0.07, ((k & 2) ? 1.0 : -1.0) - 0.03,
        ((k & 4) ? 1.0 : -1.0) + 0.11;
    if (k >= 8) {
      const double th = 2.0 * M_PI * k / count;
      d << std::cos(th), std::sin(th), 0.4 * std::cos(3 * th);
    }
    dirs.push_back(d.normalized());
  }
  return dirs;
}

ClassGrid make_class_grid(int n, const ZoneParams& zp, ZoneFilter filter, int n_times,
                          double t_max, int shells, int mags_per_shell, int n_dirs,
                          double shell_lo) {
  ClassGrid grid;
  std::vector<double> times;
  times.push_back(0.0);
  const double t_lo = 1e-2;
  for (int i = 0; i + 1 < n_times; ++i) {
    const double u = static_cast<double>(i) / (n_times - 2);
    times.push_back(t_lo * std::pow(t_max / t_lo, u));
  }
  const auto dirs = sphere_directions(n, n_dirs);
  for (int s = 0; s < shells; ++s) {
    const double lo = shell_lo * std::pow(2.0, s);
    for (int q = 0; q < mags_per_shell; ++q) {
      const double mag = lo * std::pow(2.0, static_cast<double>(q) / mags_per_shell);
      for (const auto& d : dirs) {
        for (double t : times) {
          Vec xi = mag * d;
          if (filter != ZoneFilter::all) {
            const ZoneLabel z = classify_zone(t, xi, zp);
            const bool keep = (filter == ZoneFilter::pd && z.zone == Zone::pd) ||
                              (filter == ZoneFilter::hyp && z.zone != Zone::pd) ||
                              (filter == ZoneFilter::osc && z.zone == Zone::osc) ||
                              (filter == ZoneFilter::reg && z.zone == Zone::reg);
            if (!keep) continue;
          }
          grid.push_back({t, xi});
        }
      }
    }
  }
  return grid;
}

ClassReport check_symbol_class(const TimeFrequencySymbol& sym, const SymbolClassSpec& spec,
                               const ZoneParams& zp, const ClassGrid& grid,
                               double ceiling) {
  if (grid.empty()) throw std::invalid_argument("check_symbol_class: empty grid");
  const int kmax = std::min(spec.ell2, sym.ell2());
  const int amax = std::min(spec.ell1, sym.ell1());
  if (spec.ell2 > sym.ell2() || spec.ell1 > sym.ell1())
    throw OrderBudgetError("class spec exceeds symbol derivative budgets");
  ClassReport rep;
  rep.spec = spec;
  rep.ceiling = ceiling;
  const auto alphas = enumerate_multi_indices(sym.space_dim(), amax);
  for (int k = 0; k <= kmax; ++k) {
    for (const auto& alpha : alphas) {
      ClassConstant cc;
      cc.k = k;
      cc.alpha = alpha;
      cc.constant = 0.0;
      cc.witness = grid.front();
      const int r = multi_order(alpha);
      for (const auto& gp : grid) {
        const Eigen::MatrixXcd d = sym.eval(gp.t, gp.xi, k, alpha);
        const double w = weight_xi_t(gp.t, gp.xi, zp);
        const double decay =
            std::pow(std::log(std::exp(1.0) + gp.t), zp.nu) / (1.0 + gp.t);
        const double denom =
            std::pow(w, spec.m1 - r) * std::pow(decay, spec.m2 + k);
        const double val = d.norm() / denom;
        if (val > cc.constant) {
          cc.constant = val;
          cc.witness = gp;
        }
      }
      rep.max_constant = std::max(rep.max_constant, cc.constant);
      if (cc.constant > ceiling) rep.fail = true;
      rep.constants.push_back(std::move(cc));
    }
  }
  return rep;
}

}  // namespace disphyp
