#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "disphyp/jet.hpp"

namespace disphyp {

/// Dense m x m matrix over an arbitrary commutative ring scalar (Complex,
/// CJet, TRJet, ...). Only the handful of operations the diagonalisation
/// scheme needs; heavy double/complex linear algebra stays with Eigen.
template <typename S>
class RingMat {
 public:
  RingMat() : m_(0) {}
  RingMat(int m, const S& fill) : m_(m), d_(static_cast<size_t>(m) * m, fill) {}

  static RingMat zeros_like(int m, const S& proto) { return RingMat(m, zero_like(proto)); }
  static RingMat identity_like(int m, const S& proto) {
    RingMat r = zeros_like(m, proto);
    const S one = one_like(proto);
    for (int i = 0; i < m; ++i) r(i, i) = one;
    return r;
  }

  int dim() const { return m_; }
  const S& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * m_ + j]; }
  S& operator()(int i, int j) { return d_[static_cast<size_t>(i) * m_ + j]; }

  RingMat& operator+=(const RingMat& o) {
    for (size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
    return *this;
  }
  RingMat& operator-=(const RingMat& o) {
    for (size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
    return *this;
  }
  friend RingMat operator+(RingMat a, const RingMat& b) { return a += b; }
  friend RingMat operator-(RingMat a, const RingMat& b) { return a -= b; }

  friend RingMat operator*(const RingMat& a, const RingMat& b) {
    assert(a.m_ == b.m_);
    const int m = a.m_;
    RingMat r = zeros_like(m, a.d_[0]);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) {
        const S& aik = a(i, k);
        for (int j = 0; j < m; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend RingMat operator*(const S& s, RingMat a) {
    for (auto& x : a.d_) x = s * x;
    return a;
  }

  RingMat diag_part() const {
    RingMat r = zeros_like(m_, d_[0]);
    for (int i = 0; i < m_; ++i) r(i, i) = (*this)(i, i);
    return r;
  }

  S trace() const {
    S acc = (*this)(0, 0);
    for (int i = 1; i < m_; ++i) acc += (*this)(i, i);
    return acc;
  }

  RingMat apply_d_op() const {
    RingMat r = *this;
    for (auto& x : r.d_) x = d_op(x);
    return r;
  }

  /// Gauss-Jordan inverse with pivoting on leading values. Throws if the
  /// value-level matrix is singular.
  RingMat inverse() const {
    const int m = m_;
    RingMat a = *this;
    RingMat inv = identity_like(m, d_[0]);
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    for (int col = 0; col < m; ++col) {
      int piv = col;
      double best = lead_abs(a(col, col));
      for (int r = col + 1; r < m; ++r) {
        const double v = lead_abs(a(r, col));
        if (v > best) {
          best = v;
          piv = r;
        }
      }
      if (!(best > 0.0)) throw std::runtime_error("RingMat::inverse: singular matrix");
      if (piv != col) {
        for (int j = 0; j < m; ++j) {
          std::swap(a(piv, j), a(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      }
      const S pin = recip(a(col, col));
      for (int j = 0; j < m; ++j) {
        a(col, j) = pin * a(col, j);
        inv(col, j) = pin * inv(col, j);
      }
      for (int r = 0; r < m; ++r) {
        if (r == col) continue;
        const S f = a(r, col);
        if (lead_abs(f) == 0.0) {
          // still subtract: higher jet coefficients may be nonzero
        }
        for (int j = 0; j < m; ++j) {
          a(r, j) -= f * a(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  Eigen::MatrixXcd values() const {
    Eigen::MatrixXcd v(m_, m_);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) v(i, j) = value_of((*this)(i, j));
    return v;
  }

 private:
  int m_;
  std::vector<S> d_;
};

using TRMat = RingMat<TRJet>;

inline TRMat tr_mat_from_values(const Eigen::MatrixXcd& a, int kt, int kr) {
  TRMat r(static_cast<int>(a.rows()), tr_constant(Complex(0, 0), kt, kr));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = tr_constant(a(i, j), kt, kr);
  return r;
}

// Coefficient slice: matrix of (i,j)-th mixed Taylor coefficients.
inline Eigen::MatrixXcd tr_mat_coeff(const TRMat& m, int it, int jr) {
  Eigen::MatrixXcd v(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) v(i, j) = tr_coeff(m(i, j), it, jr);
  return v;
}

inline Eigen::MatrixXcd tr_mat_mixed_derivative(const TRMat& m, int it, int jr) {
  Eigen::MatrixXcd v(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) v(i, j) = tr_mixed_derivative(m(i, j), it, jr);
  return v;
}

}  // namespace disphyp
