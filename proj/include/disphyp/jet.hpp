#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <vector>

namespace disphyp {

using Complex = std::complex<double>;

// Base-ring helpers; Jet<T> overloads them recursively below.
inline double recip(double x) { return 1.0 / x; }
inline Complex recip(const Complex& z) { return 1.0 / z; }
inline double lead_abs(double x) { return std::abs(x); }
inline double lead_abs(const Complex& z) { return std::abs(z); }
inline double conj_ring(double x) { return x; }
inline Complex conj_ring(const Complex& z) { return std::conj(z); }
inline double value_of(double x) { return x; }
inline Complex value_of(const Complex& z) { return z; }
inline double one_like(double) { return 1.0; }
inline Complex one_like(const Complex&) { return Complex(1.0, 0.0); }
inline double zero_like(double) { return 0.0; }
inline Complex zero_like(const Complex&) { return Complex(0.0, 0.0); }
inline Complex scale_complex(const Complex& x, const Complex& s) { return x * s; }

/// Truncated Taylor series in one real variable with coefficients in T.
/// c[k] holds f^(k)/k!. Nesting Jet<Jet<Complex>> gives mixed (t,rho) jets.
template <typename T>
class Jet {
 public:
  Jet() : c_(1, T{}) {}
  explicit Jet(std::vector<T> coeffs) : c_(std::move(coeffs)) { assert(!c_.empty()); }

  static Jet constant(const T& v, int order) {
    Jet j;
    j.c_.assign(static_cast<size_t>(order) + 1, zero_like(v));
    j.c_[0] = v;
    return j;
  }
  // v + slope*s
  static Jet variable(const T& v, int order, const T& slope) {
    Jet j = constant(v, order);
    if (order >= 1) j.c_[1] = slope;
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  T& operator[](int k) { return c_[static_cast<size_t>(k)]; }
  const T& value() const { return c_[0]; }

  // k-th derivative (not Taylor coefficient)
  T derivative(int k) const {
    double f = 1.0;
    for (int j = 2; j <= k; ++j) f *= j;
    return c_[static_cast<size_t>(k)] * f;
  }

  Jet& operator+=(const Jet& o) {
    assert(order() == o.order());
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    assert(order() == o.order());
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(const Jet& a) {
    Jet r = a;
    for (auto& x : r.c_) x = x * (-1.0);
    return r;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    assert(a.order() == b.order());
    const int n = a.order();
    Jet r = constant(zero_like(a.c_[0]), n);
    for (int k = 0; k <= n; ++k) {
      T acc = zero_like(a.c_[0]);
      for (int j = 0; j <= k; ++j) acc += a.c_[j] * b.c_[static_cast<size_t>(k - j)];
      r.c_[static_cast<size_t>(k)] = acc;
    }
    return r;
  }

  Jet& scale(double s) {
    for (auto& x : c_) x = x * s;
    return *this;
  }
  friend Jet operator*(Jet a, double s) { return a.scale(s); }
  friend Jet operator*(double s, Jet a) { return a.scale(s); }

 private:
  std::vector<T> c_;
};

template <typename T>
Jet<T> recip(const Jet<T>& f) {
  const int n = f.order();
  Jet<T> g = Jet<T>::constant(zero_like(f.value()), n);
  const T inv0 = recip(f.value());
  g[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    T acc = zero_like(f.value());
    for (int j = 1; j <= k; ++j) acc += f[j] * g[k - j];
    g[k] = (inv0 * acc) * (-1.0);
  }
  return g;
}

template <typename T>
Jet<T> operator/(const Jet<T>& a, const Jet<T>& b) {
  return a * recip(b);
}

template <typename T>
Jet<T> sqrt(const Jet<T>& f) {
  using std::sqrt;
  const int n = f.order();
  Jet<T> g = Jet<T>::constant(zero_like(f.value()), n);
  g[0] = sqrt(f.value());
  const T half_inv = recip(g[0] + g[0]);
  for (int k = 1; k <= n; ++k) {
    T acc = f[k];
    for (int j = 1; j <= k - 1; ++j) acc -= g[j] * g[k - j];
    g[k] = half_inv * acc;
  }
  return g;
}

template <typename T>
Jet<T> exp(const Jet<T>& f) {
  using std::exp;
  const int n = f.order();
  Jet<T> g = Jet<T>::constant(zero_like(f.value()), n);
  g[0] = exp(f.value());
  for (int k = 1; k <= n; ++k) {
    T acc = zero_like(f.value());
    for (int j = 1; j <= k; ++j) acc += (f[j] * static_cast<double>(j)) * g[k - j];
    g[k] = acc * (1.0 / k);
  }
  return g;
}

template <typename T>
Jet<T> log(const Jet<T>& f) {
  using std::log;
  const int n = f.order();
  Jet<T> g = Jet<T>::constant(zero_like(f.value()), n);
  g[0] = log(f.value());
  const T inv0 = recip(f.value());
  for (int k = 1; k <= n; ++k) {
    T acc = f[k] * static_cast<double>(k);
    for (int j = 1; j <= k - 1; ++j) acc -= (g[j] * static_cast<double>(j)) * f[k - j];
    g[k] = inv0 * acc * (1.0 / k);
  }
  return g;
}

template <typename T>
void sin_cos(const Jet<T>& f, Jet<T>& s, Jet<T>& c) {
  using std::cos;
  using std::sin;
  const int n = f.order();
  s = Jet<T>::constant(zero_like(f.value()), n);
  c = Jet<T>::constant(zero_like(f.value()), n);
  s[0] = sin(f.value());
  c[0] = cos(f.value());
  for (int k = 1; k <= n; ++k) {
    T as = zero_like(f.value());
    T ac = zero_like(f.value());
    for (int j = 1; j <= k; ++j) {
      const T fj = f[j] * static_cast<double>(j);
      as += fj * c[k - j];
      ac += fj * s[k - j];
    }
    s[k] = as * (1.0 / k);
    c[k] = ac * (-1.0 / k);
  }
}

template <typename T>
Jet<T> sin(const Jet<T>& f) {
  Jet<T> s, c;
  sin_cos(f, s, c);
  return s;
}

template <typename T>
Jet<T> cos(const Jet<T>& f) {
  Jet<T> s, c;
  sin_cos(f, s, c);
  return c;
}

template <typename T>
Jet<T> one_like(const Jet<T>& f) {
  return Jet<T>::constant(one_like(f.value()), f.order());
}

template <typename T>
Jet<T> zero_like(const Jet<T>& f) {
  return Jet<T>::constant(zero_like(f.value()), f.order());
}

// f^p for real exponent; integer powers stay exact (no log branch issues).
template <typename T>
Jet<T> pow(const Jet<T>& f, double p) {
  double ip;
  if (std::modf(p, &ip) == 0.0 && std::abs(ip) <= 64) {
    long e = static_cast<long>(ip);
    Jet<T> base = e < 0 ? recip(f) : f;
    if (e < 0) e = -e;
    Jet<T> r = one_like(f);
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }
  return exp(log(f) * p);
}

template <typename T>
Jet<T> conj_ring(const Jet<T>& f) {
  Jet<T> r = f;
  for (int k = 0; k <= r.order(); ++k) r[k] = conj_ring(r[k]);
  return r;
}

template <typename T>
double lead_abs(const Jet<T>& f) {
  return lead_abs(f.value());
}

template <typename T>
auto value_of(const Jet<T>& f) {
  return value_of(f.value());
}

template <typename T>
Jet<T> scale_complex(const Jet<T>& f, const Complex& s) {
  Jet<T> r = f;
  for (int k = 0; k <= r.order(); ++k) r[k] = scale_complex(r[k], s);
  return r;
}

// D_t = -i d/dt applied to the outermost jet variable. The result's top
// coefficient is garbage-free but carries one order less of information;
// callers must request enough t-order up front.
template <typename T>
Jet<T> d_op(const Jet<T>& f) {
  const int n = f.order();
  Jet<T> r = Jet<T>::constant(zero_like(f.value()), n);
  const Complex minus_i(0.0, -1.0);
  for (int k = 0; k + 1 <= n; ++k)
    r[k] = scale_complex(f[k + 1], minus_i) * static_cast<double>(k + 1);
  return r;
}

// Mixed jet scalar used throughout: outer variable t, inner variable rho.
using CJet = Jet<Complex>;
using TRJet = Jet<Jet<Complex>>;

inline TRJet tr_constant(const Complex& v, int kt, int kr) {
  return TRJet::constant(CJet::constant(v, kr), kt);
}
// t0 + s as a (kt,kr)-jet
inline TRJet tr_time(double t0, int kt, int kr) {
  return TRJet::variable(CJet::constant(Complex(t0, 0.0), kr), kt,
                         CJet::constant(Complex(1.0, 0.0), kr));
}
// xi0_i + rho*dir_i as a (kt,kr)-jet
inline TRJet tr_freq(double xi0, double dir, int kt, int kr) {
  return TRJet::constant(CJet::variable(Complex(xi0, 0.0), kr, Complex(dir, 0.0)), kt);
}

// Taylor coefficient (i in t, j in rho).
inline Complex tr_coeff(const TRJet& f, int i, int j) { return f[i][j]; }

// Plain mixed partial d_t^i d_rho^j.
inline Complex tr_mixed_derivative(const TRJet& f, int i, int j) {
  double fac = 1.0;
  for (int k = 2; k <= i; ++k) fac *= k;
  for (int k = 2; k <= j; ++k) fac *= k;
  return f[i][j] * fac;
}

}  // namespace disphyp
