#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "disphyp/expression.hpp"
#include "disphyp/jet.hpp"
#include "disphyp/ring_matrix.hpp"

using namespace disphyp;

namespace {

double fd_derivative(const Expression& e, double t, std::vector<double> xi, int axis,
                     double h) {
  // axis 0 = t, axis k = xi[k]
  auto at = [&](double d) {
    double tt = t;
    std::vector<double> x = xi;
    if (axis == 0)
      tt += d;
    else
      x[static_cast<size_t>(axis - 1)] += d;
    return e.eval_point(tt, x).real();
  };
  return (at(h) - at(-h)) / (2 * h);
}

}  // namespace

TEST_CASE("jet recurrences match closed forms") {
  // f(s) = exp(sin(s)) at s0 = 0.3, orders up to 6
  const double s0 = 0.3;
  CJet s = CJet::variable(Complex(s0, 0), 6, Complex(1, 0));
  CJet f = exp(sin(s));
  // derivatives of exp(sin(s)): check against finite differences of high order
  const double h = 1e-2;
  auto g = [](double x) { return std::exp(std::sin(x)); };
  const double d1 = (g(s0 + h) - g(s0 - h)) / (2 * h);
  const double d2 = (g(s0 + h) - 2 * g(s0) + g(s0 - h)) / (h * h);
  CHECK(f.value().real() == doctest::Approx(g(s0)).epsilon(1e-14));
  CHECK(f.derivative(1).real() == doctest::Approx(d1).epsilon(1e-4));
  CHECK(f.derivative(2).real() == doctest::Approx(d2).epsilon(1e-3));

  CJet q = log(sqrt(s * s + CJet::constant(Complex(1, 0), 6)));
  // q = 0.5 log(1+s^2); q'(s) = s/(1+s^2)
  CHECK(q.derivative(1).real() ==
        doctest::Approx(s0 / (1 + s0 * s0)).epsilon(1e-12));

  CJet p = pow(s, 3.0);
  CHECK(p.derivative(2).real() == doctest::Approx(6 * s0).epsilon(1e-12));
  CJet pr = pow(s, 0.5) * pow(s, 0.5);
  CHECK(pr.value().real() == doctest::Approx(s0).epsilon(1e-12));
}

TEST_CASE("nested jets give mixed partial derivatives") {
  // f(t, r) = sin(t * r) along xi = xi0 + r, t = t0 + s
  const double t0 = 0.7, x0 = 1.3;
  TRJet t = tr_time(t0, 3, 3);
  TRJet x = tr_freq(x0, 1.0, 3, 3);
  TRJet f = sin(t * x);
  // d^2/dtdx sin(tx) = cos(tx) - tx sin(tx)... derive: d/dt = x cos(tx);
  // d/dx of that = cos(tx) - t x sin(tx) * ... careful: d/dx [x cos(tx)] =
  // cos(tx) - x t sin(tx)
  const double expect = std::cos(t0 * x0) - x0 * t0 * std::sin(t0 * x0);
  CHECK(tr_mixed_derivative(f, 1, 1).real() == doctest::Approx(expect).epsilon(1e-12));
  // d^2/dt^2 = -x^2 sin(tx)
  CHECK(tr_mixed_derivative(f, 2, 0).real() ==
        doctest::Approx(-x0 * x0 * std::sin(t0 * x0)).epsilon(1e-12));
}

TEST_CASE("expression grammar parses and differentiates") {
  const auto e = Expression::parse("(2 + cos(log(e + t))) * abs_xi", 2);
  const double t0 = 4.0;
  std::vector<double> xi = {0.6, -0.8};
  const double axi = 1.0;
  const double expect = (2 + std::cos(std::log(std::exp(1.0) + t0))) * axi;
  CHECK(e.eval_point(t0, xi).real() == doctest::Approx(expect).epsilon(1e-14));

  // AD derivative in t vs FD
  TRJet t = tr_time(t0, 2, 0);
  std::vector<TRJet> xj = {tr_freq(xi[0], 0.0, 2, 0), tr_freq(xi[1], 0.0, 2, 0)};
  TRJet v = e.eval(t, xj);
  const double fd = fd_derivative(e, t0, xi, 0, 1e-6);
  CHECK(tr_mixed_derivative(v, 1, 0).real() == doctest::Approx(fd).epsilon(1e-7));

  // AD derivative in xi1 vs FD
  TRJet t2 = tr_time(t0, 0, 2);
  std::vector<TRJet> xj2 = {tr_freq(xi[0], 1.0, 0, 2), tr_freq(xi[1], 0.0, 0, 2)};
  TRJet v2 = e.eval(t2, xj2);
  const double fd2 = fd_derivative(e, t0, xi, 1, 1e-6);
  CHECK(tr_mixed_derivative(v2, 0, 1).real() == doctest::Approx(fd2).epsilon(1e-7));

  CHECK_THROWS(Expression::parse("xi[3]", 2));
  CHECK_THROWS(Expression::parse("foo(t)", 2));
  CHECK_THROWS(Expression::parse("t +", 2));

  const auto c = Expression::parse("pow(abs_xi, 2) + i * t", 1);
  CHECK(c.eval_point(2.0, {3.0}).real() == doctest::Approx(9.0));
  CHECK(c.eval_point(2.0, {3.0}).imag() == doctest::Approx(2.0));
}

TEST_CASE("ring matrix inverse on jets") {
  const int kt = 2, kr = 1;
  TRMat a(2, tr_constant(Complex(0, 0), kt, kr));
  TRJet t = tr_time(0.5, kt, kr);
  a(0, 0) = cos(t) + tr_constant(Complex(2, 0), kt, kr);
  a(0, 1) = sin(t);
  a(1, 0) = tr_constant(Complex(0, 1), kt, kr) * t;
  a(1, 1) = exp(t * tr_constant(Complex(0.1, 0), kt, kr)) +
            tr_constant(Complex(1, 0), kt, kr);
  TRMat inv = a.inverse();
  TRMat prod = a * inv;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Complex want = i == j ? Complex(1, 0) : Complex(0, 0);
      CHECK(std::abs(tr_coeff(prod(i, j), 0, 0) - want) < 1e-13);
      CHECK(std::abs(tr_coeff(prod(i, j), 1, 0)) < 1e-13);
      CHECK(std::abs(tr_coeff(prod(i, j), 2, 1)) < 1e-13);
    }
}
