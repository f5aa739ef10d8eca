#pragma once

#include <memory>
#include <string>
#include <vector>

#include "disphyp/jet.hpp"

namespace disphyp {

/// Parsed expression over t, xi[1..n], abs_xi with sin, cos, exp, log, pow,
/// sqrt and constants e, pi, i. Evaluates on any jet-like scalar, so the
/// same tree serves pointwise evaluation and exact derivatives.
class Expression {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  enum class Op { num, var_t, var_xi, var_abs_xi, neg, add, sub, mul, div, call };
  enum class Fn { sin, cos, exp, log, sqrt, pow };

  struct Node {
    Op op;
    Complex num{};       // op == num
    int xi_index = 0;    // op == var_xi (1-based)
    Fn fn = Fn::sin;     // op == call
    double const_pow = 0.0;
    bool pow_is_const = false;
    std::vector<NodePtr> args;
  };

  Expression() = default;
  static Expression parse(const std::string& text, int space_dim);

  bool empty() const { return !root_; }
  const std::string& text() const { return text_; }

  template <typename S>
  S eval(const S& t, const std::vector<S>& xi) const {
    return eval_node(*root_, t, xi);
  }

  Complex eval_point(double t, const std::vector<double>& xi) const;

 private:
  template <typename S>
  static S eval_node(const Node& n, const S& t, const std::vector<S>& xi);

  NodePtr root_;
  std::string text_;
};

template <typename S>
S Expression::eval_node(const Node& n, const S& t, const std::vector<S>& xi) {
  using std::cos;
  using std::exp;
  using std::log;
  using std::pow;
  using std::sin;
  using std::sqrt;
  switch (n.op) {
    case Op::num:
      return scale_complex(one_like(t), n.num);
    case Op::var_t:
      return t;
    case Op::var_xi:
      return xi[static_cast<size_t>(n.xi_index - 1)];
    case Op::var_abs_xi: {
      S acc = xi[0] * xi[0];
      for (size_t k = 1; k < xi.size(); ++k) acc += xi[k] * xi[k];
      return sqrt(acc);
    }
    case Op::neg:
      return -eval_node(*n.args[0], t, xi);
    case Op::add:
      return eval_node(*n.args[0], t, xi) + eval_node(*n.args[1], t, xi);
    case Op::sub:
      return eval_node(*n.args[0], t, xi) - eval_node(*n.args[1], t, xi);
    case Op::mul:
      return eval_node(*n.args[0], t, xi) * eval_node(*n.args[1], t, xi);
    case Op::div:
      return eval_node(*n.args[0], t, xi) / eval_node(*n.args[1], t, xi);
    case Op::call: {
      const S a = eval_node(*n.args[0], t, xi);
      switch (n.fn) {
        case Fn::sin:
          return sin(a);
        case Fn::cos:
          return cos(a);
        case Fn::exp:
          return exp(a);
        case Fn::log:
          return log(a);
        case Fn::sqrt:
          return sqrt(a);
        case Fn::pow:
          if (n.pow_is_const) return pow(a, n.const_pow);
          return exp(log(a) * eval_node(*n.args[1], t, xi));
      }
    }
  }
  return S{};
}

}  // namespace disphyp
