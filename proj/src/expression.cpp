#include "disphyp/expression.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace disphyp {

namespace {

struct Token {
  enum class Kind { number, ident, sym, end } kind;
  double number = 0.0;
  std::string text;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= s_.size()) {
      tok_.kind = Token::Kind::end;
      return;
    }
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t used = 0;
      tok_.number = std::stod(s_.substr(i_), &used);
      tok_.kind = Token::Kind::number;
      i_ += used;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      tok_.kind = Token::Kind::ident;
      tok_.text = s_.substr(i_, j - i_);
      i_ = j;
      return;
    }
    tok_.kind = Token::Kind::sym;
    tok_.text = std::string(1, c);
    ++i_;
  }

  const std::string& s_;
  size_t i_ = 0;
  Token tok_;
};

using Node = Expression::Node;
using NodePtr = Expression::NodePtr;
using Op = Expression::Op;
using Fn = Expression::Fn;

NodePtr make_num(Complex v) {
  auto n = std::make_shared<Node>();
  n->op = Op::num;
  n->num = v;
  return n;
}

NodePtr make_binary(Op op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->args = {std::move(a), std::move(b)};
  return n;
}

bool is_const(const Node& n) {
  switch (n.op) {
    case Op::num:
      return true;
    case Op::var_t:
    case Op::var_xi:
    case Op::var_abs_xi:
      return false;
    default:
      for (const auto& a : n.args)
        if (!is_const(*a)) return false;
      return true;
  }
}

Complex eval_const(const Node& n) {
  switch (n.op) {
    case Op::num:
      return n.num;
    case Op::neg:
      return -eval_const(*n.args[0]);
    case Op::add:
      return eval_const(*n.args[0]) + eval_const(*n.args[1]);
    case Op::sub:
      return eval_const(*n.args[0]) - eval_const(*n.args[1]);
    case Op::mul:
      return eval_const(*n.args[0]) * eval_const(*n.args[1]);
    case Op::div:
      return eval_const(*n.args[0]) / eval_const(*n.args[1]);
    case Op::call: {
      const Complex a = eval_const(*n.args[0]);
      switch (n.fn) {
        case Fn::sin:
          return std::sin(a);
        case Fn::cos:
          return std::cos(a);
        case Fn::exp:
          return std::exp(a);
        case Fn::log:
          return std::log(a);
        case Fn::sqrt:
          return std::sqrt(a);
        case Fn::pow:
          return std::pow(a, eval_const(*n.args[1]));
      }
    }
    default:
      throw std::logic_error("eval_const: non-constant node");
  }
}

NodePtr finish_pow(NodePtr base, NodePtr expo) {
  auto n = std::make_shared<Node>();
  n->op = Op::call;
  n->fn = Fn::pow;
  n->args = {std::move(base), std::move(expo)};
  if (is_const(*n->args[1])) {
    const Complex c = eval_const(*n->args[1]);
    if (c.imag() == 0.0) {
      n->pow_is_const = true;
      n->const_pow = c.real();
    }
  }
  return n;
}

class Parser {
 public:
  Parser(const std::string& s, int space_dim) : lex_(s), n_(space_dim), src_(s) {}

  NodePtr parse() {
    NodePtr e = expr();
    if (lex_.peek().kind != Token::Kind::end) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("expression parse error at position " +
                             std::to_string(lex_.peek().pos) + " in \"" + src_ + "\": " + msg);
  }

  bool eat_sym(const char* s) {
    if (lex_.peek().kind == Token::Kind::sym && lex_.peek().text == s) {
      lex_.take();
      return true;
    }
    return false;
  }

  void expect_sym(const char* s) {
    if (!eat_sym(s)) fail(std::string("expected '") + s + "'");
  }

  NodePtr expr() {
    NodePtr a = term();
    for (;;) {
      if (eat_sym("+"))
        a = make_binary(Op::add, a, term());
      else if (eat_sym("-"))
        a = make_binary(Op::sub, a, term());
      else
        return a;
    }
  }

  NodePtr term() {
    NodePtr a = unary();
    for (;;) {
      if (eat_sym("*"))
        a = make_binary(Op::mul, a, unary());
      else if (eat_sym("/"))
        a = make_binary(Op::div, a, unary());
      else
        return a;
    }
  }

  NodePtr unary() {
    if (eat_sym("-")) {
      auto n = std::make_shared<Node>();
      n->op = Op::neg;
      n->args = {unary()};
      return n;
    }
    if (eat_sym("+")) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (eat_sym("^")) return finish_pow(base, unary());
    return base;
  }

  NodePtr atom() {
    const Token t = lex_.take();
    if (t.kind == Token::Kind::number) return make_num(Complex(t.number, 0.0));
    if (t.kind == Token::Kind::sym && t.text == "(") {
      NodePtr e = expr();
      expect_sym(")");
      return e;
    }
    if (t.kind != Token::Kind::ident) fail("expected atom");
    const std::string& id = t.text;
    if (id == "t") {
      auto n = std::make_shared<Node>();
      n->op = Op::var_t;
      return n;
    }
    if (id == "abs_xi") {
      auto n = std::make_shared<Node>();
      n->op = Op::var_abs_xi;
      return n;
    }
    if (id == "xi") {
      expect_sym("[");
      const Token idx = lex_.take();
      if (idx.kind != Token::Kind::number) fail("xi index must be a number");
      expect_sym("]");
      const int k = static_cast<int>(idx.number);
      if (k < 1 || k > n_) fail("xi index out of range");
      auto n = std::make_shared<Node>();
      n->op = Op::var_xi;
      n->xi_index = k;
      return n;
    }
    if (id == "e") return make_num(Complex(std::exp(1.0), 0.0));
    if (id == "pi") return make_num(Complex(M_PI, 0.0));
    if (id == "i") return make_num(Complex(0.0, 1.0));
    Fn fn;
    int arity = 1;
    if (id == "sin")
      fn = Fn::sin;
    else if (id == "cos")
      fn = Fn::cos;
    else if (id == "exp")
      fn = Fn::exp;
    else if (id == "log")
      fn = Fn::log;
    else if (id == "sqrt")
      fn = Fn::sqrt;
    else if (id == "pow") {
      fn = Fn::pow;
      arity = 2;
    } else
      fail("unknown identifier '" + id + "'");
    expect_sym("(");
    NodePtr a = expr();
    NodePtr b;
    if (arity == 2) {
      expect_sym(",");
      b = expr();
    }
    expect_sym(")");
    if (fn == Fn::pow) return finish_pow(a, b);
    auto n = std::make_shared<Node>();
    n->op = Op::call;
    n->fn = fn;
    n->args = {a};
    return n;
  }

  Lexer lex_;
  int n_;
  std::string src_;
};

}  // namespace

Expression Expression::parse(const std::string& text, int space_dim) {
  Expression e;
  e.root_ = Parser(text, space_dim).parse();
  e.text_ = text;
  return e;
}

Complex Expression::eval_point(double t, const std::vector<double>& xi) const {
  std::vector<Complex> cxi(xi.begin(), xi.end());
  return eval<Complex>(Complex(t, 0.0), cxi);
}

}  // namespace disphyp
