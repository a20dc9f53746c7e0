#include "maxsurf/cx_expr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "maxsurf/errors.hpp"

namespace maxsurf {

struct CxExpr::Node {
  Kind kind;
  Complex value{};   // Constant
  int var = 0;       // Variable
  int exponent = 0;  // Power
  NodePtr a, b;
};

namespace {

using Node = CxExpr::Node;
using NodePtr = CxExpr::NodePtr;

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

bool is_const(const NodePtr& n, Complex v) {
  return n->kind == CxExpr::Kind::Constant && n->value == v;
}

bool is_const(const NodePtr& n) { return n->kind == CxExpr::Kind::Constant; }

Complex ipow(Complex z, int n) {
  if (n == 0) return Complex(1.0, 0.0);
  bool neg = n < 0;
  unsigned long long e = neg ? static_cast<unsigned long long>(-(long long)n)
                             : static_cast<unsigned long long>(n);
  Complex base = z;
  Complex acc(1.0, 0.0);
  while (e != 0) {
    if (e & 1ULL) acc *= base;
    base *= base;
    e >>= 1ULL;
  }
  if (neg) {
    if (acc == Complex(0.0, 0.0))
      throw SingularEvaluation("negative power of zero");
    return Complex(1.0, 0.0) / acc;
  }
  return acc;
}

Complex eval_node(const Node* n, std::span<const Complex> vars) {
  switch (n->kind) {
    case CxExpr::Kind::Constant:
      return n->value;
    case CxExpr::Kind::Variable:
      if (n->var < 0 || static_cast<std::size_t>(n->var) >= vars.size())
        throw Error("variable index " + std::to_string(n->var) + " not bound");
      return vars[static_cast<std::size_t>(n->var)];
    case CxExpr::Kind::Sum:
      return eval_node(n->a.get(), vars) + eval_node(n->b.get(), vars);
    case CxExpr::Kind::Product:
      return eval_node(n->a.get(), vars) * eval_node(n->b.get(), vars);
    case CxExpr::Kind::Quotient: {
      Complex den = eval_node(n->b.get(), vars);
      if (den == Complex(0.0, 0.0))
        throw SingularEvaluation("quotient denominator vanished");
      return eval_node(n->a.get(), vars) / den;
    }
    case CxExpr::Kind::Power: {
      Complex base = eval_node(n->a.get(), vars);
      if (n->exponent < 0 && base == Complex(0.0, 0.0))
        throw SingularEvaluation("negative power of zero");
      return ipow(base, n->exponent);
    }
    case CxExpr::Kind::Exp:
      return std::exp(eval_node(n->a.get(), vars));
    case CxExpr::Kind::Log: {
      Complex arg = eval_node(n->a.get(), vars);
      if (arg == Complex(0.0, 0.0)) throw SingularEvaluation("log of zero");
      return std::log(arg);  // principal branch, arg in (-pi, pi]
    }
    case CxExpr::Kind::Negate:
      return -eval_node(n->a.get(), vars);
  }
  throw Error("corrupt expression node");
}

std::size_t count_nodes(const Node* n) {
  std::size_t c = 1;
  if (n->a) c += count_nodes(n->a.get());
  if (n->b) c += count_nodes(n->b.get());
  return c;
}

std::size_t depth_of(const Node* n) {
  std::size_t d = 0;
  if (n->a) d = std::max(d, depth_of(n->a.get()));
  if (n->b) d = std::max(d, depth_of(n->b.get()));
  return d + 1;
}

}  // namespace

CxExpr CxExpr::constant(Complex value) {
  return CxExpr(make_node({Kind::Constant, value, 0, 0, nullptr, nullptr}));
}

CxExpr CxExpr::variable(int index) {
  if (index < 0) throw Error("variable index must be >= 0");
  return CxExpr(make_node({Kind::Variable, {}, index, 0, nullptr, nullptr}));
}

CxExpr operator+(const CxExpr& a, const CxExpr& b) {
  if (!a.valid() || !b.valid()) throw Error("empty expression");
  if (is_const(a.node_, Complex(0, 0))) return b;
  if (is_const(b.node_, Complex(0, 0))) return a;
  if (is_const(a.node_) && is_const(b.node_))
    return CxExpr::constant(a.node_->value + b.node_->value);
  return CxExpr(make_node({CxExpr::Kind::Sum, {}, 0, 0, a.node_, b.node_}));
}

CxExpr operator-(const CxExpr& a) {
  if (!a.valid()) throw Error("empty expression");
  if (is_const(a.node_)) return CxExpr::constant(-a.node_->value);
  if (a.node_->kind == CxExpr::Kind::Negate) return CxExpr(a.node_->a);
  return CxExpr(make_node({CxExpr::Kind::Negate, {}, 0, 0, a.node_, nullptr}));
}

CxExpr operator-(const CxExpr& a, const CxExpr& b) { return a + (-b); }

CxExpr operator*(const CxExpr& a, const CxExpr& b) {
  if (!a.valid() || !b.valid()) throw Error("empty expression");
  if (is_const(a.node_, Complex(0, 0)) || is_const(b.node_, Complex(0, 0)))
    return CxExpr::constant(Complex(0, 0));
  if (is_const(a.node_, Complex(1, 0))) return b;
  if (is_const(b.node_, Complex(1, 0))) return a;
  if (is_const(a.node_) && is_const(b.node_))
    return CxExpr::constant(a.node_->value * b.node_->value);
  return CxExpr(make_node({CxExpr::Kind::Product, {}, 0, 0, a.node_, b.node_}));
}

CxExpr operator/(const CxExpr& a, const CxExpr& b) {
  if (!a.valid() || !b.valid()) throw Error("empty expression");
  if (is_const(b.node_, Complex(1, 0))) return a;
  // Constant quotients are not folded: division by zero must surface at eval.
  return CxExpr(make_node({CxExpr::Kind::Quotient, {}, 0, 0, a.node_, b.node_}));
}

CxExpr CxExpr::pow(const CxExpr& base, int exponent) {
  if (!base.valid()) throw Error("empty expression");
  if (exponent == 0) return constant(Complex(1, 0));
  if (exponent == 1) return base;
  if (is_const(base.node_) && (exponent > 0 || base.node_->value != Complex(0, 0)))
    return constant(ipow(base.node_->value, exponent));
  return CxExpr(make_node({Kind::Power, {}, 0, exponent, base.node_, nullptr}));
}

CxExpr CxExpr::exp(const CxExpr& arg) {
  if (!arg.valid()) throw Error("empty expression");
  return CxExpr(make_node({Kind::Exp, {}, 0, 0, arg.node_, nullptr}));
}

CxExpr CxExpr::log(const CxExpr& arg) {
  if (!arg.valid()) throw Error("empty expression");
  return CxExpr(make_node({Kind::Log, {}, 0, 0, arg.node_, nullptr}));
}

CxExpr::Kind CxExpr::kind() const {
  if (!node_) throw Error("empty expression");
  return node_->kind;
}

std::size_t CxExpr::node_count() const {
  if (!node_) return 0;
  return count_nodes(node_.get());
}

std::size_t CxExpr::depth() const {
  if (!node_) return 0;
  return depth_of(node_.get());
}

Complex CxExpr::eval(std::span<const Complex> vars) const {
  if (!node_) throw Error("empty expression");
  Complex r = eval_node(node_.get(), vars);
  if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
    throw NonFinite("expression evaluated to a non-finite value");
  return r;
}

Complex CxExpr::eval(Complex z) const {
  const Complex vars[1] = {z};
  return eval(std::span<const Complex>(vars, 1));
}

CxExpr CxExpr::derivative(int var) const {
  if (!node_) throw Error("empty expression");
  const Node* n = node_.get();
  CxExpr a = n->a ? CxExpr(n->a) : CxExpr();
  CxExpr b = n->b ? CxExpr(n->b) : CxExpr();
  switch (n->kind) {
    case Kind::Constant:
      return constant(Complex(0, 0));
    case Kind::Variable:
      return constant(n->var == var ? Complex(1, 0) : Complex(0, 0));
    case Kind::Sum:
      return a.derivative(var) + b.derivative(var);
    case Kind::Product:
      return a.derivative(var) * b + a * b.derivative(var);
    case Kind::Quotient:
      return (a.derivative(var) * b - a * b.derivative(var)) / (b * b);
    case Kind::Power:
      return constant(Complex(n->exponent, 0)) * pow(a, n->exponent - 1) * a.derivative(var);
    case Kind::Exp:
      return exp(a) * a.derivative(var);
    case Kind::Log:
      return a.derivative(var) / a;
    case Kind::Negate:
      return -a.derivative(var);
  }
  throw Error("corrupt expression node");
}

CxExpr CxExpr::scale_variable(int var, Complex factor) const {
  if (!node_) throw Error("empty expression");
  const Node* n = node_.get();
  CxExpr a = n->a ? CxExpr(n->a).scale_variable(var, factor) : CxExpr();
  CxExpr b = n->b ? CxExpr(n->b).scale_variable(var, factor) : CxExpr();
  switch (n->kind) {
    case Kind::Constant:
      return CxExpr(node_);
    case Kind::Variable:
      if (n->var == var) return constant(factor) * CxExpr(node_);
      return CxExpr(node_);
    case Kind::Sum:
      return a + b;
    case Kind::Product:
      return a * b;
    case Kind::Quotient:
      return a / b;
    case Kind::Power:
      return pow(a, n->exponent);
    case Kind::Exp:
      return exp(a);
    case Kind::Log:
      return log(a);
    case Kind::Negate:
      return -a;
  }
  throw Error("corrupt expression node");
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_constant(Complex c) {
  if (c.imag() == 0.0) return format_double(c.real());
  std::string im = c.imag() == 1.0    ? "i"
                   : c.imag() == -1.0 ? "-i"
                                      : format_double(c.imag()) + "i";
  if (c.real() == 0.0) return im;
  std::string s = format_double(c.real());
  if (c.imag() > 0.0)
    s += "+" + im;
  else
    s += im;  // negative imag carries its own sign
  return "(" + s + ")";
}

// Precedence: sum 1, product/quotient 2, negate 3, power 4, atoms 5.
int precedence(const Node* n) {
  switch (n->kind) {
    case CxExpr::Kind::Sum:
      return 1;
    case CxExpr::Kind::Product:
    case CxExpr::Kind::Quotient:
      return 2;
    case CxExpr::Kind::Negate:
      return 3;
    case CxExpr::Kind::Power:
      return 4;
    default:
      return 5;
  }
}

void print_node(std::ostringstream& out, const Node* n, int parent_prec) {
  int prec = precedence(n);
  bool need_parens = prec < parent_prec;
  if (need_parens) out << "(";
  switch (n->kind) {
    case CxExpr::Kind::Constant: {
      std::string s = format_constant(n->value);
      // Negative literals need parens in any operator context.
      if (!need_parens && parent_prec > 1 && !s.empty() && s[0] == '-') out << "(" << s << ")";
      else out << s;
      break;
    }
    case CxExpr::Kind::Variable:
      if (n->var == 0) out << "zeta";
      else out << "var" << n->var;
      break;
    case CxExpr::Kind::Sum:
      print_node(out, n->a.get(), 1);
      out << "+";
      print_node(out, n->b.get(), 2);
      break;
    case CxExpr::Kind::Product:
      print_node(out, n->a.get(), 2);
      out << "*";
      print_node(out, n->b.get(), 3);
      break;
    case CxExpr::Kind::Quotient:
      print_node(out, n->a.get(), 2);
      out << "/";
      print_node(out, n->b.get(), 3);
      break;
    case CxExpr::Kind::Power:
      print_node(out, n->a.get(), 5);
      out << "^" << n->exponent;
      break;
    case CxExpr::Kind::Exp:
      out << "exp(";
      print_node(out, n->a.get(), 0);
      out << ")";
      break;
    case CxExpr::Kind::Log:
      out << "log(";
      print_node(out, n->a.get(), 0);
      out << ")";
      break;
    case CxExpr::Kind::Negate:
      out << "-";
      print_node(out, n->a.get(), 3);
      break;
  }
  if (need_parens) out << ")";
}

}  // namespace

std::string CxExpr::to_string() const {
  if (!node_) return "<empty>";
  std::ostringstream out;
  print_node(out, node_.get(), 0);
  return out.str();
}

Complex eval(const CxExpr& expr, Complex z) { return expr.eval(z); }

CxExpr differentiate(const CxExpr& expr) { return expr.derivative(0); }

bool check_pole(const CxExpr& expr, const PoleDecl& decl) {
  if (decl.order < 1) return false;
  constexpr int kRingPoints = 16;
  constexpr double kRadii[2] = {1e-3, 1e-4};
  double lo = 0.0, hi = 0.0;
  bool first = true;
  try {
    for (double r : kRadii) {
      for (int k = 0; k < kRingPoints; ++k) {
        Complex z = decl.location + r * cis(2.0 * kPi * k / kRingPoints);
        Complex v = expr.eval(z);
        double m = std::abs(v) * std::pow(std::abs(z - decl.location), decl.order);
        if (!std::isfinite(m) || m < 1e-250) return false;
        if (first) {
          lo = hi = m;
          first = false;
        } else {
          lo = std::min(lo, m);
          hi = std::max(hi, m);
        }
      }
    }
  } catch (const Error&) {
    return false;
  }
  return hi <= 10.0 * lo;
}

void require_clear_of_poles(Complex z, std::span<const PoleDecl> poles, double threshold) {
  for (const auto& p : poles) {
    if (std::abs(z - p.location) < threshold)
      throw SingularEvaluation("evaluation point within " + std::to_string(threshold) +
                               " of declared pole");
  }
}

}  // namespace maxsurf
