#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "maxsurf/types.hpp"

namespace maxsurf {

/// Immutable expression tree over complex variables. Node kinds: constant,
/// variable, sum, product, quotient, integer power, exp, log (principal
/// branch, argument in (-pi, pi]), negation. Trees are shared by value; all
/// operations are safe for concurrent reads.
///
/// Expression trees (not user callbacks) keep differentiation exact, which is
/// what the derivative chain F -> M = F' -> M' relies on.
class CxExpr {
 public:
  enum class Kind { Constant, Variable, Sum, Product, Quotient, Power, Exp, Log, Negate };

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  CxExpr() = default;  // empty handle; only assignable

  static CxExpr constant(Complex value);
  static CxExpr variable(int index = 0);
  static CxExpr pow(const CxExpr& base, int exponent);
  static CxExpr exp(const CxExpr& arg);
  static CxExpr log(const CxExpr& arg);

  friend CxExpr operator+(const CxExpr& a, const CxExpr& b);
  friend CxExpr operator-(const CxExpr& a, const CxExpr& b);
  friend CxExpr operator*(const CxExpr& a, const CxExpr& b);
  friend CxExpr operator/(const CxExpr& a, const CxExpr& b);
  friend CxExpr operator-(const CxExpr& a);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  std::size_t node_count() const;
  std::size_t depth() const;

  /// Evaluate with the given variable values (index -> value).
  /// Throws SingularEvaluation on a vanishing quotient denominator, log(0), or
  /// a negative power of 0; NonFinite if the result overflows.
  Complex eval(std::span<const Complex> vars) const;

  /// Single-variable convenience: variable 0 = z.
  Complex eval(Complex z) const;

  /// Exact symbolic partial derivative with respect to variable `var`.
  CxExpr derivative(int var = 0) const;

  /// Replace variable `var` with factor * variable `var` (exact tree rewrite).
  CxExpr scale_variable(int var, Complex factor) const;

  /// Render as text in the expression grammar (round-trippable through
  /// parse_expr for single-variable trees).
  std::string to_string() const;

  const NodePtr& node() const { return node_; }

 private:
  explicit CxExpr(NodePtr n) : node_(std::move(n)) {}
  NodePtr node_;
};

/// A declared pole of an expression: location and order (>= 1).
struct PoleDecl {
  Complex location;
  int order = 1;
};

/// Free-function conveniences over the member operations.
Complex eval(const CxExpr& expr, Complex z);
CxExpr differentiate(const CxExpr& expr);

/// Verify a declared pole: |expr(z) * (z - location)^order| must be finite,
/// nonzero and stay within a factor-10 band across rings of radii 1e-3 and
/// 1e-4 around the location (16 points each). Returns false for any failure;
/// never throws.
bool check_pole(const CxExpr& expr, const PoleDecl& decl);

/// Points closer than this to a declared singularity are rejected for
/// evaluation.
inline constexpr double kSingularityProximity = 1e-12;

/// Throws SingularEvaluation if z is within `threshold` of any declared pole.
void require_clear_of_poles(Complex z, std::span<const PoleDecl> poles,
                            double threshold = kSingularityProximity);

/// Parse the expression grammar:
///   literals a, bi (e.g. 2, 0.5, i, 3i; a+bi via the sum rule), `zeta`,
///   operators + - * / ^ (integer exponent), functions exp(...), log(...),
///   parentheses. Throws ExprParseError with position context.
CxExpr parse_expr(std::string_view text);

}  // namespace maxsurf
