#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mathpar/polynomial.hpp"

namespace mathpar {

enum class Fn { Sin, Cos, Tg, Ctg, Ln, Exp };

std::string_view fnName(Fn f) noexcept;
std::optional<Fn> fnFromName(std::string_view name) noexcept;

/// Symbolic expression over a polynomial ring: polynomials, elementary
/// function applications, and sums, products, integer powers and quotients
/// of those. Immutable; copies share structure.
class Expr {
 public:
  enum class Kind { Poly, Apply, Sum, Product, Power, Quotient };

  static Expr poly(Polynomial p);
  static Expr constant(const RingPtr& ring, const Scalar& c);
  /// Applies `f`, evaluating numerically when the argument is constant and
  /// the domain is approximate (R, R64, C64). Exact domains fold only exact
  /// special values such as sin(0) and ln(1).
  static Expr apply(Fn f, const Expr& arg);

  // Constructors that keep their shape (used for factored output).
  static Expr rawApply(Fn f, const Expr& arg);
  static Expr rawSum(std::vector<Expr> terms);
  static Expr rawProduct(std::vector<Expr> factors);
  static Expr rawPower(const Expr& base, int exponent);
  static Expr rawQuotient(const Expr& num, const Expr& den);

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  /// Exact polynomial quotients fold; others stay symbolic.
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr operator-() const;
  Expr pow(int n) const;

  Kind kind() const noexcept;
  const RingPtr& ring() const noexcept;
  bool isPolynomial() const noexcept { return kind() == Kind::Poly; }
  const Polynomial& polynomial() const;
  /// The value when the expression is a constant polynomial.
  std::optional<Scalar> constantValue() const;

  Fn function() const;
  const std::vector<Expr>& children() const;
  int exponent() const;

  /// Simultaneous substitution of the ring's variables; nullopt entries and
  /// missing trailing entries keep the variable.
  Expr substitute(std::span<const std::optional<Expr>> values) const;
  /// n-th derivative with respect to ring variable `var`.
  Expr derivative(std::size_t var, unsigned order = 1) const;
  /// Re-expresses the expression in another ring with the same variables
  /// (coefficients coerced).
  Expr rebased(const RingPtr& ring) const;

  std::string toMathpar(int floatpos) const;
  std::string toLatex(int floatpos) const;
  /// Canonical text used to compare kernels structurally.
  std::string key() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Antiderivative in `var` with constant 0. Z coefficients are promoted to Q.
Polynomial integrate(const Polynomial& p, std::size_t var);
/// Throws NonPolynomialIntegrand unless `e` is a polynomial.
Expr integrate(const Expr& e, std::size_t var);

}  // namespace mathpar
