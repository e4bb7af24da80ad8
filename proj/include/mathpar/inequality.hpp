#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mathpar/ast.hpp"
#include "mathpar/cancel.hpp"
#include "mathpar/polynomial.hpp"

namespace mathpar {

/// Endpoint on the extended real line. Finite endpoints are exact when the
/// corresponding root was found to be rational.
struct Endpoint {
  enum class Kind { MinusInfinity, Finite, PlusInfinity };
  Kind kind = Kind::Finite;
  std::variant<mpq_class, double> value = 0.0;

  static Endpoint minusInfinity() { return {Kind::MinusInfinity, 0.0}; }
  static Endpoint plusInfinity() { return {Kind::PlusInfinity, 0.0}; }
  static Endpoint exact(mpq_class v) { return {Kind::Finite, std::move(v)}; }
  static Endpoint approximate(double v) { return {Kind::Finite, v}; }

  double toDouble() const;
  friend bool operator==(const Endpoint& a, const Endpoint& b);
};

struct IntervalComponent {
  Endpoint lower, upper;
  bool lowerClosed = false;
  bool upperClosed = false;

  bool isPoint() const { return lowerClosed && upperClosed && lower == upper; }
  friend bool operator==(const IntervalComponent&, const IntervalComponent&) = default;
};

/// Disjoint, ascending, non-adjacent union of intervals and points.
struct IntervalSet {
  std::vector<IntervalComponent> components;

  bool contains(double x) const;
  /// `(-\infty, -5]\cup\{-1\}\cup[3, \infty)`; `\emptyset` when empty.
  std::string toMathpar(int floatpos) const;
  std::string toLatex(int floatpos) const { return toMathpar(floatpos); }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
};

/// Real solution set of `p op 0` for a polynomial in at most one variable;
/// `op` is one of Le, Ge, Lt, Gt.
IntervalSet solveInequality(const Polynomial& p, RelOp op, const CancelToken& cancel = {});

}  // namespace mathpar
