#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mathpar/algebra.hpp"

namespace mathpar {

/// Coefficient domain plus ordered variables shared by a family of
/// polynomials. The first variable is the least significant.
struct PolyRing {
  ClassicalDomain domain = ClassicalDomain::Q;
  std::vector<std::string> variables;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr makeRing(ClassicalDomain domain, std::vector<std::string> variables);
bool sameRing(const RingPtr& a, const RingPtr& b);
/// Same variables, different coefficient domain.
RingPtr withDomain(const RingPtr& ring, ClassicalDomain domain);

/// Exponent vector aligned with the ring's variables.
using Monomial = std::vector<unsigned>;

/// Lexicographic comparison with the last variable most significant.
/// Returns <0, 0, >0.
int compareMonomials(const Monomial& a, const Monomial& b);

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return compareMonomials(a, b) > 0; }
};

bool divides(const Monomial& a, const Monomial& b);
Monomial monomialLcm(const Monomial& a, const Monomial& b);
Monomial monomialProduct(const Monomial& a, const Monomial& b);
/// b / a, assuming divides(a, b).
Monomial monomialQuotient(const Monomial& b, const Monomial& a);
unsigned totalDegree(const Monomial& m);

/// Sparse multivariate polynomial. Terms are kept in descending monomial
/// order; no stored coefficient is zero.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialGreater>;

  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, const Scalar& c);

  const RingPtr& ring() const noexcept { return ring_; }
  ClassicalDomain domain() const noexcept { return ring_->domain; }
  std::size_t variableCount() const noexcept { return ring_->variables.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t termCount() const noexcept { return terms_.size(); }

  bool isZero() const noexcept { return terms_.empty(); }
  bool isConstant() const;
  /// The constant term (zero of the domain if absent).
  Scalar constantValue() const;
  const Monomial& leadingMonomial() const;
  const Scalar& leadingCoefficient() const;
  unsigned totalDegree() const;
  unsigned degreeIn(std::size_t var) const;
  /// Indices of variables with a positive exponent in some term.
  std::vector<std::size_t> variablesUsed() const;

  /// Adds c * m into the polynomial in place.
  void addTerm(const Monomial& m, const Scalar& c);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Scalar& c) const;
  /// Divides every coefficient by c (DomainMismatch in Z if inexact).
  Polynomial dividedBy(const Scalar& c) const;
  Polynomial timesTerm(const Monomial& m, const Scalar& c) const;
  /// Repeated squaring.
  Polynomial pow(unsigned n) const;

  Polynomial derivative(std::size_t var) const;
  /// Term-wise antiderivative with constant 0. The ring must be a field
  /// (callers promote Z to Q first).
  Polynomial integral(std::size_t var) const;

  /// Coerces every coefficient into `domain`.
  Polynomial toDomain(ClassicalDomain domain) const;
  /// Reinterprets the terms in a ring with the same number of variables.
  Polynomial rebased(RingPtr ring) const;
  /// Embeds into a ring whose variable list starts with this ring's variables.
  Polynomial extendedTo(RingPtr ring) const;

  /// Value at a point given for every variable.
  Scalar evaluate(std::span<const Scalar> point) const;
  std::complex<double> evaluateComplex(std::span<const std::complex<double>> point) const;
  /// Simultaneous substitution; nullopt entries keep the variable.
  Polynomial substitute(std::span<const std::optional<Polynomial>> values) const;

  /// Coefficients in ascending degree when only `var` occurs.
  std::vector<Scalar> univariateCoefficients(std::size_t var) const;
  static Polynomial fromUnivariate(RingPtr ring, std::size_t var, std::span<const Scalar> coeffs);

  std::string toMathpar(int floatpos) const;
  std::string toLatex(int floatpos) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  TermMap terms_;
};

/// Throws DomainMismatch when the polynomials live in different rings.
void requireSameRing(const Polynomial& a, const Polynomial& b);

/// a / b when b divides a exactly (multivariate division with remainder 0).
std::optional<Polynomial> divideExact(const Polynomial& a, const Polynomial& b);

/// Text of a monomial's variable part, e.g. `x^4y^3`; empty for 1.
std::string monomialMathpar(const PolyRing& ring, const Monomial& m);
std::string monomialLatex(const PolyRing& ring, const Monomial& m);

}  // namespace mathpar
