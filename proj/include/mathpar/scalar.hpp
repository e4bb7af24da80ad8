#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include "mathpar/error.hpp"

namespace mathpar {

/// Classical coefficient domains. R is exact (rational-backed) with decimal
/// display; R64 and C64 use hardware doubles.
enum class ClassicalDomain { Z, Q, R, R64, C64 };

std::string_view domainName(ClassicalDomain d) noexcept;
bool isExactDomain(ClassicalDomain d) noexcept;

/// Element of a tropical carrier: a finite number or one of the infinities.
struct TropicalScalar {
  enum class Kind { MinusInfinity, Finite, PlusInfinity };

  Kind kind = Kind::Finite;
  mpq_class value;  // meaningful only when finite

  static TropicalScalar finite(mpq_class v) {
    v.canonicalize();
    return {Kind::Finite, std::move(v)};
  }
  static TropicalScalar plusInfinity() { return {Kind::PlusInfinity, 0}; }
  static TropicalScalar minusInfinity() { return {Kind::MinusInfinity, 0}; }

  bool isFinite() const noexcept { return kind == Kind::Finite; }

  friend bool operator==(const TropicalScalar& a, const TropicalScalar& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
  }
};

/// Numeric comparison on the extended line (-inf < finite < +inf).
int compareExtended(const TropicalScalar& a, const TropicalScalar& b);

struct ExactReal {
  mpq_class value;
  friend bool operator==(const ExactReal& a, const ExactReal& b) { return a.value == b.value; }
};

/// A number in one of the kernel's domains. All coefficients of a single
/// polynomial share one kind.
class Scalar {
 public:
  enum class Kind { Integer, Rational, Real, Float, Complex, Tropical };
  using Rep = std::variant<mpz_class, mpq_class, ExactReal, double, std::complex<double>, TropicalScalar>;

  Scalar() : rep_(mpz_class(0)) {}
  explicit Scalar(Rep rep);

  static Scalar integer(const mpz_class& v) { return Scalar(Rep(v)); }
  static Scalar rational(mpq_class v);
  static Scalar real(mpq_class v);
  static Scalar floating(double v) { return Scalar(Rep(v)); }
  static Scalar complex(std::complex<double> v) { return Scalar(Rep(v)); }
  static Scalar tropical(TropicalScalar v) { return Scalar(Rep(std::move(v))); }

  /// Integer `n` represented in the domain.
  static Scalar fromInteger(ClassicalDomain d, long n);
  static Scalar zero(ClassicalDomain d) { return fromInteger(d, 0); }
  static Scalar one(ClassicalDomain d) { return fromInteger(d, 1); }
  /// Exact decimal literal interpreted in the domain (DomainMismatch for a
  /// fractional literal in Z).
  static Scalar fromDecimal(ClassicalDomain d, std::string_view text);

  Kind kind() const noexcept { return static_cast<Kind>(rep_.index()); }
  const Rep& rep() const noexcept { return rep_; }

  bool isZero() const;
  bool isOne() const;
  /// True for Integer/Rational/Real, whose values are held exactly.
  bool isExact() const noexcept;
  /// Exact rational value of an Integer/Rational/Real scalar.
  mpq_class toRational() const;
  /// Approximate complex value (tropical scalars are rejected).
  std::complex<double> toComplex() const;
  double toDouble() const;
  /// Sign of a real-valued scalar (-1, 0, 1).
  int sign() const;

  const TropicalScalar& asTropical() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.rep_ == b.rep_; }

 private:
  Rep rep_;
};

/// The kind of scalar each classical domain uses.
Scalar::Kind kindOf(ClassicalDomain d) noexcept;

/// Converts a classical scalar into `d`; throws DomainMismatch if the value
/// is not representable (e.g. 1/2 into Z, a non-real complex into R64).
Scalar coerce(const Scalar& v, ClassicalDomain d);

/// Exact rational with the shortest decimal expansion that round-trips `v`.
mpq_class rationalFromDouble(double v);

// Arithmetic on classical scalars of the same kind (DomainMismatch otherwise).
Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
/// Exact quotient; DivisionByZero, or DomainMismatch in Z when inexact.
Scalar operator/(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a);

/// Fixed-point rendering with `floatpos` digits after the point, rounding
/// half away from zero on the exact value.
std::string formatFixed(const mpq_class& v, int floatpos);
std::string formatFixed(double v, int floatpos);

}  // namespace mathpar
