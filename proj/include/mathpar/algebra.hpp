#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mathpar/scalar.hpp"

namespace mathpar {

enum class CarrierSet { Z, R, R64 };
enum class TropicalAddOp { Max, Min };
enum class TropicalMulOp { Plus, Mult, Max, Min };

/// A tropical semiring: carrier, the operations standing for "plus" and
/// "times", and their identities.
struct TropicalSignature {
  CarrierSet carrier = CarrierSet::Z;
  TropicalAddOp add = TropicalAddOp::Max;
  TropicalMulOp mul = TropicalMulOp::Plus;
  TropicalScalar zero;  // neutral for add, absorbing for mul
  TropicalScalar unit;  // neutral for mul

  std::string name() const;
  /// ⊗ has inverses on finite non-zero elements (Plus, Mult).
  bool isSemifield() const noexcept { return mul == TropicalMulOp::Plus || mul == TropicalMulOp::Mult; }

  friend bool operator==(const TropicalSignature& a, const TropicalSignature& b) {
    return a.carrier == b.carrier && a.add == b.add && a.mul == b.mul;
  }
};

/// Builds a signature with the identities fixed by the algebra name.
/// Throws InvalidSignature for MaxMax / MinMin.
TropicalSignature makeSignature(CarrierSet carrier, TropicalAddOp add, TropicalMulOp mul);

/// All 18 valid tropical algebras.
std::vector<TropicalSignature> tropicalCatalog();

class AlgebraTag {
 public:
  AlgebraTag() = default;
  AlgebraTag(ClassicalDomain d) : rep_(d) {}
  AlgebraTag(TropicalSignature s) : rep_(std::move(s)) {}

  bool isTropical() const noexcept { return std::holds_alternative<TropicalSignature>(rep_); }
  ClassicalDomain classical() const;
  const TropicalSignature& tropical() const;
  std::string name() const;

  friend bool operator==(const AlgebraTag& a, const AlgebraTag& b) { return a.rep_ == b.rep_; }

 private:
  std::variant<ClassicalDomain, TropicalSignature> rep_ = ClassicalDomain::R64;
};

/// Maps a canonical algebra name (Z, Q, R, R64, C64, ZMaxPlus, R64MinMax, ...)
/// to its tag. Throws UnknownAlgebra or InvalidSignature.
AlgebraTag resolveAlgebra(std::string_view name);

/// The active Space: algebra, ordered variables (first listed is least
/// significant), and display precision.
struct SpaceContext {
  AlgebraTag algebra = ClassicalDomain::R64;
  std::vector<std::string> variables = {"x", "y", "z", "t"};
  int floatpos = 2;

  static SpaceContext defaults() { return {}; }
  /// Throws DuplicateVariable.
  static SpaceContext make(AlgebraTag algebra, std::vector<std::string> variables, int floatpos = 2);

  std::string name() const;  // e.g. "ZMaxMult[x, y]"
  int variableIndex(std::string_view name) const;  // -1 if absent

  /// Same algebra and variables (floatpos is display-only).
  bool sameRing(const SpaceContext& other) const {
    return algebra == other.algebra && variables == other.variables;
  }
};

// --- tropical scalar operations ------------------------------------------------

/// a ⊕ b.
TropicalScalar tropAdd(const TropicalSignature& s, const TropicalScalar& a, const TropicalScalar& b);
/// a ⊗ b. Throws UndefinedProduct for indeterminate combinations such as
/// (-inf) ⊗ (+inf) in a Plus algebra.
TropicalScalar tropMul(const TropicalSignature& s, const TropicalScalar& a, const TropicalScalar& b);
/// a ⪯ b in the order induced by ⊕ (a ⊕ b = b).
bool tropLeq(const TropicalSignature& s, const TropicalScalar& a, const TropicalScalar& b);
/// Greatest lower bound in the ⊕-order (min when ⊕ = max and vice versa).
TropicalScalar tropMeet(const TropicalSignature& s, const TropicalScalar& a, const TropicalScalar& b);
/// Greatest element of the ⊕-order.
TropicalScalar tropTop(const TropicalSignature& s);
/// Greatest x with a ⊗ x ⪯ b. Throws NonInvertibleSignature for lattice ⊗.
TropicalScalar tropResidual(const TropicalSignature& s, const TropicalScalar& a, const TropicalScalar& b);
/// Validates (and for R64 rounds) a value for the carrier; throws
/// DomainMismatch when it does not belong.
TropicalScalar tropNormalize(const TropicalSignature& s, TropicalScalar v);

// --- dispatch and formatting ---------------------------------------------------

enum class ArithOp { Add, Sub, Mul, Div };

/// Arithmetic in the given algebra: exact in Z/Q/R, double in R64/C64,
/// ⊕/⊗ in tropical algebras (Sub is undefined there, Div is the ⊗-inverse).
Scalar scalarArith(const AlgebraTag& domain, ArithOp op, const Scalar& a, const Scalar& b);

/// Display form of a scalar: floats and reals with exactly `floatpos`
/// decimals, complex as `(re+im\i)`, rationals as `p/q`, infinities as
/// `\infty` / `-\infty`.
std::string formatScalar(const Scalar& v, int floatpos);
/// LaTeX variant (`\frac{p}{q}`, `\mathbf{i}`).
std::string formatScalarLatex(const Scalar& v, int floatpos);

/// Compact form used for polynomial coefficients: integral values print
/// without a decimal point.
std::string formatCoefficient(const Scalar& v, int floatpos);
std::string formatCoefficientLatex(const Scalar& v, int floatpos);

}  // namespace mathpar
