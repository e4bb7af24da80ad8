#include "mathpar/algebra.hpp"

#include <array>
#include <cmath>
#include <set>

namespace mathpar {

namespace {

using Kind = TropicalScalar::Kind;

std::string_view carrierName(CarrierSet c) {
  switch (c) {
    case CarrierSet::Z: return "Z";
    case CarrierSet::R: return "R";
    case CarrierSet::R64: return "R64";
  }
  return "?";
}

std::string_view addName(TropicalAddOp op) { return op == TropicalAddOp::Max ? "Max" : "Min"; }

std::string_view mulName(TropicalMulOp op) {
  switch (op) {
    case TropicalMulOp::Plus: return "Plus";
    case TropicalMulOp::Mult: return "Mult";
    case TropicalMulOp::Max: return "Max";
    case TropicalMulOp::Min: return "Min";
  }
  return "?";
}

const TropicalScalar& extremum(const TropicalScalar& a, const TropicalScalar& b, bool wantMax) {
  int c = compareExtended(a, b);
  return (wantMax ? c >= 0 : c <= 0) ? a : b;
}

TropicalScalar roundForCarrier(CarrierSet carrier, TropicalScalar v) {
  if (carrier == CarrierSet::R64 && v.isFinite()) v.value = mpq_class(v.value.get_d());
  return v;
}

mpz_class floorDiv(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceilDiv(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

// --- signatures --------------------------------------------------------------

std::string TropicalSignature::name() const {
  return std::string(carrierName(carrier)) + std::string(addName(add)) + std::string(mulName(mul));
}

TropicalSignature makeSignature(CarrierSet carrier, TropicalAddOp add, TropicalMulOp mul) {
  TropicalSignature s;
  s.carrier = carrier;
  s.add = add;
  s.mul = mul;
  const bool isMax = add == TropicalAddOp::Max;
  if ((isMax && mul == TropicalMulOp::Max) || (!isMax && mul == TropicalMulOp::Min))
    fail(ErrorCode::InvalidSignature, "'" + s.name() + "' uses the same lattice operation for plus and times");
  s.zero = isMax ? TropicalScalar::minusInfinity() : TropicalScalar::plusInfinity();
  switch (mul) {
    case TropicalMulOp::Plus: s.unit = TropicalScalar::finite(0); break;
    case TropicalMulOp::Mult: s.unit = TropicalScalar::finite(1); break;
    case TropicalMulOp::Max: s.unit = TropicalScalar::minusInfinity(); break;
    case TropicalMulOp::Min: s.unit = TropicalScalar::plusInfinity(); break;
  }
  return s;
}

std::vector<TropicalSignature> tropicalCatalog() {
  std::vector<TropicalSignature> out;
  for (auto c : {CarrierSet::Z, CarrierSet::R, CarrierSet::R64})
    for (auto a : {TropicalAddOp::Max, TropicalAddOp::Min})
      for (auto m : {TropicalMulOp::Plus, TropicalMulOp::Mult, TropicalMulOp::Max, TropicalMulOp::Min}) {
        if ((a == TropicalAddOp::Max && m == TropicalMulOp::Max) ||
            (a == TropicalAddOp::Min && m == TropicalMulOp::Min))
          continue;
        out.push_back(makeSignature(c, a, m));
      }
  return out;
}

ClassicalDomain AlgebraTag::classical() const {
  if (isTropical()) fail(ErrorCode::WrongSpace, "operation requires a classical space, not " + name());
  return std::get<ClassicalDomain>(rep_);
}

const TropicalSignature& AlgebraTag::tropical() const {
  if (!isTropical()) fail(ErrorCode::WrongSpace, "operation requires a tropical space, not " + name());
  return std::get<TropicalSignature>(rep_);
}

std::string AlgebraTag::name() const {
  if (isTropical()) return std::get<TropicalSignature>(rep_).name();
  return std::string(domainName(std::get<ClassicalDomain>(rep_)));
}

AlgebraTag resolveAlgebra(std::string_view name) {
  for (auto d : {ClassicalDomain::Z, ClassicalDomain::Q, ClassicalDomain::R, ClassicalDomain::R64,
                 ClassicalDomain::C64})
    if (name == domainName(d)) return d;

  std::string_view rest = name;
  CarrierSet carrier;
  if (rest.starts_with("R64")) {
    carrier = CarrierSet::R64;
    rest.remove_prefix(3);
  } else if (rest.starts_with("Z")) {
    carrier = CarrierSet::Z;
    rest.remove_prefix(1);
  } else if (rest.starts_with("R")) {
    carrier = CarrierSet::R;
    rest.remove_prefix(1);
  } else {
    fail(ErrorCode::UnknownAlgebra, "unknown algebra '" + std::string(name) + "'");
  }
  TropicalAddOp add;
  if (rest.starts_with("Max")) {
    add = TropicalAddOp::Max;
  } else if (rest.starts_with("Min")) {
    add = TropicalAddOp::Min;
  } else {
    fail(ErrorCode::UnknownAlgebra, "unknown algebra '" + std::string(name) + "'");
  }
  rest.remove_prefix(3);
  for (auto m : {TropicalMulOp::Plus, TropicalMulOp::Mult, TropicalMulOp::Max, TropicalMulOp::Min})
    if (rest == mulName(m)) return makeSignature(carrier, add, m);
  fail(ErrorCode::UnknownAlgebra, "unknown algebra '" + std::string(name) + "'");
}

SpaceContext SpaceContext::make(AlgebraTag algebra, std::vector<std::string> variables, int floatpos) {
  std::set<std::string> seen;
  for (const auto& v : variables)
    if (!seen.insert(v).second) fail(ErrorCode::DuplicateVariable, "variable '" + v + "' is declared twice");
  return SpaceContext{std::move(algebra), std::move(variables), floatpos};
}

std::string SpaceContext::name() const {
  std::string out = algebra.name() + "[";
  for (std::size_t i = 0; i < variables.size(); ++i) out += (i ? ", " : "") + variables[i];
  return out + "]";
}

int SpaceContext::variableIndex(std::string_view n) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == n) return static_cast<int>(i);
  return -1;
}

// --- tropical operations -----------------------------------------------------

TropicalScalar tropAdd(const TropicalSignature& s, const TropicalScalar& a, const TropicalScalar& b) {
  return extremum(a, b, s.add == TropicalAddOp::Max);
}

TropicalScalar tropMul(const TropicalSignature& s, const TropicalScalar& a, const TropicalScalar& b) {
  switch (s.mul) {
    case TropicalMulOp::Max: return extremum(a, b, true);
    case TropicalMulOp::Min: return extremum(a, b, false);
    case TropicalMulOp::Plus:
      if (a.isFinite() && b.isFinite()) return roundForCarrier(s.carrier, TropicalScalar::finite(a.value + b.value));
      if (!a.isFinite() && !b.isFinite() && a.kind != b.kind)
        fail(ErrorCode::UndefinedProduct, "(-\\infty) times \\infty is undefined in " + s.name());
      return a.isFinite() ? b : a;
    case TropicalMulOp::Mult:
      if (a == s.zero || b == s.zero) return s.zero;
      if (a.isFinite() && b.isFinite()) return roundForCarrier(s.carrier, TropicalScalar::finite(a.value * b.value));
      {
        const TropicalScalar& fin = a.isFinite() ? a : b;
        const TropicalScalar& inf = a.isFinite() ? b : a;
        if (fin.isFinite() && fin.value == 0)
          fail(ErrorCode::UndefinedProduct, "0 times an infinity is undefined in " + s.name());
        return inf;
      }
  }
  return s.zero;
}

bool tropLeq(const TropicalSignature& s, const TropicalScalar& a, const TropicalScalar& b) {
  return tropAdd(s, a, b) == b;
}

TropicalScalar tropMeet(const TropicalSignature& s, const TropicalScalar& a, const TropicalScalar& b) {
  return extremum(a, b, s.add != TropicalAddOp::Max);
}

TropicalScalar tropTop(const TropicalSignature& s) {
  if (s.add == TropicalAddOp::Max) return TropicalScalar::plusInfinity();
  if (s.mul == TropicalMulOp::Mult) return TropicalScalar::finite(0);
  return TropicalScalar::minusInfinity();
}

TropicalScalar tropResidual(const TropicalSignature& s, const TropicalScalar& a, const TropicalScalar& b) {
  if (!s.isSemifield())
    fail(ErrorCode::NonInvertibleSignature, s.name() + " has no multiplicative inverses");
  const TropicalScalar top = tropTop(s);
  if (a == s.zero) return top;
  if (s.mul == TropicalMulOp::Plus) {
    if (!a.isFinite()) return b == top ? top : s.zero;
    if (!b.isFinite()) return b;
    return roundForCarrier(s.carrier, TropicalScalar::finite(b.value - a.value));
  }
  // Mult: finite values are nonnegative.
  const bool isMax = s.add == TropicalAddOp::Max;
  if (!a.isFinite()) return b == top ? top : s.zero;  // a is +inf in MaxMult
  if (a.value == 0) {
    if (isMax) return b == s.zero ? s.zero : top;
    return (b.isFinite() && b.value == 0) ? top : s.zero;
  }
  if (!b.isFinite()) return b;
  mpq_class q = b.value / a.value;
  if (s.carrier == CarrierSet::Z) return TropicalScalar::finite(mpq_class(isMax ? floorDiv(q) : ceilDiv(q)));
  return roundForCarrier(s.carrier, TropicalScalar::finite(q));
}

TropicalScalar tropNormalize(const TropicalSignature& s, TropicalScalar v) {
  if (!v.isFinite()) {
    if (s.mul == TropicalMulOp::Mult) {
      const bool allowed = s.add == TropicalAddOp::Max || v.kind == Kind::PlusInfinity;
      if (!allowed) fail(ErrorCode::DomainMismatch, "-\\infty is not an element of " + s.name());
    }
    return v;
  }
  if (s.carrier == CarrierSet::Z && v.value.get_den() != 1)
    fail(ErrorCode::DomainMismatch, "'" + v.value.get_str() + "' is not an integer (" + s.name() + ")");
  if (s.mul == TropicalMulOp::Mult && sgn(v.value) < 0)
    fail(ErrorCode::DomainMismatch, "negative values are outside the carrier of " + s.name());
  return roundForCarrier(s.carrier, std::move(v));
}

// --- dispatch ----------------------------------------------------------------

namespace {

TropicalScalar toTropical(const TropicalSignature& s, const Scalar& v) {
  if (v.kind() == Scalar::Kind::Tropical) return tropNormalize(s, v.asTropical());
  if (v.kind() == Scalar::Kind::Float) return tropNormalize(s, TropicalScalar::finite(mpq_class(v.toDouble())));
  return tropNormalize(s, TropicalScalar::finite(v.toRational()));
}

}  // namespace

Scalar scalarArith(const AlgebraTag& domain, ArithOp op, const Scalar& a, const Scalar& b) {
  if (!domain.isTropical()) {
    const ClassicalDomain d = domain.classical();
    Scalar x = coerce(a, d);
    Scalar y = coerce(b, d);
    switch (op) {
      case ArithOp::Add: return x + y;
      case ArithOp::Sub: return x - y;
      case ArithOp::Mul: return x * y;
      case ArithOp::Div: return x / y;
    }
  }
  const TropicalSignature& s = domain.tropical();
  TropicalScalar x = toTropical(s, a);
  TropicalScalar y = toTropical(s, b);
  switch (op) {
    case ArithOp::Add: return Scalar::tropical(tropAdd(s, x, y));
    case ArithOp::Mul: return Scalar::tropical(tropMul(s, x, y));
    case ArithOp::Sub: fail(ErrorCode::DomainMismatch, "subtraction is not defined in " + s.name());
    case ArithOp::Div: {
      if (!s.isSemifield()) fail(ErrorCode::NonInvertibleSignature, s.name() + " has no multiplicative inverses");
      if (!x.isFinite() || !y.isFinite() || y == s.zero)
        fail(ErrorCode::DomainMismatch, "tropical division needs finite, non-zero operands");
      if (s.mul == TropicalMulOp::Plus) return Scalar::tropical(tropNormalize(s, TropicalScalar::finite(x.value - y.value)));
      if (y.value == 0) fail(ErrorCode::DivisionByZero, "division by zero");
      return Scalar::tropical(tropNormalize(s, TropicalScalar::finite(x.value / y.value)));
    }
  }
  return a;
}

// --- formatting --------------------------------------------------------------

namespace {

bool roundsToZero(double v, int floatpos) {
  std::string s = formatFixed(v, floatpos);
  return s.find_first_not_of("0.-") == std::string::npos;
}

bool isIntegral(double v) { return std::isfinite(v) && std::fabs(v) < 1e15 && v == std::floor(v); }

std::string compactDouble(double v, int floatpos) {
  if (isIntegral(v)) return formatFixed(v, 0);
  return formatFixed(v, floatpos);
}

std::string formatComplex(std::complex<double> z, int floatpos, bool latex, bool compact) {
  auto num = [&](double v) { return compact ? compactDouble(v, floatpos) : formatFixed(v, floatpos); };
  const std::string unit = latex ? "\\mathbf{i}" : "\\i";
  const bool imZero = roundsToZero(z.imag(), floatpos);
  const bool reZero = roundsToZero(z.real(), floatpos);
  if (imZero) return num(reZero ? 0.0 : z.real());
  if (reZero) return num(z.imag()) + unit;
  return "(" + num(z.real()) + (z.imag() < 0 ? "-" : "+") + num(std::fabs(z.imag())) + unit + ")";
}

std::string formatTropical(const TropicalScalar& t, int floatpos) {
  if (t.kind == Kind::PlusInfinity) return "\\infty";
  if (t.kind == Kind::MinusInfinity) return "-\\infty";
  if (t.value.get_den() == 1) return t.value.get_num().get_str();
  return formatFixed(t.value, floatpos);
}

std::string formatRational(const mpq_class& q, bool latex) {
  if (q.get_den() == 1) return q.get_num().get_str();
  if (!latex) return q.get_str();
  mpz_class num = q.get_num();
  std::string sign = num < 0 ? "-" : "";
  return sign + "\\frac{" + mpz_class(abs(num)).get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string format(const Scalar& v, int floatpos, bool latex, bool compact) {
  switch (v.kind()) {
    case Scalar::Kind::Integer: return std::get<mpz_class>(v.rep()).get_str();
    case Scalar::Kind::Rational: return formatRational(std::get<mpq_class>(v.rep()), latex);
    case Scalar::Kind::Real: {
      const mpq_class& q = std::get<ExactReal>(v.rep()).value;
      if (compact && q.get_den() == 1) return q.get_num().get_str();
      return formatFixed(q, floatpos);
    }
    case Scalar::Kind::Float: {
      double d = std::get<double>(v.rep());
      return compact ? compactDouble(d, floatpos) : formatFixed(d, floatpos);
    }
    case Scalar::Kind::Complex:
      return formatComplex(std::get<std::complex<double>>(v.rep()), floatpos, latex, compact);
    case Scalar::Kind::Tropical: return formatTropical(v.asTropical(), floatpos);
  }
  return "?";
}

}  // namespace

std::string formatScalar(const Scalar& v, int floatpos) { return format(v, floatpos, false, false); }
std::string formatScalarLatex(const Scalar& v, int floatpos) { return format(v, floatpos, true, false); }
std::string formatCoefficient(const Scalar& v, int floatpos) { return format(v, floatpos, false, true); }
std::string formatCoefficientLatex(const Scalar& v, int floatpos) { return format(v, floatpos, true, true); }

}  // namespace mathpar
