#include "mathpar/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <system_error>

namespace mathpar {

std::string_view domainName(ClassicalDomain d) noexcept {
  switch (d) {
    case ClassicalDomain::Z: return "Z";
    case ClassicalDomain::Q: return "Q";
    case ClassicalDomain::R: return "R";
    case ClassicalDomain::R64: return "R64";
    case ClassicalDomain::C64: return "C64";
  }
  return "?";
}

bool isExactDomain(ClassicalDomain d) noexcept {
  return d == ClassicalDomain::Z || d == ClassicalDomain::Q || d == ClassicalDomain::R;
}

Scalar::Kind kindOf(ClassicalDomain d) noexcept {
  switch (d) {
    case ClassicalDomain::Z: return Scalar::Kind::Integer;
    case ClassicalDomain::Q: return Scalar::Kind::Rational;
    case ClassicalDomain::R: return Scalar::Kind::Real;
    case ClassicalDomain::R64: return Scalar::Kind::Float;
    case ClassicalDomain::C64: return Scalar::Kind::Complex;
  }
  return Scalar::Kind::Float;
}

int compareExtended(const TropicalScalar& a, const TropicalScalar& b) {
  auto rank = [](TropicalScalar::Kind k) {
    return k == TropicalScalar::Kind::MinusInfinity ? 0 : k == TropicalScalar::Kind::Finite ? 1 : 2;
  };
  if (a.kind != b.kind) return rank(a.kind) < rank(b.kind) ? -1 : 1;
  if (!a.isFinite()) return 0;
  return cmp(a.value, b.value) < 0 ? -1 : (a.value == b.value ? 0 : 1);
}

Scalar::Scalar(Rep rep) : rep_(std::move(rep)) {
  if (auto* q = std::get_if<mpq_class>(&rep_)) q->canonicalize();
  if (auto* r = std::get_if<ExactReal>(&rep_)) r->value.canonicalize();
}

Scalar Scalar::rational(mpq_class v) {
  v.canonicalize();
  return Scalar(Rep(std::move(v)));
}

Scalar Scalar::real(mpq_class v) {
  v.canonicalize();
  return Scalar(Rep(ExactReal{std::move(v)}));
}

Scalar Scalar::fromInteger(ClassicalDomain d, long n) {
  switch (d) {
    case ClassicalDomain::Z: return integer(mpz_class(n));
    case ClassicalDomain::Q: return rational(mpq_class(n));
    case ClassicalDomain::R: return real(mpq_class(n));
    case ClassicalDomain::R64: return floating(static_cast<double>(n));
    case ClassicalDomain::C64: return complex({static_cast<double>(n), 0.0});
  }
  return {};
}

namespace {

// Parses digits[.digits][e[+-]digits] exactly.
mpq_class parseDecimalExact(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  long scale = 0;
  std::size_t i = 0;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) digits += text[i];
  if (i < text.size() && text[i] == '.') {
    ++i;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      digits += text[i];
      ++scale;
    }
  }
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    auto res = std::from_chars(text.data() + i + (text[i] == '+' ? 1 : 0), text.data() + text.size(), exponent);
    if (res.ec != std::errc()) fail(ErrorCode::DomainMismatch, "malformed number '" + std::string(text) + "'");
    i = text.size();
  }
  if (digits.empty() || i != text.size())
    fail(ErrorCode::DomainMismatch, "malformed number '" + std::string(text) + "'");
  mpz_class num(digits, 10);
  long shift = exponent - scale;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class q = shift >= 0 ? mpq_class(num * pow10) : mpq_class(num, pow10);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace

Scalar Scalar::fromDecimal(ClassicalDomain d, std::string_view text) {
  mpq_class exact = parseDecimalExact(text);
  switch (d) {
    case ClassicalDomain::Z:
      if (exact.get_den() != 1)
        fail(ErrorCode::DomainMismatch, "'" + std::string(text) + "' is not an integer (SPACE is over Z)");
      return integer(exact.get_num());
    case ClassicalDomain::Q: return rational(exact);
    case ClassicalDomain::R: return real(exact);
    case ClassicalDomain::R64: return floating(std::strtod(std::string(text).c_str(), nullptr));
    case ClassicalDomain::C64: return complex({std::strtod(std::string(text).c_str(), nullptr), 0.0});
  }
  return {};
}

bool Scalar::isExact() const noexcept {
  auto k = kind();
  return k == Kind::Integer || k == Kind::Rational || k == Kind::Real;
}

bool Scalar::isZero() const {
  switch (kind()) {
    case Kind::Integer: return std::get<mpz_class>(rep_) == 0;
    case Kind::Rational: return std::get<mpq_class>(rep_) == 0;
    case Kind::Real: return std::get<ExactReal>(rep_).value == 0;
    case Kind::Float: return std::get<double>(rep_) == 0.0;
    case Kind::Complex: return std::get<std::complex<double>>(rep_) == std::complex<double>(0.0, 0.0);
    case Kind::Tropical: {
      const auto& t = std::get<TropicalScalar>(rep_);
      return t.isFinite() && t.value == 0;
    }
  }
  return false;
}

bool Scalar::isOne() const {
  switch (kind()) {
    case Kind::Integer: return std::get<mpz_class>(rep_) == 1;
    case Kind::Rational: return std::get<mpq_class>(rep_) == 1;
    case Kind::Real: return std::get<ExactReal>(rep_).value == 1;
    case Kind::Float: return std::get<double>(rep_) == 1.0;
    case Kind::Complex: return std::get<std::complex<double>>(rep_) == std::complex<double>(1.0, 0.0);
    case Kind::Tropical: {
      const auto& t = std::get<TropicalScalar>(rep_);
      return t.isFinite() && t.value == 1;
    }
  }
  return false;
}

mpq_class Scalar::toRational() const {
  switch (kind()) {
    case Kind::Integer: return mpq_class(std::get<mpz_class>(rep_));
    case Kind::Rational: return std::get<mpq_class>(rep_);
    case Kind::Real: return std::get<ExactReal>(rep_).value;
    case Kind::Float: return rationalFromDouble(std::get<double>(rep_));
    case Kind::Complex: {
      auto z = std::get<std::complex<double>>(rep_);
      if (z.imag() != 0.0) fail(ErrorCode::DomainMismatch, "complex value has no rational representation");
      return rationalFromDouble(z.real());
    }
    case Kind::Tropical: {
      const auto& t = std::get<TropicalScalar>(rep_);
      if (!t.isFinite()) fail(ErrorCode::DomainMismatch, "infinite tropical value has no rational representation");
      return t.value;
    }
  }
  return 0;
}

std::complex<double> Scalar::toComplex() const {
  switch (kind()) {
    case Kind::Integer: return {std::get<mpz_class>(rep_).get_d(), 0.0};
    case Kind::Rational: return {std::get<mpq_class>(rep_).get_d(), 0.0};
    case Kind::Real: return {std::get<ExactReal>(rep_).value.get_d(), 0.0};
    case Kind::Float: return {std::get<double>(rep_), 0.0};
    case Kind::Complex: return std::get<std::complex<double>>(rep_);
    case Kind::Tropical: {
      const auto& t = std::get<TropicalScalar>(rep_);
      if (t.isFinite()) return {t.value.get_d(), 0.0};
      return {t.kind == TropicalScalar::Kind::PlusInfinity ? HUGE_VAL : -HUGE_VAL, 0.0};
    }
  }
  return {};
}

double Scalar::toDouble() const {
  auto z = toComplex();
  if (z.imag() != 0.0) fail(ErrorCode::DomainMismatch, "complex value where a real number is required");
  return z.real();
}

int Scalar::sign() const {
  switch (kind()) {
    case Kind::Integer: return sgn(std::get<mpz_class>(rep_));
    case Kind::Rational: return sgn(std::get<mpq_class>(rep_));
    case Kind::Real: return sgn(std::get<ExactReal>(rep_).value);
    default: {
      double v = toDouble();
      return v > 0 ? 1 : (v < 0 ? -1 : 0);
    }
  }
}

const TropicalScalar& Scalar::asTropical() const {
  if (kind() != Kind::Tropical) fail(ErrorCode::DomainMismatch, "expected a tropical scalar");
  return std::get<TropicalScalar>(rep_);
}

mpq_class rationalFromDouble(double v) {
  if (!std::isfinite(v)) fail(ErrorCode::DomainMismatch, "non-finite value has no rational representation");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return parseDecimalExact(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
}

Scalar coerce(const Scalar& v, ClassicalDomain d) {
  if (v.kind() == kindOf(d)) return v;
  if (v.kind() == Scalar::Kind::Tropical) {
    const auto& t = v.asTropical();
    if (!t.isFinite()) fail(ErrorCode::DomainMismatch, "infinite tropical value cannot enter a classical space");
    return coerce(Scalar::rational(t.value), d);
  }
  switch (d) {
    case ClassicalDomain::Z: {
      mpq_class q = v.toRational();
      if (q.get_den() != 1) fail(ErrorCode::DomainMismatch, "value is not an integer");
      return Scalar::integer(q.get_num());
    }
    case ClassicalDomain::Q: return Scalar::rational(v.toRational());
    case ClassicalDomain::R: return Scalar::real(v.toRational());
    case ClassicalDomain::R64: return Scalar::floating(v.toDouble());
    case ClassicalDomain::C64: return Scalar::complex(v.toComplex());
  }
  return v;
}

namespace {

[[noreturn]] void kindMismatch() {
  fail(ErrorCode::DomainMismatch, "operands belong to different domains");
}

template <class Fn>
Scalar combine(const Scalar& a, const Scalar& b, Fn fn) {
  if (a.kind() != b.kind()) kindMismatch();
  return std::visit(
      [&](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.rep());
        if constexpr (std::is_same_v<T, TropicalScalar>) {
          fail(ErrorCode::DomainMismatch, "tropical scalars combine through their signature");
        } else if constexpr (std::is_same_v<T, ExactReal>) {
          return Scalar::real(fn(x.value, y.value));
        } else if constexpr (std::is_same_v<T, mpq_class>) {
          return Scalar::rational(fn(x, y));
        } else {
          return Scalar(Scalar::Rep(T(fn(x, y))));
        }
      },
      a.rep());
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { using T = std::decay_t<decltype(x)>; return T(x + y); });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { using T = std::decay_t<decltype(x)>; return T(x - y); });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { using T = std::decay_t<decltype(x)>; return T(x * y); });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.kind() != b.kind()) kindMismatch();
  if (b.isZero()) fail(ErrorCode::DivisionByZero, "division by zero");
  if (a.kind() == Scalar::Kind::Integer) {
    const auto& x = std::get<mpz_class>(a.rep());
    const auto& y = std::get<mpz_class>(b.rep());
    if (mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t()) == 0)
      fail(ErrorCode::DomainMismatch, "no exact quotient in Z");
    return Scalar::integer(mpz_class(x / y));
  }
  return combine(a, b, [](const auto& x, const auto& y) { using T = std::decay_t<decltype(x)>; return T(x / y); });
}

Scalar operator-(const Scalar& a) {
  switch (a.kind()) {
    case Scalar::Kind::Integer: return Scalar::integer(-std::get<mpz_class>(a.rep()));
    case Scalar::Kind::Rational: return Scalar::rational(-std::get<mpq_class>(a.rep()));
    case Scalar::Kind::Real: return Scalar::real(-std::get<ExactReal>(a.rep()).value);
    case Scalar::Kind::Float: return Scalar::floating(-std::get<double>(a.rep()));
    case Scalar::Kind::Complex: return Scalar::complex(-std::get<std::complex<double>>(a.rep()));
    case Scalar::Kind::Tropical: {
      TropicalScalar t = a.asTropical();
      if (t.isFinite()) {
        t.value = -t.value;
      } else {
        t.kind = t.kind == TropicalScalar::Kind::PlusInfinity ? TropicalScalar::Kind::MinusInfinity
                                                              : TropicalScalar::Kind::PlusInfinity;
      }
      return Scalar::tropical(t);
    }
  }
  return a;
}

std::string formatFixed(const mpq_class& v, int floatpos) {
  if (floatpos < 0) floatpos = 0;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(floatpos));
  mpq_class scaled = abs(v) * pow10 + mpq_class(1, 2);
  mpz_class rounded = scaled.get_num() / scaled.get_den();  // floor for positive values
  std::string digits = rounded.get_str();
  if (static_cast<int>(digits.size()) <= floatpos)
    digits.insert(0, static_cast<std::size_t>(floatpos) + 1 - digits.size(), '0');
  if (floatpos > 0) digits.insert(digits.size() - static_cast<std::size_t>(floatpos), ".");
  if (sgn(v) < 0 && rounded != 0) digits.insert(0, "-");
  return digits;
}

std::string formatFixed(double v, int floatpos) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "\\infty" : "-\\infty";
  return formatFixed(mpq_class(v), floatpos);
}

}  // namespace mathpar
