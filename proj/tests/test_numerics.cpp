#include <catch_amalgamated.hpp>

#include <cstdio>
#include <random>

#include "mathpar/algebra.hpp"

using namespace mathpar;

namespace {

/// Rounds the exact binary expansion of `v` half away from zero, using
/// printf's exact digits and string arithmetic.
std::string decimalOracle(double v, int digits) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.80f", v);
  std::string s = buf;
  bool negative = s[0] == '-';
  if (negative) s.erase(0, 1);
  const auto dot = s.find('.');
  std::string intPart = s.substr(0, dot), frac = s.substr(dot + 1);
  std::string kept = intPart + frac.substr(0, digits);
  if (frac[digits] >= '5') {
    int k = static_cast<int>(kept.size()) - 1;
    while (k >= 0 && kept[k] == '9') kept[k--] = '0';
    if (k < 0) kept.insert(kept.begin(), '1');
    else ++kept[k];
  }
  std::string out = kept.substr(0, kept.size() - digits);
  if (digits > 0) out += "." + kept.substr(kept.size() - digits);
  bool zero = out.find_first_not_of("0.") == std::string::npos;
  return (negative && !zero ? "-" : "") + out;
}

}  // namespace

TEST_CASE("fixed formatting matches a decimal oracle") {
  CHECK(formatFixed(0.52069, 2) == "0.52");
  CHECK(formatFixed(0.5207, 4) == "0.5207");
  CHECK(formatFixed(46.0, 2) == "46.00");
  CHECK(formatFixed(mpq_class(1, 8), 2) == "0.13");
  CHECK(formatFixed(mpq_class(-1, 8), 2) == "-0.13");
  CHECK(formatFixed(mpq_class(5, 2), 0) == "3");
  CHECK(formatFixed(-0.001, 2) == "0.00");
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1000.0, 1000.0);
  for (int k = 0; k < 2000; ++k) {
    const double v = dist(rng);
    const int digits = static_cast<int>(rng() % 7);
    INFO(v << " digits " << digits);
    CHECK(formatFixed(v, digits) == decimalOracle(v, digits));
  }
}

TEST_CASE("classical scalars") {
  CHECK(Scalar::fromDecimal(ClassicalDomain::Q, "3.5") == Scalar::rational(mpq_class(7, 2)));
  CHECK_THROWS_AS(Scalar::fromDecimal(ClassicalDomain::Z, "3.5"), MathparError);
  const Scalar seven = Scalar::fromInteger(ClassicalDomain::Z, 7);
  const Scalar two = Scalar::fromInteger(ClassicalDomain::Z, 2);
  CHECK(seven + two == Scalar::fromInteger(ClassicalDomain::Z, 9));
  try {
    (void)(seven / two);
    FAIL("inexact division in Z");
  } catch (const MathparError& e) {
    CHECK(e.code() == ErrorCode::DomainMismatch);
  }
  try {
    (void)(seven / Scalar::zero(ClassicalDomain::Z));
    FAIL("division by zero");
  } catch (const MathparError& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  CHECK_THROWS_AS(coerce(Scalar::rational(mpq_class(1, 2)), ClassicalDomain::Z), MathparError);
  CHECK(coerce(Scalar::rational(mpq_class(1, 2)), ClassicalDomain::R64) == Scalar::floating(0.5));
  CHECK(formatScalar(Scalar::rational(mpq_class(8, 7)), 2) == "8/7");
  CHECK(formatScalar(Scalar::complex({0.77, -1.12}), 2) == "(0.77-1.12\\i)");
  CHECK(formatScalar(Scalar::real(mpq_class(46)), 2) == "46.00");
  CHECK(rationalFromDouble(0.1) == mpq_class(1, 10));
}

TEST_CASE("algebra names resolve") {
  CHECK(resolveAlgebra("C64").classical() == ClassicalDomain::C64);
  const auto t = resolveAlgebra("R64MinMax").tropical();
  CHECK(t.carrier == CarrierSet::R64);
  CHECK(t.add == TropicalAddOp::Min);
  CHECK(t.mul == TropicalMulOp::Max);
  CHECK(resolveAlgebra("ZMaxMult").name() == "ZMaxMult");
  CHECK(resolveAlgebra("RMinMult").name() == "RMinMult");
  try {
    resolveAlgebra("ZMaxMax");
    FAIL("invalid signature");
  } catch (const MathparError& e) {
    CHECK(e.code() == ErrorCode::InvalidSignature);
  }
  try {
    resolveAlgebra("N");
    FAIL("unknown algebra");
  } catch (const MathparError& e) {
    CHECK(e.code() == ErrorCode::UnknownAlgebra);
  }
  CHECK(tropicalCatalog().size() == 18);
  CHECK_THROWS_AS(SpaceContext::make(ClassicalDomain::Q, {"x", "x"}), MathparError);
  CHECK(SpaceContext::defaults().name() == "R64[x, y, z, t]");
}

TEST_CASE("tropical scalar arithmetic") {
  auto n = [](long v) { return Scalar::tropical(TropicalScalar::finite(v)); };
  const AlgebraTag maxMult = resolveAlgebra("ZMaxMult");
  CHECK(scalarArith(maxMult, ArithOp::Add, n(2), n(9)) == n(9));
  CHECK(scalarArith(maxMult, ArithOp::Mul, n(2), n(9)) == n(18));
  const AlgebraTag minPlus = resolveAlgebra("ZMinPlus");
  CHECK(scalarArith(minPlus, ArithOp::Add, n(2), n(9)) == n(2));
  CHECK(scalarArith(minPlus, ArithOp::Mul, n(2), n(9)) == n(11));
  CHECK(scalarArith(minPlus, ArithOp::Div, n(2), n(9)) == n(-7));
  const auto s = minPlus.tropical();
  CHECK(s.zero == TropicalScalar::plusInfinity());
  CHECK(s.unit == TropicalScalar::finite(0));
  CHECK(tropMul(s, s.zero, TropicalScalar::finite(5)) == s.zero);
  CHECK(tropLeq(s, TropicalScalar::finite(7), TropicalScalar::finite(3)));
  CHECK_THROWS_AS(scalarArith(minPlus, ArithOp::Sub, n(2), n(9)), MathparError);
  const auto maxPlus = resolveAlgebra("ZMaxPlus").tropical();
  CHECK(tropResidual(maxPlus, TropicalScalar::finite(3), TropicalScalar::finite(10)) == TropicalScalar::finite(7));
  CHECK_THROWS_AS(tropResidual(resolveAlgebra("ZMaxMin").tropical(), TropicalScalar::finite(3),
                               TropicalScalar::finite(1)),
                  MathparError);
  CHECK_THROWS_AS(tropNormalize(resolveAlgebra("ZMaxMult").tropical(), TropicalScalar::finite(-1)), MathparError);
  CHECK(formatScalar(Scalar::tropical(TropicalScalar::minusInfinity()), 2) == "-\\infty");
}
