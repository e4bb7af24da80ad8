#include <catch_amalgamated.hpp>

#include <cmath>

#include "mathpar/engine.hpp"
#include "mathpar/expr.hpp"
#include "mathpar/factor.hpp"

using namespace mathpar;

namespace {

/// Evaluates `source` in a fresh environment and returns the single output.
std::string eval(const std::string& source) {
  Environment env;
  auto r = executeSection(env, source);
  INFO(source);
  REQUIRE_FALSE(r.hasErrors());
  REQUIRE(r.outputs.size() == 1);
  return r.outputs.front().mathpar;
}

Polynomial poly(const std::string& space, const std::string& text) {
  Environment env;
  auto r = executeSection(env, "SPACE = " + space + "; p = " + text + ";");
  INFO(text);
  REQUIRE_FALSE(r.hasErrors());
  const Value& v = env.bindings.at("p").value;
  if (v.is<Scalar>()) {
    const ClassicalDomain d = env.space.algebra.classical();
    return Polynomial::constant(makeRing(d, env.space.variables), coerce(v.as<Scalar>(), d));
  }
  return v.as<Polynomial>();
}

}  // namespace

TEST_CASE("monomial order puts the last variable first") {
  CHECK(compareMonomials({5, 0}, {0, 1}) < 0);
  CHECK(compareMonomials({2, 1}, {1, 1}) > 0);
  CHECK(eval("SPACE = Q[x, y]; x^5 + y") == "y+x^5");
  CHECK(eval("SPACE = Q[y, x]; x^5 + y") == "x^5+y");
}

TEST_CASE("polynomial arithmetic and printing") {
  CHECK(eval("SPACE = R64[x, y]; x + x") == "2x");
  CHECK(eval("SPACE = Q[x]; (2x^2 + 1)^3") == "8x^6+12x^4+6x^2+1");
  CHECK(eval("SPACE = Q[x]; (x - 1)(x + 1) - x^2") == "-1");
  CHECK(eval("SPACE = Q[x]; x/2 - 1/3") == "(1/2)x-1/3");
  CHECK(eval("SPACE = Z[x, y]; (x - y)^2") == "y^2-2xy+x^2");
  CHECK(eval("SPACE = Q[x]; (x^2 - 1)/(x - 1)") == "x+1");
  const Polynomial p = poly("Q[x, y]", "x^3y - 2y + 5");
  CHECK(p.derivative(0) == poly("Q[x, y]", "3x^2y"));
  CHECK(p.derivative(1) == poly("Q[x, y]", "x^3 - 2"));
  CHECK(p.totalDegree() == 4);
  CHECK(p.degreeIn(0) == 3);
  std::vector<Scalar> point = {Scalar::fromInteger(ClassicalDomain::Q, 2), Scalar::fromInteger(ClassicalDomain::Q, 3)};
  CHECK(p.evaluate(point) == Scalar::fromInteger(ClassicalDomain::Q, 23));
  CHECK(p.toLatex(2) == "x^{3}y-2y+5");
}

TEST_CASE("exact division") {
  const Polynomial a = poly("Z[x, y]", "x^2 - y^2");
  CHECK(divideExact(a, poly("Z[x, y]", "x - y")) == std::optional<Polynomial>(poly("Z[x, y]", "x + y")));
  CHECK_FALSE(divideExact(a, poly("Z[x, y]", "x - 2y")).has_value());
  const Polynomial linear = poly("Z[x]", "x + 1");
  CHECK_FALSE(divideExact(linear, Polynomial::constant(linear.ring(), Scalar::fromInteger(ClassicalDomain::Z, 2))));
}

TEST_CASE("integration and differentiation") {
  CHECK(eval("SPACE = Q[x]; \\int(x^2) d x") == "(1/3)x^3");
  CHECK(eval("SPACE = Z[x]; \\int(3x^2 + 1) d x") == "x^3+x");
  CHECK(eval("SPACE = Z[x]; \\int(x) d x") == "(1/2)x^2");
  CHECK(eval("SPACE = Q[x, y]; \\int(x y) d y") == "(1/2)xy^2");
  CHECK(eval("SPACE = Q[x]; \\D(x^5, x^3)") == "60x^2");
  CHECK(eval("SPACE = R64[x]; \\D(\\sin(x^2), x)") == "2x\\cos(x^2)");
  Environment env;
  auto r = executeSection(env, "SPACE = Q[x]; \\int(\\sin(x)) d x");
  REQUIRE(r.hasErrors());
  CHECK(r.diagnostics.front().code == ErrorCode::NonPolynomialIntegrand);
}

TEST_CASE("function values agree with the C library") {
  const double oracle = std::sin(1.0 + std::tan(9.0));
  Environment env;
  auto r = executeSection(env, "SPACE = R64[x, y]; FLOATPOS = 10; \\value(\\sin(x^2 + \\tg(y^3 + x)), [1, 2])");
  REQUIRE(r.outputs.size() == 1);
  CHECK(std::fabs(std::stod(r.outputs[0].mathpar) - oracle) < 1e-10);
  CHECK(eval("SPACE = R64[x]; FLOATPOS = 4; \\value(\\exp(x) + \\ln(x), [2])") ==
        formatFixed(std::exp(2.0) + std::log(2.0), 4));
  CHECK(eval("SPACE = Q[x]; \\sin(0)") == "0");
  CHECK(eval("SPACE = Q[x]; \\value(\\cos(x) + x, [0])") == "1");
  Environment env2;
  auto bad = executeSection(env2, "SPACE = R64[x]; \\ln(0)");
  REQUIRE(bad.hasErrors());
  CHECK(bad.diagnostics.front().code == ErrorCode::UndefinedValue);
}

TEST_CASE("partial substitution keeps the other variables") {
  CHECK(eval("SPACE = Q[x, y]; \\value(x^2 + y, [3])") == "y+9");
  CHECK(eval("SPACE = Q[x, y]; \\value(x y, [y + 1, 2])") == "2y+2");
  Environment env;
  auto r = executeSection(env, "SPACE = Q[x]; \\value(x, [1, 2])");
  REQUIRE(r.hasErrors());
  CHECK(r.diagnostics.front().code == ErrorCode::ArityError);
}

TEST_CASE("factoring reproduces the input when expanded") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"x^2 - 1", "(x-1)(x+1)"},
      {"x^5 - 2x^3 + x", "x(x-1)^2(x+1)^2"},
      {"(3/2)x^4 + (15/4)x^3 + (9/4)x^2 - (3/4)x - 3/4", "(3/4)(2x-1)(x+1)^3"},
  };
  for (const auto& [input, factored] : cases) {
    const Polynomial p = poly("Q[x]", input);
    Expr f = factorPolynomial(p);
    CHECK(f.toMathpar(2) == factored);
    Expr back = expand(f);
    REQUIRE(back.isPolynomial());
    CHECK(back.polynomial() == p);
  }
  CHECK(eval("SPACE = Q[x]; \\Factor(x^2 + 1)") == "x^2+1");
  CHECK(eval("SPACE = R64[x]; \\Factor(x^3 + x)") == "x(x^2+1)");
}

TEST_CASE("simplification of elementary functions") {
  CHECK(eval("SPACE = R[x, y]; \\Factor(\\sin(x)^2 + \\cos(x)^2)") == "1");
  CHECK(eval("SPACE = R[x]; \\Factor(2\\sin(x)^2 + 2\\cos(x)^2 + x)") == "x+2");
  CHECK(eval("SPACE = R64[x]; \\Factor(\\exp(\\ln(x)))") == "x");
  CHECK(eval("SPACE = R64[x]; \\Factor(\\ln(\\exp(x + 1)))") == "x+1");
  CHECK(eval("SPACE = R64[x]; \\Factor(\\ln(x) + \\ln(x + 1))") == "\\ln(x^2+x)");
  CHECK(eval("SPACE = R64[x]; \\Factor(\\sin(x) + x)") == "x+\\sin(x)");
}
