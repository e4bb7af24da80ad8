#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "golden.hpp"
#include "mathpar/engine.hpp"
#include "mathpar/groebner.hpp"
#include "mathpar/nae.hpp"
#include "mathpar/roots.hpp"

using namespace mathpar;
using Complex = std::complex<double>;

namespace {

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

/// Polynomial with the given roots and leading coefficient 1, ascending.
std::vector<Complex> fromRoots(const std::vector<Complex>& roots) {
  std::vector<Complex> c = {1.0};
  for (const auto& r : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = next;
  }
  return c;
}

}  // namespace

TEST_CASE("Durand-Kerner recovers planted roots") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int degree = 1 + static_cast<int>(rng() % 7);
    std::vector<Complex> roots;
    for (int k = 0; k < degree; ++k) roots.emplace_back(dist(rng), dist(rng));
    auto found = durandKerner(fromRoots(roots));
    CHECK(golden::matchMultiset(found, roots, [](Complex a, Complex b) { return std::abs(a - b) < 1e-7; }));
  }
}

TEST_CASE("rational roots are exact and repeated by multiplicity") {
  RootList r = solveUnivariate(poly("Q[x]", "(2x - 1)^2(x + 3)"));
  REQUIRE(r.roots.size() == 2);
  CHECK(r.totalMultiplicity() == 3);
  CHECK(r.roots[0].exact == std::optional<mpq_class>(mpq_class(1, 2)));
  CHECK(r.roots[0].multiplicity == 2);
  CHECK(r.toMathpar(2) == "[0.50,0.50,-3.00]");
  CHECK(solveUnivariate(poly("Q[x]", "5")).roots.empty());
  try {
    solveUnivariate(poly("Q[x, y]", "x y - 1"));
    FAIL("two variables");
  } catch (const MathparError& e) {
    CHECK(e.code() == ErrorCode::NotUnivariate);
  }
}

TEST_CASE("root list formats complex roots") {
  RootList r = solveUnivariate(poly("C64[x]", "x^2 + 4"));
  CHECK(r.toMathpar(2) == "[(0.00+2.00\\i),(0.00-2.00\\i)]");
  CHECK(r.toLatex(2) == "[(0.00+2.00\\mathbf{i}),(0.00-2.00\\mathbf{i})]");
}

TEST_CASE("inequality solutions agree with midpoint sampling") {
  std::mt19937_64 rng(5);
  const RelOp ops[] = {RelOp::Le, RelOp::Ge, RelOp::Lt, RelOp::Gt};
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<long> roots;
    const int count = static_cast<int>(rng() % 5);
    std::string text = rng() % 2 ? "-1" : "1";
    for (int k = 0; k < count; ++k) {
      roots.push_back(static_cast<long>(rng() % 11) - 5);
      text += "(x - (" + std::to_string(roots.back()) + "))";
    }
    const Polynomial p = poly("Q[x]", text);
    const RelOp op = ops[rng() % 4];
    IntervalSet set = solveInequality(p, op);
    std::vector<double> samples;
    std::sort(roots.begin(), roots.end());
    for (long r : roots) samples.push_back(static_cast<double>(r));
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) samples.push_back((roots[k] + roots[k + 1]) / 2.0);
    samples.push_back((roots.empty() ? 0.0 : roots.front()) - 1.5);
    samples.push_back((roots.empty() ? 0.0 : roots.back()) + 1.5);
    for (double x : samples) {
      const std::vector<Complex> point = {x};
      const double v = p.evaluateComplex(point).real();
      bool holds = false;
      switch (op) {
        case RelOp::Le: holds = v <= 0; break;
        case RelOp::Ge: holds = v >= 0; break;
        case RelOp::Lt: holds = v < 0; break;
        case RelOp::Gt: holds = v > 0; break;
        default: break;
      }
      INFO(text << " op " << static_cast<int>(op) << " at " << x << " set " << set.toMathpar(2));
      CHECK(set.contains(x) == holds);
    }
  }
}

TEST_CASE("inequality output forms") {
  CHECK(solveInequality(poly("Q[x]", "x^2 + 1"), RelOp::Lt).toMathpar(2) == "\\emptyset");
  CHECK(solveInequality(poly("Q[x]", "x^2 + 1"), RelOp::Gt).toMathpar(2) == "(-\\infty, \\infty)");
  CHECK(solveInequality(poly("Q[x]", "x^2 - 2"), RelOp::Le).toMathpar(2) == "[-1.41, 1.41]");
  CHECK(solveInequality(poly("Q[x]", "(x - 1)^2"), RelOp::Le).toMathpar(2) == "\\{1\\}");
}

TEST_CASE("Groebner bases are reduced and generate the ideal") {
  std::mt19937_64 rng(3);
  auto randomPoly = [&] {
    Polynomial p(makeRing(ClassicalDomain::Q, {"x", "y"}));
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < terms; ++k)
      p.addTerm({static_cast<unsigned>(rng() % 3), static_cast<unsigned>(rng() % 3)},
                Scalar::rational(mpq_class(static_cast<long>(rng() % 7) - 3)));
    return p;
  };
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> f;
    for (int k = 0; k < 2; ++k) {
      Polynomial p = randomPoly();
      if (!p.isZero()) f.push_back(p);
    }
    if (f.empty()) continue;
    const auto g = gbasis(f);
    for (const auto& p : f) CHECK(reduce(p, g).isZero());
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(g[i].leadingCoefficient() == Scalar::fromInteger(ClassicalDomain::Q, 1));
      for (std::size_t j = i + 1; j < g.size(); ++j) CHECK(reduce(sPolynomial(g[i], g[j]), g).isZero());
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(g[j]);
      for (const auto& [m, c] : g[i].terms())
        for (const auto& o : others) CHECK_FALSE(divides(o.leadingMonomial(), m));
    }
  }
}

TEST_CASE("Groebner basis in Z is primitive with positive leading coefficients") {
  const auto g = gbasis({poly("Z[x, y]", "2x^2 - 4y"), poly("Z[x, y]", "6x y - 3")});
  for (const auto& p : g) CHECK(p.leadingCoefficient().sign() > 0);
  CHECK(formatBasis(gbasis({poly("Z[x, y]", "x^2 - 1"), poly("Z[x, y]", "y - x")}), 2, false) == "[y-x,x^2-1]");
  CHECK(formatBasis(gbasis({poly("Q[x]", "x"), poly("Q[x]", "x - 1")}), 2, false) == "[1]");
}

TEST_CASE("polynomial systems agree with a grid search") {
  const Polynomial f = poly("R[x, y]", "x^2 + y^2 - 4");
  const Polynomial g = poly("R[x, y]", "y - x^2");
  const SolutionMatrix m = solveNAE({f, g});
  REQUIRE(m.columns == std::vector<std::string>{"x", "y"});
  REQUIRE(m.rows.size() == 4);
  std::vector<std::vector<Complex>> realRows;
  for (const auto& row : m.rows) {
    CHECK(std::abs(f.evaluateComplex(row)) < 1e-9);
    CHECK(std::abs(g.evaluateComplex(row)) < 1e-9);
    if (row[0].imag() == 0.0 && row[1].imag() == 0.0) realRows.push_back(row);
  }
  std::vector<std::vector<Complex>> grid;
  const double h = 0.001;
  for (double x = -3.0; x <= 3.0; x += h) {
    // Minimize the residual along y = x^2 and keep local minima near zero.
    auto res = [](double t) { return std::fabs(t * t + t * t * t * t - 4.0); };
    if (res(x) < res(x - h) && res(x) < res(x + h) && res(x) < 0.02) grid.push_back({x, x * x});
  }
  CHECK(golden::matchMultiset(realRows, grid, [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    return std::abs(a[0] - b[0]) < 0.01 && std::abs(a[1] - b[1]) < 0.01;
  }));
}

TEST_CASE("degenerate systems") {
  try {
    solveNAE({poly("Q[x, y]", "x y")});
    FAIL("positive dimensional");
  } catch (const MathparError& e) {
    CHECK(e.code() == ErrorCode::PositiveDimensional);
  }
  try {
    solveNAE({poly("Q[x, y]", "x"), poly("Q[x, y]", "x - 1")});
    FAIL("inconsistent");
  } catch (const MathparError& e) {
    CHECK(e.code() == ErrorCode::NoSolution);
  }
  const SolutionMatrix single = solveNAE({poly("Q[x, y]", "x^2")});
  CHECK(single.toMathpar(2) == "[[0.00]]");
}
