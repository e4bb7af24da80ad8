#include "properties.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "mathpar/algebra.hpp"
#include "mathpar/expr.hpp"
#include "mathpar/parser.hpp"
#include "mathpar/printer.hpp"
#include "mathpar/tropical_matrix.hpp"

namespace props {

using namespace mathpar;
using golden::Check;

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::string show(const TropicalScalar& v) { return formatTropical(v, 4, false); }

}  // namespace

// --- P1 ----------------------------------------------------------------------------

Check p1DerivativeOfIntegral(std::uint64_t seed) {
  Check c{"P1"};
  std::mt19937_64 rng(seed);
  RingPtr ring = makeRing(ClassicalDomain::Q, {"x", "y", "z"});
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p(ring);
    const long terms = uniform(rng, 0, 6);
    for (long t = 0; t < terms; ++t) {
      Monomial m = {static_cast<unsigned>(uniform(rng, 0, 6)), static_cast<unsigned>(uniform(rng, 0, 3)),
                    static_cast<unsigned>(uniform(rng, 0, 3))};
      p.addTerm(m, Scalar::rational(mpq_class(uniform(rng, -50, 50), uniform(rng, 1, 12))));
    }
    const auto var = static_cast<std::size_t>(uniform(rng, 0, 2));
    Polynomial back = integrate(p, var).derivative(var);
    if (!(back == p)) {
      c.detail = "d/d" + ring->variables[var] + " of the integral of " + p.toMathpar(2) + " gave " + back.toMathpar(2);
      return c;
    }
  }
  c.pass = true;
  return c;
}

// --- P2 ----------------------------------------------------------------------------

namespace {

/// Elements on which the signature's operations are total.
std::vector<TropicalScalar> sampleElements(const TropicalSignature& s, std::mt19937_64& rng) {
  std::vector<TropicalScalar> out = {s.zero, s.unit};
  const bool lattice = s.mul == TropicalMulOp::Max || s.mul == TropicalMulOp::Min;
  // Plus and Mult leave products of opposite infinities (or 0 and an
  // infinity) undefined, so only lattice algebras get the top element.
  if (lattice) out.push_back(tropTop(s));
  const bool nonnegative = s.mul == TropicalMulOp::Mult;
  for (int k = 0; k < 6; ++k) {
    mpq_class v = s.carrier == CarrierSet::Z ? mpq_class(uniform(rng, nonnegative ? 0 : -20, 20))
                                             : mpq_class(uniform(rng, nonnegative ? 0 : -80, 80), 8);
    out.push_back(tropNormalize(s, TropicalScalar::finite(v)));
  }
  return out;
}

}  // namespace

Check p2SemiringAxioms(std::uint64_t seed) {
  Check c{"P2"};
  std::mt19937_64 rng(seed);
  const auto catalog = tropicalCatalog();
  if (catalog.size() != 18) {
    c.detail = "catalog has " + std::to_string(catalog.size()) + " signatures";
    return c;
  }
  for (const auto& s : catalog) {
    for (int sample = 0; sample < 10000; ++sample) {
      const auto pool = sampleElements(s, rng);
      auto pick = [&] { return pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool.size()) - 1))]; };
      const TropicalScalar a = pick(), b = pick(), d = pick();
      auto add = [&](const TropicalScalar& x, const TropicalScalar& y) { return tropAdd(s, x, y); };
      auto mul = [&](const TropicalScalar& x, const TropicalScalar& y) { return tropMul(s, x, y); };
      std::string failed;
      try {
        if (!(add(a, b) == add(b, a))) failed = "plus commutes";
        else if (!(add(add(a, b), d) == add(a, add(b, d)))) failed = "plus associates";
        else if (!(add(a, a) == a)) failed = "plus is idempotent";
        else if (!(add(a, s.zero) == a)) failed = "zero is neutral for plus";
        else if (!(mul(a, b) == mul(b, a))) failed = "times commutes";
        else if (!(mul(mul(a, b), d) == mul(a, mul(b, d)))) failed = "times associates";
        else if (!(mul(a, s.unit) == a)) failed = "unit is neutral for times";
        else if (!(mul(a, s.zero) == s.zero)) failed = "zero absorbs";
        else if (!(mul(a, add(b, d)) == add(mul(a, b), mul(a, d)))) failed = "times distributes over plus";
      } catch (const MathparError& e) {
        failed = std::string("exception ") + e.what();
      }
      if (!failed.empty()) {
        c.detail = s.name() + ": " + failed + " fails for a=" + show(a) + ", b=" + show(b) + ", c=" + show(d);
        return c;
      }
    }
  }
  c.pass = true;
  return c;
}

// --- P3 ----------------------------------------------------------------------------

namespace {

constexpr long kNoEdge = std::numeric_limits<long>::max();

/// Least simple-path weight from every node to every other node.
std::vector<std::vector<long>> bruteForceDistances(const std::vector<std::vector<long>>& w) {
  const std::size_t n = w.size();
  std::vector<std::vector<long>> best(n, std::vector<long>(n, kNoEdge));
  std::vector<bool> visited(n, false);
  std::function<void(std::size_t, std::size_t, long)> walk = [&](std::size_t start, std::size_t at, long cost) {
    best[start][at] = std::min(best[start][at], cost);
    for (std::size_t next = 0; next < n; ++next) {
      if (visited[next] || w[at][next] == kNoEdge) continue;
      visited[next] = true;
      walk(start, next, cost + w[at][next]);
      visited[next] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    visited[s] = true;
    walk(s, s, 0);
    visited[s] = false;
  }
  return best;
}

}  // namespace

Check p3ShortestPaths(std::uint64_t seed) {
  Check c{"P3"};
  std::mt19937_64 rng(seed);
  const TropicalSignature s = makeSignature(CarrierSet::Z, TropicalAddOp::Min, TropicalMulOp::Plus);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
    std::vector<std::vector<long>> w(n, std::vector<long>(n, kNoEdge));
    std::vector<std::vector<TropicalScalar>> rows(n, std::vector<TropicalScalar>(n, s.zero));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (coin(rng, 0.5)) {
          w[i][j] = uniform(rng, 0, 9);
          rows[i][j] = TropicalScalar::finite(w[i][j]);
        }
    const TropicalMatrix a = TropicalMatrix::fromRows(s, rows);
    const auto expected = bruteForceDistances(w);
    TropicalMatrix d(s, 0, 0);
    try {
      d = searchLeastDistances(a);
    } catch (const MathparError& e) {
      c.detail = std::string("searchLeastDistances threw ") + e.what() + " on " + a.toMathpar(0);
      return c;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const TropicalScalar want =
            expected[i][j] == kNoEdge ? s.zero : TropicalScalar::finite(expected[i][j]);
        if (!(d.at(i, j) == want)) {
          std::ostringstream os;
          os << "distance " << i + 1 << "->" << j + 1 << " is " << show(d.at(i, j)) << ", brute force " << show(want)
             << " for " << a.toMathpar(0);
          c.detail = os.str();
          return c;
        }
        if (expected[i][j] == kNoEdge) {
          bool threw = false;
          try {
            findTheShortestPath(a, i + 1, j + 1);
          } catch (const MathparError& e) {
            threw = e.code() == ErrorCode::Unreachable;
          }
          if (!threw) {
            c.detail = "an unreachable pair did not raise Unreachable";
            return c;
          }
          continue;
        }
        const PathResult path = findTheShortestPath(a, i + 1, j + 1);
        long cost = 0;
        bool valid = !path.nodes.empty() && path.nodes.front() == i + 1 && path.nodes.back() == j + 1;
        for (std::size_t k = 0; valid && k + 1 < path.nodes.size(); ++k) {
          const long edge = w[path.nodes[k] - 1][path.nodes[k + 1] - 1];
          if (edge == kNoEdge) valid = false;
          else cost += edge;
        }
        if (!valid || cost != expected[i][j] || !(path.distance == want)) {
          c.detail = "path " + path.toMathpar(0) + " from " + std::to_string(i + 1) + " to " + std::to_string(j + 1) +
                     " is invalid or not optimal for " + a.toMathpar(0);
          return c;
        }
      }
  }
  c.pass = true;
  return c;
}

// --- P4 ----------------------------------------------------------------------------

namespace {

TropicalScalar randomEntry(const TropicalSignature& s, std::mt19937_64& rng, double zeroRate) {
  if (coin(rng, zeroRate)) return s.zero;
  return TropicalScalar::finite(uniform(rng, -6, 6));
}

TropicalMatrix randomMatrix(const TropicalSignature& s, std::mt19937_64& rng, std::size_t r, std::size_t cols,
                            double zeroRate) {
  TropicalMatrix m(s, r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = randomEntry(s, rng, zeroRate);
  return m;
}

}  // namespace

Check p4ResiduationAndBellman(std::uint64_t seed) {
  Check c{"P4"};
  std::mt19937_64 rng(seed);
  const TropicalSignature s = makeSignature(CarrierSet::Z, TropicalAddOp::Max, TropicalMulOp::Plus);
  for (int trial = 0; trial < 500; ++trial) {
    const auto m = static_cast<std::size_t>(uniform(rng, 1, 4));
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 4));
    const TropicalMatrix a = randomMatrix(s, rng, m, n, 0.2);
    const TropicalMatrix b = randomMatrix(s, rng, m, 1, 0.1);
    const TropicalMatrix hat = residuate(a, b);
    std::vector<TropicalMatrix> probes = {hat};
    for (int k = 0; k < 8; ++k) probes.push_back(randomMatrix(s, rng, n, 1, 0.2));
    for (int k = 0; k < 4; ++k) {
      // Nudge a finite entry of x-hat up or down by one.
      TropicalMatrix x = hat;
      const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
      if (x.at(j, 0).isFinite()) x.at(j, 0).value += coin(rng, 0.5) ? 1 : -1;
      probes.push_back(x);
    }
    for (const auto& x : probes) {
      const bool lhs = matLeq(matMul(a, x), b);
      const bool rhs = matLeq(x, hat);
      if (lhs != rhs) {
        c.detail = "adjunction fails for A=" + a.toMathpar(0) + ", b=" + b.toMathpar(0) + ", x=" + x.toMathpar(0);
        return c;
      }
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
    TropicalMatrix a = TropicalMatrix::zeros(s, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) a.at(i, j) = randomEntry(s, rng, 0.3);
    const TropicalMatrix b = randomMatrix(s, rng, n, 1, 0.2);
    try {
      const TropicalMatrix x = bellman(a, b);
      if (!(matAdd(matMul(a, x), b) == x)) {
        c.detail = "A x + b != x for A=" + a.toMathpar(0) + ", b=" + b.toMathpar(0);
        return c;
      }
    } catch (const MathparError& e) {
      c.detail = std::string("bellman threw ") + e.what() + " for A=" + a.toMathpar(0);
      return c;
    }
  }
  c.pass = true;
  return c;
}

// --- P5 ----------------------------------------------------------------------------

AstPtr randomExpression(std::mt19937_64& rng, int depth) {
  static const char* names[] = {"x", "y", "z", "t", "f", "xy", "a_1", "\\pi", "\\infty", "\\alpha"};
  static const char* numbers[] = {"0", "1", "2", "7", "10", "3.5", "0.25", "123456789012345678901"};
  static const char* functions[] = {"sin", "cos", "tg", "ctg", "ln", "exp", "Factor", "gbasis"};
  const long choice = depth <= 0 ? uniform(rng, 0, 1) : uniform(rng, 0, 9);
  switch (choice) {
    case 0: return makeNode(NumberLit{numbers[uniform(rng, 0, 7)]});
    case 1: return makeNode(VarRef{names[uniform(rng, 0, 9)]});
    case 2:
    case 3:
    case 4: {
      const auto op = static_cast<BinaryOp>(uniform(rng, 0, 4));
      return makeNode(BinOp{op, randomExpression(rng, depth - 1), randomExpression(rng, depth - 1)});
    }
    case 5: return makeNode(Neg{randomExpression(rng, depth - 1)});
    case 6: {
      Call call{functions[uniform(rng, 0, 7)], {}, std::nullopt};
      const long argc = uniform(rng, 1, 3);
      for (long k = 0; k < argc; ++k) call.args.push_back(randomExpression(rng, depth - 1));
      return makeNode(std::move(call));
    }
    case 7: {
      Call call{"value", {randomExpression(rng, depth - 1)}, std::nullopt};
      ListLit list;
      const long len = uniform(rng, 0, 3);
      for (long k = 0; k < len; ++k) list.elements.push_back(randomExpression(rng, depth - 1));
      call.args.push_back(makeNode(std::move(list)));
      return makeNode(std::move(call));
    }
    case 8: {
      if (coin(rng, 0.5))
        return makeNode(Call{"int", {randomExpression(rng, depth - 1)}, std::string(coin(rng, 0.5) ? "x" : "y")});
      const auto op = static_cast<RelOp>(uniform(rng, 0, 4));
      return makeNode(Call{"solve",
                           {makeNode(Relation{op, randomExpression(rng, depth - 1), randomExpression(rng, depth - 1)})},
                           std::nullopt});
    }
    default: {
      const auto op = static_cast<BinaryOp>(uniform(rng, 0, 4));
      return makeNode(BinOp{op, makeNode(NumberLit{numbers[uniform(rng, 0, 6)]}), randomExpression(rng, depth - 1)});
    }
  }
}

Check p5ParserRoundTrip(std::uint64_t seed) {
  Check c{"P5"};
  std::vector<std::string> corpus;
  for (const auto& s : golden::exampleScripts()) corpus.push_back(s.source);
  corpus.push_back(
      "SPACE = ZMinPlus[x];\nA = [[0, 3, \\infty], [\\infty, 0, 2], [1, \\infty, 0]];\n"
      "\\searchLeastDistances(A); \\findTheShortestPath(A, 1, 3); \"tropical graphs\" \\BellmanEquation(A, [0, 1, 2])");
  for (const auto& source : corpus) {
    try {
      Program first = parseSource(source);
      const std::string text = printMathpar(first);
      Program second = parseSource(text);
      if (!structurallyEqual(first, second) || printMathpar(second) != text) {
        c.detail = "corpus script does not round-trip: " + text;
        return c;
      }
    } catch (const MathparError& e) {
      c.detail = std::string("corpus script failed: ") + e.what();
      return c;
    }
  }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 1000; ++k) {
    AstPtr expr = randomExpression(rng, 4);
    const std::string text = printMathpar(*expr);
    try {
      Program back = parseSource(text);
      if (back.statements.size() != 1 || !structurallyEqual(*back.statements.front(), *expr)) {
        c.detail = "generated expression does not round-trip: " + text + " -> " + printMathpar(back);
        return c;
      }
    } catch (const MathparError& e) {
      c.detail = "generated expression " + text + " failed to parse: " + e.what();
      return c;
    }
  }
  c.pass = true;
  return c;
}

}  // namespace props
