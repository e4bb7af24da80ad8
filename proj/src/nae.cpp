#include "mathpar/nae.hpp"

#include <algorithm>
#include <cmath>

#include "mathpar/algebra.hpp"
#include "mathpar/groebner.hpp"
#include "mathpar/matrix_text.hpp"
#include "mathpar/roots.hpp"

namespace mathpar {

namespace {

using Cx = std::complex<double>;

bool isPurePower(const Monomial& m, std::size_t var) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if ((i == var) != (m[i] > 0)) return false;
  return true;
}

std::size_t highestVariable(const Polynomial& g) {
  auto used = g.variablesUsed();
  return used.empty() ? 0 : used.back();
}

// Coefficients (ascending) of g in `var` after substituting `assigned`,
// plus the magnitude scale of each coefficient.
void specialize(const Polynomial& g, std::size_t var, const std::vector<Cx>& assigned, std::vector<Cx>& coeffs,
                std::vector<double>& scale) {
  const unsigned deg = g.degreeIn(var);
  coeffs.assign(deg + 1, 0.0);
  scale.assign(deg + 1, 0.0);
  for (const auto& [m, c] : g.terms()) {
    Cx t = c.toComplex();
    double s = std::abs(t);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == var || m[i] == 0) continue;
      Cx p = std::pow(assigned[i], static_cast<int>(m[i]));
      t *= p;
      s *= std::abs(p);
    }
    coeffs[m[var]] += t;
    scale[m[var]] += s;
  }
  // Coefficients lost to cancellation are treated as zero.
  while (!coeffs.empty() && std::abs(coeffs.back()) <= 1e-9 * (1.0 + scale.back())) {
    coeffs.pop_back();
    scale.pop_back();
  }
}

Cx snap(Cx z) {
  const double size = std::max(1.0, std::abs(z));
  double re = std::fabs(z.real()) < 1e-12 * size ? 0.0 : z.real();
  double im = std::fabs(z.imag()) < 1e-9 * size ? 0.0 : z.imag();
  return {re, im};
}

bool rootOrderLess(Cx a, Cx b) {
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

bool nearlyEqual(Cx a, Cx b) { return std::abs(a - b) < 1e-6 * std::max(1.0, std::abs(a)); }

}  // namespace

std::vector<Cx> SolutionMatrix::point(std::size_t r, std::size_t variableCount) const {
  std::vector<Cx> p(variableCount, 0.0);
  for (std::size_t c = 0; c < variableIndices.size(); ++c) p[variableIndices[c]] = rows[r][c];
  return p;
}

double relativeResidual(const Polynomial& f, const std::vector<Cx>& point) {
  double scale = 0.0;
  for (const auto& [m, c] : f.terms()) {
    double s = std::abs(c.toComplex());
    for (std::size_t i = 0; i < m.size(); ++i) s *= std::pow(std::abs(point[i]), static_cast<int>(m[i]));
    scale += s;
  }
  return std::abs(f.evaluateComplex(point)) / (1.0 + scale);
}

SolutionMatrix solveNAE(const std::vector<Polynomial>& system, const CancelToken& cancel) {
  if (system.empty()) fail(ErrorCode::ArityError, "\\solveNAE needs at least one polynomial");
  std::vector<Polynomial> rational;
  for (const auto& f : system) rational.push_back(toRationalRing(f));
  const RingPtr ring = rational.front().ring();
  const std::size_t nvars = ring->variables.size();

  std::vector<std::size_t> vars;
  for (const auto& f : rational)
    for (std::size_t v : f.variablesUsed()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  std::vector<Polynomial> basis = gbasis(rational, cancel);
  if (basis.size() == 1 && basis.front().isConstant()) {
    if (basis.front().isZero() && !vars.empty())
      fail(ErrorCode::PositiveDimensional, "the system has infinitely many solutions");
    if (!basis.front().isZero()) fail(ErrorCode::NoSolution, "the system has no solutions");
  }
  for (std::size_t v : vars) {
    bool bounded = std::any_of(basis.begin(), basis.end(),
                               [&](const Polynomial& g) { return isPurePower(g.leadingMonomial(), v); });
    if (!bounded) fail(ErrorCode::PositiveDimensional, "the system has infinitely many solutions");
  }

  SolutionMatrix result;
  for (std::size_t v : vars) {
    result.columns.push_back(ring->variables[v]);
    result.variableIndices.push_back(v);
  }

  std::vector<std::vector<Cx>> partial{std::vector<Cx>(nvars, 0.0)};
  for (std::size_t level = 0; level < vars.size(); ++level) {
    const std::size_t v = vars[level];
    std::vector<const Polynomial*> polys;
    for (const auto& g : basis)
      if (!g.isZero() && highestVariable(g) == v && g.degreeIn(v) > 0) polys.push_back(&g);

    std::vector<std::vector<Cx>> next;
    for (const auto& point : partial) {
      cancel.check();
      std::vector<Cx> candidates;
      if (level == 0) {
        // The eliminant is exact: solve it with multiplicities removed.
        const Polynomial* eliminant = polys.front();
        for (const auto* g : polys)
          if (g->degreeIn(v) < eliminant->degreeIn(v)) eliminant = g;
        for (const auto& r : solveUnivariate(*eliminant, cancel).roots) candidates.push_back(r.value);
      } else {
        std::vector<std::vector<Cx>> specialized;
        std::vector<std::vector<double>> scales;
        bool inconsistent = false;
        for (const auto* g : polys) {
          std::vector<Cx> c;
          std::vector<double> s;
          specialize(*g, v, point, c, s);
          if (c.size() == 1) inconsistent = true;
          if (c.size() >= 2) {
            specialized.push_back(std::move(c));
            scales.push_back(std::move(s));
          }
        }
        if (inconsistent || specialized.empty()) continue;
        std::size_t pick = 0;
        for (std::size_t k = 1; k < specialized.size(); ++k)
          if (specialized[k].size() < specialized[pick].size()) pick = k;
        for (Cx z : durandKerner(specialized[pick], cancel)) {
          if (std::none_of(candidates.begin(), candidates.end(), [&](Cx c) { return nearlyEqual(c, z); }))
            candidates.push_back(z);
        }
      }
      for (Cx z : candidates) {
        std::vector<Cx> extended = point;
        extended[v] = snap(z);
        bool consistent = std::all_of(polys.begin(), polys.end(),
                                      [&](const Polynomial* g) { return relativeResidual(*g, extended) < 1e-7; });
        if (consistent) next.push_back(std::move(extended));
      }
    }
    partial = std::move(next);
  }

  for (const auto& point : partial) {
    std::vector<Cx> row;
    for (std::size_t v : vars) row.push_back(point[v]);
    if (std::none_of(result.rows.begin(), result.rows.end(), [&](const std::vector<Cx>& existing) {
          for (std::size_t k = 0; k < row.size(); ++k)
            if (!nearlyEqual(existing[k], row[k])) return false;
          return true;
        }))
      result.rows.push_back(std::move(row));
  }
  std::stable_sort(result.rows.begin(), result.rows.end(), [](const std::vector<Cx>& a, const std::vector<Cx>& b) {
    for (std::size_t k = a.size(); k-- > 0;) {
      if (a[k] == b[k]) continue;
      return rootOrderLess(a[k], b[k]);
    }
    return false;
  });
  return result;
}

namespace {

std::vector<std::vector<std::string>> cells(const SolutionMatrix& m, int floatpos, bool latex) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m.rows) {
    std::vector<std::string> texts;
    for (Cx z : row) {
      Scalar s = z.imag() == 0.0 ? Scalar::floating(z.real()) : Scalar::complex(z);
      texts.push_back(latex ? formatScalarLatex(s, floatpos) : formatScalar(s, floatpos));
    }
    out.push_back(std::move(texts));
  }
  return out;
}

}  // namespace

std::string SolutionMatrix::toMathpar(int floatpos) const { return mathparMatrix(cells(*this, floatpos, false)); }

std::string SolutionMatrix::toLatex(int floatpos) const {
  return latexMatrix(cells(*this, floatpos, true), columns.size());
}

}  // namespace mathpar
