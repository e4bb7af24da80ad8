#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mathpar/cancel.hpp"
#include "mathpar/polynomial.hpp"

namespace mathpar {

/// Solutions of a polynomial system: one column per variable, one row per
/// solution.
struct SolutionMatrix {
  std::vector<std::string> columns;
  std::vector<std::size_t> variableIndices;  // ring index of each column
  std::vector<std::vector<std::complex<double>>> rows;

  /// Row r as a point of the ring with `variableCount` variables (absent
  /// variables set to zero).
  std::vector<std::complex<double>> point(std::size_t r, std::size_t variableCount) const;

  std::string toMathpar(int floatpos) const;
  std::string toLatex(int floatpos) const;
};

/// All complex solutions of a zero-dimensional system, by back-substitution
/// through its lexicographic Gröbner basis. Columns are the variables that
/// occur in the system, in Space order. Rows are ordered by the last column
/// (descending real part, then imaginary part), then by earlier columns.
/// Throws PositiveDimensional or NoSolution.
SolutionMatrix solveNAE(const std::vector<Polynomial>& system, const CancelToken& cancel = {});

/// |f(point)| divided by 1 + the sum of the absolute term values.
double relativeResidual(const Polynomial& f, const std::vector<std::complex<double>>& point);

}  // namespace mathpar
