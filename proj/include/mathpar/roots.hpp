#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mathpar/cancel.hpp"
#include "mathpar/polynomial.hpp"
#include "mathpar/univariate.hpp"

namespace mathpar {

struct RootEntry {
  std::complex<double> value;
  unsigned multiplicity = 1;
  /// Set when the root was found to be rational and verified exactly.
  std::optional<mpq_class> exact;
};

/// Roots ordered by descending real part, then descending imaginary part.
struct RootList {
  std::vector<RootEntry> roots;

  unsigned totalMultiplicity() const;
  /// `[r1,r2,...]`, each root repeated per multiplicity.
  std::string toMathpar(int floatpos) const;
  std::string toLatex(int floatpos) const;
};

/// All complex roots of a polynomial with complex coefficients given in
/// ascending degree (leading coefficient nonzero), by Durand-Kerner with
/// Newton polishing. Roots are returned with repetition.
std::vector<std::complex<double>> durandKerner(const std::vector<std::complex<double>>& coeffs,
                                               const CancelToken& cancel = {});

/// Roots of a square-free rational polynomial; rational roots are detected
/// and reported exactly.
std::vector<RootEntry> squareFreeRoots(const uni::QPoly& p, const CancelToken& cancel = {});

/// Roots of a polynomial in at most one variable. A nonzero constant has
/// no roots.
RootList solveUnivariate(const Polynomial& p, const CancelToken& cancel = {});

/// Orders roots by descending real part, then descending imaginary part.
void sortRoots(std::vector<RootEntry>& roots);

}  // namespace mathpar
