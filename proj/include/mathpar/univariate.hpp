#pragma once

#include <gmpxx.h>

#include <complex>
#include <utility>
#include <vector>

namespace mathpar::uni {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial is the empty vector.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for zero
QPoly derivative(const QPoly& p);
/// Quotient and remainder; `b` must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly monic(QPoly p);
/// Monic greatest common divisor.
QPoly gcd(QPoly a, QPoly b);
mpq_class evaluate(const QPoly& p, const mpq_class& x);

/// Square-free decomposition p = c * prod f_k^k with monic, pairwise coprime
/// f_k. Entries with constant f_k are omitted.
std::vector<std::pair<QPoly, unsigned>> squareFree(const QPoly& p);

std::vector<std::complex<double>> toComplex(const QPoly& p);

}  // namespace mathpar::uni
