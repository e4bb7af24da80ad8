#pragma once

#include <string>
#include <vector>

#include "mathpar/cancel.hpp"
#include "mathpar/polynomial.hpp"

namespace mathpar {

struct Division {
  std::vector<Polynomial> quotients;  // one per divisor
  Polynomial remainder;
};

/// Multivariate division: f = sum q_i g_i + r with no term of r divisible by
/// any leading monomial of G. The ring must be a field.
Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const CancelToken& cancel = {});

/// Normal form of f modulo G (the remainder of `divide`).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors, const CancelToken& cancel = {});

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g);

/// Reduced lexicographic Gröbner basis, sorted by descending leading
/// monomial. Computed over Q; results are returned in the input domain,
/// scaled to primitive integer generators with positive leading coefficient
/// over Z and made monic otherwise. Floating inputs are rationalized first.
std::vector<Polynomial> gbasis(const std::vector<Polynomial>& generators, const CancelToken& cancel = {});

/// Converts polynomials over Z, Q, R or R64 into the same variables over Q.
/// Throws DomainMismatch for non-real complex coefficients.
Polynomial toRationalRing(const Polynomial& p);

/// Scales a nonzero polynomial to the normal form used by `gbasis`.
Polynomial normalizeGenerator(const Polynomial& p, ClassicalDomain target);

/// `[g1,g2,...]`.
std::string formatBasis(const std::vector<Polynomial>& basis, int floatpos, bool latex);

}  // namespace mathpar
