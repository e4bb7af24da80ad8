#pragma once

#include "mathpar/expr.hpp"

namespace mathpar {

/// The \Factor simplifier. Expressions built from sin/cos/ln/exp kernels are
/// reduced with sin²u + cos²u = 1, ln a + ln b = ln(ab), exp(ln t) = t and
/// ln(exp t) = t. Polynomials over Z, Q and R are split into content,
/// monomial content, rational linear factors and square-free cofactors;
/// over R64 and C64 only the monomial content is extracted. Returns the
/// input unchanged when nothing applies.
Expr factorSimplify(const Expr& e);

/// Polynomial branch of factorSimplify.
Expr factorPolynomial(const Polynomial& p);

/// Multiplies out products and powers of polynomials (inverse of the
/// polynomial branch).
Expr expand(const Expr& e);

}  // namespace mathpar
