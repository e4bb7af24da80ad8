#include "mathpar/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace mathpar {

Polynomial toRationalRing(const Polynomial& p) {
  Polynomial out(withDomain(p.ring(), ClassicalDomain::Q));
  for (const auto& [m, c] : p.terms()) {
    if (c.isExact()) {
      out.addTerm(m, Scalar::rational(c.toRational()));
      continue;
    }
    auto z = c.toComplex();
    if (z.imag() != 0.0) fail(ErrorCode::DomainMismatch, "complex coefficients are not supported here");
    out.addTerm(m, Scalar::rational(rationalFromDouble(z.real())));
  }
  return out;
}

Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const CancelToken& cancel) {
  Division result{{}, Polynomial(f.ring())};
  for (const auto& g : divisors) {
    requireSameRing(f, g);
    result.quotients.emplace_back(f.ring());
  }
  Polynomial p = f;
  while (!p.isZero()) {
    cancel.check();
    const Monomial lm = p.leadingMonomial();
    const Scalar lc = p.leadingCoefficient();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& g = divisors[i];
      if (g.isZero() || !divides(g.leadingMonomial(), lm)) continue;
      Monomial q = monomialQuotient(lm, g.leadingMonomial());
      Scalar c = lc / g.leadingCoefficient();
      result.quotients[i].addTerm(q, c);
      p = p - g.timesTerm(q, c);
      divided = true;
      break;
    }
    if (!divided) {
      result.remainder.addTerm(lm, lc);
      p.addTerm(lm, -lc);
    }
  }
  return result;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors, const CancelToken& cancel) {
  Polynomial remainder(f.ring());
  Polynomial p = f;
  while (!p.isZero()) {
    cancel.check();
    const Monomial lm = p.leadingMonomial();
    const Scalar lc = p.leadingCoefficient();
    auto g = std::find_if(divisors.begin(), divisors.end(), [&](const Polynomial& d) {
      return !d.isZero() && divides(d.leadingMonomial(), lm);
    });
    if (g == divisors.end()) {
      remainder.addTerm(lm, lc);
      p.addTerm(lm, -lc);
    } else {
      p = p - g->timesTerm(monomialQuotient(lm, g->leadingMonomial()), lc / g->leadingCoefficient());
    }
  }
  return remainder;
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g) {
  requireSameRing(f, g);
  Monomial l = monomialLcm(f.leadingMonomial(), g.leadingMonomial());
  Scalar one = Scalar::one(f.domain());
  return f.timesTerm(monomialQuotient(l, f.leadingMonomial()), one / f.leadingCoefficient()) -
         g.timesTerm(monomialQuotient(l, g.leadingMonomial()), one / g.leadingCoefficient());
}

Polynomial normalizeGenerator(const Polynomial& p, ClassicalDomain target) {
  Polynomial q = toRationalRing(p);
  if (target == ClassicalDomain::Z) {
    mpz_class denLcm = 1, content = 0;
    for (const auto& [m, c] : q.terms()) {
      mpq_class v = c.toRational();
      mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), v.get_den_mpz_t());
    }
    for (const auto& [m, c] : q.terms()) {
      mpq_class v = c.toRational() * denLcm;
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num_mpz_t());
    }
    mpq_class factor(denLcm, content);
    factor.canonicalize();
    if (q.leadingCoefficient().sign() < 0) factor = -factor;
    return q.scaled(Scalar::rational(factor)).toDomain(ClassicalDomain::Z);
  }
  q = q.dividedBy(q.leadingCoefficient());
  return q.toDomain(target);
}

namespace {

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

}  // namespace

std::vector<Polynomial> gbasis(const std::vector<Polynomial>& generators, const CancelToken& cancel) {
  if (generators.empty()) fail(ErrorCode::ArityError, "a basis needs at least one polynomial");
  const ClassicalDomain target = generators.front().domain();
  for (const auto& g : generators) requireSameRing(generators.front(), g);

  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    Polynomial q = toRationalRing(g);
    if (!q.isZero()) basis.push_back(q.dividedBy(q.leadingCoefficient()));
  }
  if (basis.empty()) return {Polynomial(generators.front().ring())};

  // Pairs still to be treated, keyed by (i, j) with i < j.
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
  auto isPending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    cancel.check();
    // Normal selection: the pair with the smallest lcm.
    auto best = pending.begin();
    Monomial bestLcm = monomialLcm(basis[best->first].leadingMonomial(), basis[best->second].leadingMonomial());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = monomialLcm(basis[it->first].leadingMonomial(), basis[it->second].leadingMonomial());
      if (compareMonomials(l, bestLcm) < 0) best = it, bestLcm = std::move(l);
    }
    auto [i, j] = *best;
    pending.erase(best);

    const Monomial& li = basis[i].leadingMonomial();
    const Monomial& lj = basis[j].leadingMonomial();
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = divides(basis[k].leadingMonomial(), bestLcm) && !isPending(i, k) && !isPending(j, k);
    }
    if (chain) continue;

    Polynomial h = reduce(sPolynomial(basis[i], basis[j]), basis, cancel);
    if (h.isZero()) continue;
    basis.push_back(h.dividedBy(h.leadingCoefficient()));
    const std::size_t n = basis.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
  }

  // Minimize, then inter-reduce.
  std::vector<Polynomial> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t m = 0; m < basis.size() && !redundant; ++m) {
      if (m == k) continue;
      const auto& a = basis[m].leadingMonomial();
      const auto& b = basis[k].leadingMonomial();
      if (divides(a, b) && (a != b || m < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(minimal[m]);
    Polynomial lead = Polynomial::term(minimal[k].ring(), minimal[k].leadingMonomial(), minimal[k].leadingCoefficient());
    minimal[k] = lead + reduce(minimal[k] - lead, others, cancel);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
    return compareMonomials(a.leadingMonomial(), b.leadingMonomial()) > 0;
  });

  std::vector<Polynomial> out;
  for (const auto& g : minimal) out.push_back(normalizeGenerator(g, target).rebased(generators.front().ring()));
  return out;
}

std::string formatBasis(const std::vector<Polynomial>& basis, int floatpos, bool latex) {
  std::string out = "[";
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k > 0) out += latex ? ", " : ",";
    out += latex ? basis[k].toLatex(floatpos) : basis[k].toMathpar(floatpos);
  }
  return out + "]";
}

}  // namespace mathpar
