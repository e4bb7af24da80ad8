#include "mathpar/factor.hpp"

#include <algorithm>
#include <map>

#include "mathpar/roots.hpp"
#include "mathpar/univariate.hpp"

namespace mathpar {

namespace {

mpq_class rationalContent(const Polynomial& p) {
  mpz_class numGcd = 0, denLcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpq_class v = c.toRational();
    mpz_gcd(numGcd.get_mpz_t(), numGcd.get_mpz_t(), v.get_num_mpz_t());
    mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), v.get_den_mpz_t());
  }
  mpq_class content(numGcd, denLcm);
  content.canonicalize();
  if (p.leadingCoefficient().sign() < 0) content = -content;
  return content;
}

Monomial monomialContent(const Polynomial& p) {
  Monomial low = p.terms().begin()->first;
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i) low[i] = std::min(low[i], m[i]);
  return low;
}

bool isOneMonomial(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

// Primitive integer form of a univariate rational polynomial, as a ring element.
Polynomial primitiveFromDense(const RingPtr& ring, std::size_t var, const uni::QPoly& dense) {
  std::vector<Scalar> coeffs;
  for (const auto& c : dense) coeffs.push_back(Scalar::rational(c));
  Polynomial q = Polynomial::fromUnivariate(withDomain(ring, ClassicalDomain::Q), var, coeffs);
  return q.dividedBy(Scalar::rational(rationalContent(q)));
}

}  // namespace

Expr factorPolynomial(const Polynomial& p) {
  if (p.isConstant()) return Expr::poly(p);
  const RingPtr& ring = p.ring();
  const Monomial mono = monomialContent(p);
  const Polynomial monoPoly = Polynomial::term(ring, mono, Scalar::one(p.domain()));

  if (!isExactDomain(p.domain())) {
    if (isOneMonomial(mono) || p.termCount() == 1) return Expr::poly(p);
    Polynomial rest(ring);
    for (const auto& [m, c] : p.terms()) rest.addTerm(monomialQuotient(m, mono), c);
    return Expr::rawProduct({Expr::poly(monoPoly), Expr::poly(rest)});
  }

  const Polynomial pq = p.toDomain(ClassicalDomain::Q);
  Polynomial q(pq.ring());
  for (const auto& [m, c] : pq.terms()) q.addTerm(monomialQuotient(m, mono), c);
  q = q.dividedBy(Scalar::rational(rationalContent(q)));

  // (factor over Q, multiplicity); linear factors carry their root for ordering.
  struct Piece {
    Polynomial poly;
    unsigned mult;
    std::optional<mpq_class> root;
  };
  std::vector<Piece> pieces;
  auto used = q.variablesUsed();
  if (used.size() == 1) {
    const std::size_t var = used.front();
    uni::QPoly dense;
    for (const auto& c : q.univariateCoefficients(var)) dense.push_back(c.toRational());
    for (auto& [f, k] : uni::squareFree(dense)) {
      uni::QPoly rest = f;
      for (const auto& r : squareFreeRoots(f)) {
        if (!r.exact) continue;
        rest = uni::divmod(rest, uni::QPoly{-*r.exact, 1}).first;
        uni::QPoly linear{-*r.exact, 1};
        pieces.push_back({primitiveFromDense(ring, var, linear), k, *r.exact});
      }
      if (uni::degree(rest) >= 1) pieces.push_back({primitiveFromDense(ring, var, rest), k, std::nullopt});
    }
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
      if (a.root && b.root) return *a.root > *b.root;
      return a.root.has_value() && !b.root.has_value();
    });
  } else if (!q.isConstant()) {
    pieces.push_back({q, 1, std::nullopt});
  }

  // Overall constant so that the product reproduces p exactly.
  Polynomial product = monoPoly.toDomain(ClassicalDomain::Q);
  for (const auto& piece : pieces) product = product * piece.poly.pow(piece.mult);
  Scalar lead = Scalar::rational(pq.leadingCoefficient().toRational() / product.leadingCoefficient().toRational());

  std::vector<Expr> factors;
  Polynomial front = Polynomial::term(pq.ring(), mono, lead);
  if (!(front.isConstant() && front.constantValue().isOne())) factors.push_back(Expr::poly(front.rebased(ring)));
  for (const auto& piece : pieces) {
    Expr f = Expr::poly(piece.poly.rebased(ring));
    factors.push_back(piece.mult == 1 ? f : Expr::rawPower(f, static_cast<int>(piece.mult)));
  }
  if (factors.size() == 1 && factors.front().kind() == Expr::Kind::Poly) return Expr::poly(p);
  return Expr::rawProduct(std::move(factors));
}

namespace {

// Polynomial view of an expression whose non-polynomial parts are kernels
// (applications) mapped to extra ring variables.
class Kernelizer {
 public:
  explicit Kernelizer(const RingPtr& base) : base_(base) {}

  std::optional<Polynomial> toPolynomial(const Expr& e) {
    collect(e);
    return convert(e);
  }

  const std::vector<Expr>& kernels() const { return kernels_; }
  std::size_t baseCount() const { return base_->variables.size(); }

  Expr rebuild(const Polynomial& p) const {
    Expr sum = Expr::constant(base_, Scalar::zero(base_->domain));
    for (const auto& [m, c] : p.terms()) {
      Monomial baseMono(m.begin(), m.begin() + static_cast<long>(base_->variables.size()));
      Expr term = Expr::poly(Polynomial::term(base_, baseMono, c));
      for (std::size_t k = 0; k < kernels_.size(); ++k) {
        const std::size_t slot = base_->variables.size() + k;
        if (m[slot] > 0) term = term * kernels_[k].pow(static_cast<int>(m[slot]));
      }
      sum = sum + term;
    }
    return sum;
  }

 private:
  void collect(const Expr& e) {
    if (e.kind() == Expr::Kind::Apply) {
      if (indexOf(e) == kernels_.size()) kernels_.push_back(e);
      return;
    }
    if (e.kind() == Expr::Kind::Poly) return;
    for (const auto& k : e.children()) collect(k);
  }

  std::size_t indexOf(const Expr& app) const {
    const std::string k = app.key();
    auto it = std::find_if(kernels_.begin(), kernels_.end(), [&](const Expr& x) { return x.key() == k; });
    return static_cast<std::size_t>(it - kernels_.begin());
  }

  RingPtr ring() {
    if (!ring_) {
      std::vector<std::string> vars = base_->variables;
      for (std::size_t k = 0; k < kernels_.size(); ++k) vars.push_back("#" + std::to_string(k));
      ring_ = makeRing(base_->domain, std::move(vars));
    }
    return ring_;
  }

  std::optional<Polynomial> convert(const Expr& e) {
    switch (e.kind()) {
      case Expr::Kind::Poly: return lift(e.polynomial());
      case Expr::Kind::Apply: return kernelVariable(e);
      case Expr::Kind::Sum:
      case Expr::Kind::Product: {
        std::optional<Polynomial> acc;
        for (const auto& k : e.children()) {
          auto part = convert(k);
          if (!part) return std::nullopt;
          if (!acc) acc = *part;
          else if (e.kind() == Expr::Kind::Sum) acc = *acc + *part;
          else acc = *acc * *part;
        }
        return acc;
      }
      case Expr::Kind::Power: {
        if (e.exponent() < 0) return std::nullopt;
        auto b = convert(e.children().front());
        if (!b) return std::nullopt;
        return b->pow(static_cast<unsigned>(e.exponent()));
      }
      case Expr::Kind::Quotient: return std::nullopt;
    }
    return std::nullopt;
  }

  Polynomial kernelVariable(const Expr& app) {
    return Polynomial::variable(ring(), base_->variables.size() + indexOf(app));
  }

  Polynomial lift(const Polynomial& p) { return p.extendedTo(ring()); }

  RingPtr base_;
  std::vector<Expr> kernels_;
  RingPtr ring_;
};

// Normal form modulo s² + c² - 1 with s² as the eliminated power.
Polynomial eliminateSquare(const Polynomial& p, std::size_t s, std::size_t c) {
  const RingPtr& ring = p.ring();
  const Scalar one = Scalar::one(ring->domain);
  Monomial c2(ring->variables.size(), 0);
  c2[c] = 2;
  const Polynomial oneMinusC2 = Polynomial::constant(ring, one) - Polynomial::term(ring, c2, one);
  Polynomial out(ring);
  for (const auto& [m, coef] : p.terms()) {
    if (m[s] < 2) {
      out.addTerm(m, coef);
      continue;
    }
    Monomial rest = m;
    rest[s] = m[s] % 2;
    out = out + oneMinusC2.pow(m[s] / 2).timesTerm(rest, coef);
  }
  return out;
}

Expr simplifyKernels(const Expr& e);

// Applies the exp/ln inverse rules at the top of an application.
Expr simplifyApplication(const Expr& e) {
  Expr arg = simplifyKernels(e.children().front());
  if (arg.kind() == Expr::Kind::Apply) {
    if (e.function() == Fn::Exp && arg.function() == Fn::Ln) return arg.children().front();
    if (e.function() == Fn::Ln && arg.function() == Fn::Exp) return arg.children().front();
  }
  return Expr::apply(e.function(), arg);
}

Expr rebuildChildren(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Poly: return e;
    case Expr::Kind::Apply: return simplifyApplication(e);
    case Expr::Kind::Sum: {
      Expr acc = simplifyKernels(e.children().front());
      for (std::size_t k = 1; k < e.children().size(); ++k) acc = acc + simplifyKernels(e.children()[k]);
      return acc;
    }
    case Expr::Kind::Product: {
      Expr acc = simplifyKernels(e.children().front());
      for (std::size_t k = 1; k < e.children().size(); ++k) acc = acc * simplifyKernels(e.children()[k]);
      return acc;
    }
    case Expr::Kind::Power: return simplifyKernels(e.children().front()).pow(e.exponent());
    case Expr::Kind::Quotient:
      return simplifyKernels(e.children()[0]) / simplifyKernels(e.children()[1]);
  }
  return e;
}

Expr simplifyKernels(const Expr& input) {
  Expr e = rebuildChildren(input);
  if (e.isPolynomial() || e.kind() == Expr::Kind::Quotient) return e;

  Kernelizer kz(e.ring());
  auto converted = kz.toPolynomial(e);
  if (!converted) return e;
  Polynomial p = *converted;
  const std::size_t base = kz.baseCount();
  bool changed = false;

  // sin²u + cos²u = 1
  const auto kernels = kz.kernels();
  for (std::size_t i = 0; i < kernels.size(); ++i) {
    if (kernels[i].function() != Fn::Sin) continue;
    for (std::size_t j = 0; j < kernels.size(); ++j) {
      if (kernels[j].function() != Fn::Cos || kernels[i].children().front().key() != kernels[j].children().front().key())
        continue;
      Polynomial a = eliminateSquare(p, base + i, base + j);
      Polynomial b = eliminateSquare(p, base + j, base + i);
      const Polynomial& best = a.termCount() <= b.termCount() ? a : b;
      if (best.termCount() < p.termCount()) {
        p = best;
        changed = true;
      }
    }
  }

  // ln a + ln b = ln(ab) for terms sharing a coefficient.
  std::map<std::string, std::vector<std::pair<std::size_t, Scalar>>> groups;
  for (const auto& [m, c] : p.terms()) {
    std::size_t kernelSlot = 0, count = 0;
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (m[s] == 0) continue;
      count += m[s];
      kernelSlot = s;
    }
    if (count != 1 || kernelSlot < base) continue;
    const Expr& k = kernels[kernelSlot - base];
    if (k.function() != Fn::Ln) continue;
    groups[Expr::constant(e.ring(), c).key()].emplace_back(kernelSlot, c);
  }
  std::vector<std::pair<Expr, Scalar>> merged;
  for (const auto& [coefKey, members] : groups) {
    if (members.size() < 2) continue;
    Expr arg = kernels[members.front().first - base].children().front();
    for (std::size_t k = 1; k < members.size(); ++k) arg = arg * kernels[members[k].first - base].children().front();
    for (const auto& [slot, c] : members) {
      Monomial m(p.variableCount(), 0);
      m[slot] = 1;
      p.addTerm(m, -c);
    }
    merged.emplace_back(Expr::apply(Fn::Ln, arg), members.front().second);
    changed = true;
  }

  if (!changed) return e;
  Expr out = kz.rebuild(p);
  for (const auto& [app, c] : merged) out = out + Expr::constant(e.ring(), c) * app;
  return out;
}

}  // namespace

Expr factorSimplify(const Expr& e) {
  Expr s = simplifyKernels(e);
  if (s.isPolynomial()) return factorPolynomial(s.polynomial());
  return s;
}

Expr expand(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Poly: return e;
    case Expr::Kind::Apply: return Expr::apply(e.function(), expand(e.children().front()));
    case Expr::Kind::Sum: {
      Expr acc = expand(e.children().front());
      for (std::size_t k = 1; k < e.children().size(); ++k) acc = acc + expand(e.children()[k]);
      return acc;
    }
    case Expr::Kind::Product: {
      Expr acc = expand(e.children().front());
      for (std::size_t k = 1; k < e.children().size(); ++k) acc = acc * expand(e.children()[k]);
      return acc;
    }
    case Expr::Kind::Power: return expand(e.children().front()).pow(e.exponent());
    case Expr::Kind::Quotient: return expand(e.children()[0]) / expand(e.children()[1]);
  }
  return e;
}

}  // namespace mathpar
