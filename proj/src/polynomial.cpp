#include "mathpar/polynomial.hpp"

#include <algorithm>

namespace mathpar {

RingPtr makeRing(ClassicalDomain domain, std::vector<std::string> variables) {
  return std::make_shared<const PolyRing>(PolyRing{domain, std::move(variables)});
}

bool sameRing(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

RingPtr withDomain(const RingPtr& ring, ClassicalDomain domain) {
  if (ring->domain == domain) return ring;
  return makeRing(domain, ring->variables);
}

int compareMonomials(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomialLcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Monomial monomialProduct(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Monomial monomialQuotient(const Monomial& b, const Monomial& a) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

unsigned totalDegree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

// --- Polynomial --------------------------------------------------------------

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  p.addTerm(Monomial(ring->variables.size(), 0), coerce(c, ring->domain));
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->variables.size(), 0);
  m.at(index) = 1;
  const ClassicalDomain d = ring->domain;
  return term(std::move(ring), std::move(m), Scalar::one(d));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Scalar& c) {
  Polynomial p(std::move(ring));
  p.addTerm(m, coerce(c, p.domain()));
  return p;
}

bool Polynomial::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && totalDegree() == 0);
}

Scalar Polynomial::constantValue() const {
  auto it = terms_.find(Monomial(variableCount(), 0));
  return it == terms_.end() ? Scalar::zero(domain()) : it->second;
}

const Monomial& Polynomial::leadingMonomial() const {
  if (terms_.empty()) fail(ErrorCode::ZeroPolynomial, "the zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Scalar& Polynomial::leadingCoefficient() const {
  if (terms_.empty()) fail(ErrorCode::ZeroPolynomial, "the zero polynomial has no leading term");
  return terms_.begin()->second;
}

unsigned Polynomial::totalDegree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, mathpar::totalDegree(m));
  return d;
}

unsigned Polynomial::degreeIn(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

std::vector<std::size_t> Polynomial::variablesUsed() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < variableCount(); ++v)
    if (degreeIn(v) > 0) out.push_back(v);
  return out;
}

void Polynomial::addTerm(const Monomial& m, const Scalar& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

void requireSameRing(const Polynomial& a, const Polynomial& b) {
  if (!sameRing(a.ring(), b.ring()))
    fail(ErrorCode::DomainMismatch, "polynomials belong to different spaces");
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a, b);
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.addTerm(m, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a, b);
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.addTerm(m, -c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a, b);
  Polynomial out(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.addTerm(monomialProduct(ma, mb), ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Scalar k = coerce(c, domain());
  Polynomial out(ring_);
  if (k.isZero()) return out;
  for (const auto& [m, v] : terms_) out.addTerm(m, v * k);
  return out;
}

Polynomial Polynomial::dividedBy(const Scalar& c) const {
  Scalar k = coerce(c, domain());
  Polynomial out(ring_);
  for (const auto& [m, v] : terms_) out.addTerm(m, v / k);
  return out;
}

Polynomial Polynomial::timesTerm(const Monomial& mono, const Scalar& c) const {
  Polynomial out(ring_);
  if (c.isZero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), monomialProduct(m, mono), v * c);
  return out;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ring_, Scalar::one(domain()));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    out.addTerm(d, c * Scalar::fromInteger(domain(), static_cast<long>(m[var])));
  }
  return out;
}

Polynomial Polynomial::integral(std::size_t var) const {
  if (domain() == ClassicalDomain::Z)
    fail(ErrorCode::DomainMismatch, "integration needs a field of coefficients; promote Z to Q first");
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    d[var] += 1;
    out.addTerm(d, c / Scalar::fromInteger(domain(), static_cast<long>(d[var])));
  }
  return out;
}

Polynomial Polynomial::toDomain(ClassicalDomain d) const {
  if (d == domain()) return *this;
  Polynomial out(withDomain(ring_, d));
  for (const auto& [m, c] : terms_) out.addTerm(m, coerce(c, d));
  return out;
}

Polynomial Polynomial::rebased(RingPtr ring) const {
  Polynomial out(std::move(ring));
  for (const auto& [m, c] : terms_) out.addTerm(m, coerce(c, out.domain()));
  return out;
}

Polynomial Polynomial::extendedTo(RingPtr ring) const {
  Polynomial out(std::move(ring));
  for (const auto& [m, c] : terms_) {
    Monomial wide(out.variableCount(), 0);
    std::copy(m.begin(), m.end(), wide.begin());
    out.addTerm(wide, coerce(c, out.domain()));
  }
  return out;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != variableCount()) fail(ErrorCode::ArityError, "evaluation point has the wrong dimension");
  std::vector<Scalar> coerced;
  coerced.reserve(point.size());
  for (const auto& p : point) coerced.push_back(coerce(p, domain()));
  Scalar sum = Scalar::zero(domain());
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) t = t * coerced[i];
    sum = sum + t;
  }
  return sum;
}

std::complex<double> Polynomial::evaluateComplex(std::span<const std::complex<double>> point) const {
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.toComplex();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) t *= std::pow(point[i], static_cast<int>(m[i]));
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const std::optional<Polynomial>> values) const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial kept(m.size(), 0);
    Polynomial factor = constant(ring_, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (i < values.size() && values[i]) {
        requireSameRing(*this, *values[i]);
        factor = factor * values[i]->pow(m[i]);
      } else {
        kept[i] = m[i];
      }
    }
    out = out + factor.timesTerm(kept, Scalar::one(domain()));
  }
  return out;
}

std::vector<Scalar> Polynomial::univariateCoefficients(std::size_t var) const {
  std::vector<Scalar> out(degreeIn(var) + 1, Scalar::zero(domain()));
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != var && m[i] != 0) fail(ErrorCode::NotUnivariate, "polynomial involves more than one variable");
    out[m[var]] = c;
  }
  return out;
}

Polynomial Polynomial::fromUnivariate(RingPtr ring, std::size_t var, std::span<const Scalar> coeffs) {
  Polynomial out(ring);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial m(ring->variables.size(), 0);
    m[var] = static_cast<unsigned>(k);
    out.addTerm(m, coerce(coeffs[k], ring->domain));
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return sameRing(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::optional<Polynomial> divideExact(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a, b);
  if (b.isZero()) fail(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (a.domain() == ClassicalDomain::Z) {
    auto q = divideExact(a.toDomain(ClassicalDomain::Q), b.toDomain(ClassicalDomain::Q));
    if (!q) return std::nullopt;
    for (const auto& [m, c] : q->terms())
      if (c.toRational().get_den() != 1) return std::nullopt;
    return q->rebased(a.ring());
  }
  Polynomial rem = a;
  Polynomial quot(a.ring());
  const Monomial& lm = b.leadingMonomial();
  const Scalar& lc = b.leadingCoefficient();
  while (!rem.isZero()) {
    const Monomial& m = rem.leadingMonomial();
    if (!divides(lm, m)) return std::nullopt;
    Monomial qm = monomialQuotient(m, lm);
    Scalar qc = rem.leadingCoefficient() / lc;
    quot.addTerm(qm, qc);
    Polynomial next = rem - b.timesTerm(qm, qc);
    if (!next.isZero() && compareMonomials(next.leadingMonomial(), m) >= 0) return std::nullopt;  // rounding
    rem = std::move(next);
  }
  return quot;
}

// --- printing ----------------------------------------------------------------

std::string monomialMathpar(const PolyRing& ring, const Monomial& m) {
  std::string out;
  const std::string* prev = nullptr;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    const std::string& name = ring.variables[i];
    if (prev && (prev->size() > 1 || name.size() > 1)) out += ' ';
    out += name;
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
    prev = &name;
  }
  return out;
}

std::string monomialLatex(const PolyRing& ring, const Monomial& m) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    const std::string& name = ring.variables[i];
    if (!first && name.size() > 1) out += "\\,";
    out += name;
    if (m[i] > 1) out += "^{" + std::to_string(m[i]) + "}";
    first = false;
  }
  return out;
}

namespace {

bool isNegativeReal(const Scalar& c) {
  if (c.kind() == Scalar::Kind::Complex) {
    auto z = c.toComplex();
    return z.imag() == 0.0 && z.real() < 0;
  }
  return c.kind() != Scalar::Kind::Tropical && c.sign() < 0;
}

// Coefficient text for a positive (or non-real) coefficient placed in front
// of a monomial body.
std::string coefficientText(const Scalar& c, bool hasBody, bool latex, int floatpos) {
  if (hasBody && c.isOne()) return "";
  if (c.kind() == Scalar::Kind::Rational) {
    const mpq_class& q = std::get<mpq_class>(c.rep());
    if (q.get_den() != 1) {
      if (latex) return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
      return hasBody ? "(" + q.get_str() + ")" : q.get_str();
    }
  }
  std::string s = latex ? formatCoefficientLatex(c, floatpos) : formatCoefficient(c, floatpos);
  if (hasBody && c.kind() == Scalar::Kind::Complex && s.find('\\') != std::string::npos && s.front() != '(')
    s = latex ? "\\left(" + s + "\\right)" : "(" + s + ")";
  else if (hasBody && latex && s.front() == '(')
    s = "\\left" + s.substr(0, s.size() - 1) + "\\right)";
  return s;
}

std::string render(const Polynomial& p, int floatpos, bool latex) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string body = latex ? monomialLatex(*p.ring(), m) : monomialMathpar(*p.ring(), m);
    const bool negative = isNegativeReal(c);
    Scalar mag = negative ? -c : c;
    std::string coef = coefficientText(mag, !body.empty(), latex, floatpos);
    std::string termText = coef + body;
    if (negative) {
      out += "-" + termText;
    } else {
      if (!first) out += "+";
      out += termText;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string Polynomial::toMathpar(int floatpos) const { return render(*this, floatpos, false); }
std::string Polynomial::toLatex(int floatpos) const { return render(*this, floatpos, true); }

}  // namespace mathpar
