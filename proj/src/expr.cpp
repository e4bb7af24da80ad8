#include "mathpar/expr.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <map>

namespace mathpar {

struct Expr::Node {
  Kind kind = Kind::Poly;
  RingPtr ring;
  std::optional<Polynomial> poly;
  Fn fn = Fn::Sin;
  std::vector<Expr> kids;
  int exponent = 0;
};

std::string_view fnName(Fn f) noexcept {
  switch (f) {
    case Fn::Sin: return "sin";
    case Fn::Cos: return "cos";
    case Fn::Tg: return "tg";
    case Fn::Ctg: return "ctg";
    case Fn::Ln: return "ln";
    case Fn::Exp: return "exp";
  }
  return "?";
}

std::optional<Fn> fnFromName(std::string_view name) noexcept {
  for (Fn f : {Fn::Sin, Fn::Cos, Fn::Tg, Fn::Ctg, Fn::Ln, Fn::Exp})
    if (fnName(f) == name) return f;
  return std::nullopt;
}

namespace {

void requireSameExprRing(const RingPtr& a, const RingPtr& b) {
  if (!sameRing(a, b)) fail(ErrorCode::DomainMismatch, "expressions belong to different spaces");
}

[[noreturn]] void undefined(Fn f) {
  fail(ErrorCode::UndefinedValue, "\\" + std::string(fnName(f)) + " is undefined at this point");
}

double evalReal(Fn f, double x) {
  switch (f) {
    case Fn::Sin: return std::sin(x);
    case Fn::Cos: return std::cos(x);
    case Fn::Tg: {
      double c = std::cos(x);
      if (std::fabs(c) < 1e-12) undefined(f);
      return std::sin(x) / c;
    }
    case Fn::Ctg: {
      double s = std::sin(x);
      if (std::fabs(s) < 1e-12) undefined(f);
      return std::cos(x) / s;
    }
    case Fn::Ln:
      if (!(x > 0)) undefined(f);
      return std::log(x);
    case Fn::Exp: {
      double v = std::exp(x);
      if (!std::isfinite(v)) undefined(f);
      return v;
    }
  }
  return 0.0;
}

std::complex<double> evalComplex(Fn f, std::complex<double> z) {
  switch (f) {
    case Fn::Sin: return std::sin(z);
    case Fn::Cos: return std::cos(z);
    case Fn::Tg: {
      auto c = std::cos(z);
      if (std::abs(c) < 1e-12) undefined(f);
      return std::sin(z) / c;
    }
    case Fn::Ctg: {
      auto s = std::sin(z);
      if (std::abs(s) < 1e-12) undefined(f);
      return std::cos(z) / s;
    }
    case Fn::Ln:
      if (z == 0.0) undefined(f);
      return std::log(z);
    case Fn::Exp: return std::exp(z);
  }
  return 0.0;
}

// Exact values at 0 and 1 that every domain can represent.
std::optional<long> exactSpecialValue(Fn f, const Scalar& c) {
  if (c.isZero()) {
    switch (f) {
      case Fn::Sin:
      case Fn::Tg: return 0;
      case Fn::Cos:
      case Fn::Exp: return 1;
      case Fn::Ln:
      case Fn::Ctg: undefined(f);
    }
  }
  if (c.isOne() && f == Fn::Ln) return 0;
  return std::nullopt;
}

}  // namespace

Expr Expr::poly(Polynomial p) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Poly;
  n->ring = p.ring();
  n->poly = std::move(p);
  return Expr(std::move(n));
}

Expr Expr::constant(const RingPtr& ring, const Scalar& c) { return poly(Polynomial::constant(ring, c)); }

Expr Expr::rawApply(Fn f, const Expr& arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Apply;
  n->ring = arg.ring();
  n->fn = f;
  n->kids = {arg};
  return Expr(std::move(n));
}

Expr Expr::apply(Fn f, const Expr& arg) {
  auto c = arg.constantValue();
  if (!c) return rawApply(f, arg);
  const RingPtr& ring = arg.ring();
  if (auto special = exactSpecialValue(f, *c)) return constant(ring, Scalar::fromInteger(ring->domain, *special));
  switch (ring->domain) {
    case ClassicalDomain::R64: return constant(ring, Scalar::floating(evalReal(f, c->toDouble())));
    case ClassicalDomain::R: return constant(ring, Scalar::real(rationalFromDouble(evalReal(f, c->toDouble()))));
    case ClassicalDomain::C64: return constant(ring, Scalar::complex(evalComplex(f, c->toComplex())));
    default: return rawApply(f, arg);
  }
}

Expr Expr::rawSum(std::vector<Expr> terms) {
  if (terms.empty()) fail(ErrorCode::ArityError, "empty sum");
  if (terms.size() == 1) return terms.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->ring = terms.front().ring();
  n->kids = std::move(terms);
  return Expr(std::move(n));
}

Expr Expr::rawProduct(std::vector<Expr> factors) {
  if (factors.empty()) fail(ErrorCode::ArityError, "empty product");
  if (factors.size() == 1) return factors.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->ring = factors.front().ring();
  n->kids = std::move(factors);
  return Expr(std::move(n));
}

Expr Expr::rawPower(const Expr& base, int exponent) {
  if (exponent == 1) return base;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Power;
  n->ring = base.ring();
  n->kids = {base};
  n->exponent = exponent;
  return Expr(std::move(n));
}

Expr Expr::rawQuotient(const Expr& num, const Expr& den) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Quotient;
  n->ring = num.ring();
  n->kids = {num, den};
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }
const RingPtr& Expr::ring() const noexcept { return node_->ring; }

const Polynomial& Expr::polynomial() const {
  if (!node_->poly) fail(ErrorCode::DomainMismatch, "expression is not a polynomial");
  return *node_->poly;
}

std::optional<Scalar> Expr::constantValue() const {
  if (kind() != Kind::Poly || !node_->poly->isConstant()) return std::nullopt;
  return node_->poly->constantValue();
}

Fn Expr::function() const { return node_->fn; }
const std::vector<Expr>& Expr::children() const { return node_->kids; }
int Expr::exponent() const { return node_->exponent; }

Expr operator+(const Expr& a, const Expr& b) {
  requireSameExprRing(a.ring(), b.ring());
  if (a.isPolynomial() && b.isPolynomial()) return Expr::poly(a.polynomial() + b.polynomial());
  Polynomial acc(a.ring());
  std::vector<Expr> rest;
  for (const Expr* e : {&a, &b}) {
    const std::vector<Expr> single{*e};
    const auto& parts = e->kind() == Expr::Kind::Sum ? e->children() : single;
    for (const auto& t : parts) {
      if (t.isPolynomial()) acc = acc + t.polynomial();
      else rest.push_back(t);
    }
  }
  if (rest.empty()) return Expr::poly(acc);
  if (!acc.isZero()) rest.insert(rest.begin(), Expr::poly(acc));
  return Expr::rawSum(std::move(rest));
}

Expr Expr::operator-() const { return *this * constant(ring(), Scalar::fromInteger(ring()->domain, -1)); }

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  requireSameExprRing(a.ring(), b.ring());
  if (a.isPolynomial() && b.isPolynomial()) return Expr::poly(a.polynomial() * b.polynomial());
  Polynomial acc = Polynomial::constant(a.ring(), Scalar::one(a.ring()->domain));
  // Non-polynomial factors grouped by base, exponents accumulated.
  std::vector<std::pair<Expr, int>> bases;
  for (const Expr* e : {&a, &b}) {
    const std::vector<Expr> single{*e};
    const auto& parts = e->kind() == Expr::Kind::Product ? e->children() : single;
    for (const auto& f : parts) {
      if (f.isPolynomial()) {
        acc = acc * f.polynomial();
        continue;
      }
      Expr base = f.kind() == Expr::Kind::Power ? f.children().front() : f;
      int n = f.kind() == Expr::Kind::Power ? f.exponent() : 1;
      auto it = std::find_if(bases.begin(), bases.end(), [&](const auto& p) { return p.first.key() == base.key(); });
      if (it == bases.end()) bases.emplace_back(base, n);
      else it->second += n;
    }
  }
  if (acc.isZero()) return Expr::poly(acc);
  std::vector<Expr> factors;
  if (!(acc.isConstant() && acc.constantValue().isOne())) factors.push_back(Expr::poly(acc));
  for (const auto& [base, n] : bases) {
    if (n == 0) continue;
    factors.push_back(n > 0 ? Expr::rawPower(base, n) : Expr::rawQuotient(Expr::constant(a.ring(), Scalar::one(a.ring()->domain)), Expr::rawPower(base, -n)));
  }
  if (factors.empty()) return Expr::poly(acc);
  return Expr::rawProduct(std::move(factors));
}

Expr operator/(const Expr& a, const Expr& b) {
  requireSameExprRing(a.ring(), b.ring());
  if (b.isPolynomial() && b.polynomial().isZero()) fail(ErrorCode::DivisionByZero, "division by zero");
  if (a.isPolynomial() && a.polynomial().isZero()) return a;
  if (auto c = b.constantValue()) {
    if (a.isPolynomial() && a.ring()->domain != ClassicalDomain::Z) return Expr::poly(a.polynomial().dividedBy(*c));
    if (a.ring()->domain != ClassicalDomain::Z)
      return a * Expr::constant(a.ring(), Scalar::one(a.ring()->domain) / *c);
  }
  if (a.isPolynomial() && b.isPolynomial()) {
    if (auto q = divideExact(a.polynomial(), b.polynomial())) return Expr::poly(*q);
  }
  return Expr::rawQuotient(a, b);
}

Expr Expr::pow(int n) const {
  if (n == 0) return constant(ring(), Scalar::one(ring()->domain));
  if (n == 1) return *this;
  if (n < 0) return constant(ring(), Scalar::one(ring()->domain)) / pow(-n);
  if (isPolynomial()) return poly(polynomial().pow(static_cast<unsigned>(n)));
  if (kind() == Kind::Power) return rawPower(children().front(), exponent() * n);
  return rawPower(*this, n);
}

Expr Expr::substitute(std::span<const std::optional<Expr>> values) const {
  if (std::none_of(values.begin(), values.end(), [](const auto& v) { return v.has_value(); })) return *this;
  for (const auto& v : values)
    if (v) requireSameExprRing(ring(), v->ring());
  switch (kind()) {
    case Kind::Poly: {
      const Polynomial& p = polynomial();
      Expr sum = constant(ring(), Scalar::zero(ring()->domain));
      for (const auto& [m, c] : p.terms()) {
        Monomial kept(m.size(), 0);
        Expr term = constant(ring(), c);
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (m[i] == 0) continue;
          if (i < values.size() && values[i]) term = term * values[i]->pow(static_cast<int>(m[i]));
          else kept[i] = m[i];
        }
        term = term * poly(Polynomial::term(ring(), kept, Scalar::one(ring()->domain)));
        sum = sum + term;
      }
      return sum;
    }
    case Kind::Apply: return apply(function(), children().front().substitute(values));
    case Kind::Sum: {
      Expr acc = children().front().substitute(values);
      for (std::size_t k = 1; k < children().size(); ++k) acc = acc + children()[k].substitute(values);
      return acc;
    }
    case Kind::Product: {
      Expr acc = children().front().substitute(values);
      for (std::size_t k = 1; k < children().size(); ++k) acc = acc * children()[k].substitute(values);
      return acc;
    }
    case Kind::Power: return children().front().substitute(values).pow(exponent());
    case Kind::Quotient: return children()[0].substitute(values) / children()[1].substitute(values);
  }
  return *this;
}

namespace {

Expr differentiate(const Expr& e, std::size_t var) {
  const RingPtr& ring = e.ring();
  auto num = [&](long v) { return Expr::constant(ring, Scalar::fromInteger(ring->domain, v)); };
  switch (e.kind()) {
    case Expr::Kind::Poly: return Expr::poly(e.polynomial().derivative(var));
    case Expr::Kind::Apply: {
      const Expr& u = e.children().front();
      Expr du = differentiate(u, var);
      if (du.isPolynomial() && du.polynomial().isZero()) return du;
      switch (e.function()) {
        case Fn::Sin: return Expr::apply(Fn::Cos, u) * du;
        case Fn::Cos: return -(Expr::apply(Fn::Sin, u) * du);
        case Fn::Tg: return du / Expr::apply(Fn::Cos, u).pow(2);
        case Fn::Ctg: return -(du / Expr::apply(Fn::Sin, u).pow(2));
        case Fn::Ln: return du / u;
        case Fn::Exp: return e * du;
      }
      break;
    }
    case Expr::Kind::Sum: {
      Expr acc = num(0);
      for (const auto& t : e.children()) acc = acc + differentiate(t, var);
      return acc;
    }
    case Expr::Kind::Product: {
      const auto& fs = e.children();
      Expr acc = num(0);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        Expr term = differentiate(fs[i], var);
        if (term.isPolynomial() && term.polynomial().isZero()) continue;
        for (std::size_t j = 0; j < fs.size(); ++j)
          if (j != i) term = term * fs[j];
        acc = acc + term;
      }
      return acc;
    }
    case Expr::Kind::Power: {
      const Expr& b = e.children().front();
      return num(e.exponent()) * b.pow(e.exponent() - 1) * differentiate(b, var);
    }
    case Expr::Kind::Quotient: {
      const Expr& a = e.children()[0];
      const Expr& b = e.children()[1];
      return (differentiate(a, var) * b - a * differentiate(b, var)) / b.pow(2);
    }
  }
  return e;
}

}  // namespace

Expr Expr::derivative(std::size_t var, unsigned order) const {
  if (var >= ring()->variables.size()) fail(ErrorCode::ArityError, "unknown differentiation variable");
  Expr out = *this;
  for (unsigned k = 0; k < order; ++k) out = differentiate(out, var);
  return out;
}

Expr Expr::rebased(const RingPtr& target) const {
  switch (kind()) {
    case Kind::Poly: return poly(polynomial().rebased(target));
    case Kind::Apply: return apply(function(), children().front().rebased(target));
    case Kind::Sum:
    case Kind::Product: {
      std::vector<Expr> kids;
      for (const auto& k : children()) kids.push_back(k.rebased(target));
      return kind() == Kind::Sum ? rawSum(std::move(kids)) : rawProduct(std::move(kids));
    }
    case Kind::Power: return rawPower(children().front().rebased(target), exponent());
    case Kind::Quotient: return rawQuotient(children()[0].rebased(target), children()[1].rebased(target));
  }
  return *this;
}

// --- printing ----------------------------------------------------------------

namespace {

enum Level { SumLevel = 1, ProductLevel = 2, PowerLevel = 3, Atom = 4 };

struct Rendered {
  std::string text;
  int level;
};

int polyLevel(const Polynomial& p) {
  if (p.isZero()) return Atom;
  if (p.termCount() > 1) return SumLevel;
  const auto& [m, c] = *p.terms().begin();
  const bool negative = c.kind() != Scalar::Kind::Complex && c.kind() != Scalar::Kind::Tropical && c.sign() < 0;
  if (negative) return SumLevel;
  if (c.kind() == Scalar::Kind::Complex && !p.isConstant()) return ProductLevel;
  if (c.kind() == Scalar::Kind::Complex) return Atom;
  if (mathpar::totalDegree(m) == 0)
    return c.kind() == Scalar::Kind::Rational && c.toRational().get_den() != 1 ? ProductLevel : Atom;
  if (!c.isOne()) return ProductLevel;
  std::size_t vars = 0;
  unsigned top = 0;
  for (unsigned e : m) {
    if (e) ++vars;
    top = std::max(top, e);
  }
  if (vars > 1) return ProductLevel;
  return top > 1 ? PowerLevel : Atom;
}

std::string wrap(const Rendered& r, int minLevel, bool latex) {
  if (r.level >= minLevel) return r.text;
  return latex ? "\\left(" + r.text + "\\right)" : "(" + r.text + ")";
}

std::string fnText(Fn f, bool latex) {
  if (latex && (f == Fn::Tg || f == Fn::Ctg)) return "\\mathrm{" + std::string(fnName(f)) + "}";
  return "\\" + std::string(fnName(f));
}

Rendered render(const Expr& e, int fp, bool latex) {
  switch (e.kind()) {
    case Expr::Kind::Poly: {
      const Polynomial& p = e.polynomial();
      return {latex ? p.toLatex(fp) : p.toMathpar(fp), polyLevel(p)};
    }
    case Expr::Kind::Apply: {
      Rendered arg = render(e.children().front(), fp, latex);
      if (latex) return {fnText(e.function(), true) + "\\left(" + arg.text + "\\right)", Atom};
      return {fnText(e.function(), false) + "(" + arg.text + ")", Atom};
    }
    case Expr::Kind::Sum: {
      std::string out;
      for (std::size_t k = 0; k < e.children().size(); ++k) {
        Rendered t = render(e.children()[k], fp, latex);
        if (k > 0 && (t.text.empty() || t.text.front() != '-')) out += "+";
        out += t.text;
      }
      return {out, SumLevel};
    }
    case Expr::Kind::Product: {
      std::string out;
      bool negate = false;
      const auto& fs = e.children();
      std::size_t start = 0;
      if (auto c = fs.front().constantValue(); c && c->kind() != Scalar::Kind::Complex && (-*c).isOne()) {
        negate = true;
        start = 1;
      }
      for (std::size_t k = start; k < fs.size(); ++k) {
        Rendered f = render(fs[k], fp, latex);
        const bool rationalConstant = fs[k].constantValue() && f.level == ProductLevel;
        std::string piece = rationalConstant ? wrap({f.text, SumLevel}, ProductLevel, latex) : wrap(f, ProductLevel, latex);
        if (k > start && !piece.empty() && std::isdigit(static_cast<unsigned char>(piece.front())))
          out += latex ? "\\cdot " : "*";
        out += piece;
      }
      return {(negate ? "-" : "") + out, negate ? SumLevel : ProductLevel};
    }
    case Expr::Kind::Power: {
      Rendered b = render(e.children().front(), fp, latex);
      std::string base = wrap(b, Atom, latex);
      if (latex) return {base + "^{" + std::to_string(e.exponent()) + "}", PowerLevel};
      return {base + "^" + std::to_string(e.exponent()), PowerLevel};
    }
    case Expr::Kind::Quotient: {
      Rendered n = render(e.children()[0], fp, latex);
      Rendered d = render(e.children()[1], fp, latex);
      if (latex) return {"\\frac{" + n.text + "}{" + d.text + "}", Atom};
      return {wrap(n, ProductLevel, false) + "/" + wrap(d, PowerLevel, false), ProductLevel};
    }
  }
  return {"?", Atom};
}

}  // namespace

std::string Expr::toMathpar(int floatpos) const { return render(*this, floatpos, false).text; }
std::string Expr::toLatex(int floatpos) const { return render(*this, floatpos, true).text; }
std::string Expr::key() const { return toMathpar(17); }

// --- integration ---------------------------------------------------------------

Polynomial integrate(const Polynomial& p, std::size_t var) {
  if (var >= p.variableCount()) fail(ErrorCode::ArityError, "unknown integration variable");
  if (p.domain() == ClassicalDomain::Z) return p.toDomain(ClassicalDomain::Q).integral(var);
  return p.integral(var);
}

Expr integrate(const Expr& e, std::size_t var) {
  if (!e.isPolynomial())
    fail(ErrorCode::NonPolynomialIntegrand, "only polynomials can be integrated symbolically");
  return Expr::poly(integrate(e.polynomial(), var));
}

}  // namespace mathpar
