#include "mathpar/engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "mathpar/factor.hpp"
#include "mathpar/groebner.hpp"
#include "mathpar/parser.hpp"

namespace mathpar {

void clearEnvironment(Environment& env) {
  env.bindings.clear();
  env.space = SpaceContext::defaults();
}

std::string Output::mathparLine() const { return label ? *label + " = " + mathpar : mathpar; }
std::string Output::latexLine() const { return label ? *label + " = " + latex : latex; }

std::string_view severityName(Severity s) noexcept {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "error";
}

bool ExecutionResult::hasErrors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

namespace {

int rank(ClassicalDomain d) {
  switch (d) {
    case ClassicalDomain::Z: return 0;
    case ClassicalDomain::Q: return 1;
    case ClassicalDomain::R: return 2;
    case ClassicalDomain::R64: return 3;
    case ClassicalDomain::C64: return 4;
  }
  return 0;
}

ClassicalDomain promote(ClassicalDomain a, ClassicalDomain b) { return rank(a) >= rank(b) ? a : b; }

ClassicalDomain domainOfScalar(const Scalar& s) {
  switch (s.kind()) {
    case Scalar::Kind::Integer: return ClassicalDomain::Z;
    case Scalar::Kind::Rational: return ClassicalDomain::Q;
    case Scalar::Kind::Real: return ClassicalDomain::R;
    case Scalar::Kind::Float: return ClassicalDomain::R64;
    case Scalar::Kind::Complex: return ClassicalDomain::C64;
    case Scalar::Kind::Tropical: break;
  }
  fail(ErrorCode::WrongSpace, "a tropical value cannot be used in a classical space");
}

ArithOp arithOf(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return ArithOp::Add;
    case BinaryOp::Sub: return ArithOp::Sub;
    case BinaryOp::Mul: return ArithOp::Mul;
    default: return ArithOp::Div;
  }
}

bool isPrintLike(const AstNode& n) {
  const auto* c = std::get_if<Call>(&n.node);
  return c && (c->name == "print" || c->name == "prints");
}

class Evaluator {
 public:
  Evaluator(Environment& env, const CancelToken& cancel, ExecutionResult& result)
      : env_(env), cancel_(cancel), result_(result) {}

  void run(const Program& program) {
    for (const auto& stmt : program.statements) {
      try {
        cancel_.check();
        statement(*stmt);
      } catch (const MathparError& e) {
        SourcePos pos = e.position().value_or(stmt->pos);
        result_.diagnostics.push_back({Severity::Error, e.code(), e.what(), pos.line, pos.column});
        flushPrinted();
        return;
      } catch (const std::exception& e) {
        result_.diagnostics.push_back({Severity::Error, std::nullopt, std::string("internal error: ") + e.what(),
                                       stmt->pos.line, stmt->pos.column});
        flushPrinted();
        return;
      }
    }
    flushPrinted();
    if (!printed_ && last_) emit(last_->first, last_->second);
  }

 private:
  // --- statements ------------------------------------------------------------

  void statement(const AstNode& n) {
    if (std::holds_alternative<TextComment>(n.node)) return;
    if (const auto* d = std::get_if<SpaceDecl>(&n.node)) {
      env_.space = SpaceContext::make(resolveAlgebra(d->algebra), d->variables, env_.space.floatpos);
      return;
    }
    if (const auto* c = std::get_if<ConfigDecl>(&n.node)) {
      if (c->value < 0 || c->value > 30) fail(ErrorCode::DomainMismatch, "FLOATPOS must lie between 0 and 30");
      env_.space.floatpos = static_cast<int>(c->value);
      return;
    }
    if (const auto* a = std::get_if<Assign>(&n.node)) {
      Value v = eval(*a->value);
      env_.bindings.insert_or_assign(a->target, Binding{v, env_.space});
      last_ = {a->target, std::move(v)};
      return;
    }
    if (isPrintLike(n)) {
      printed_ = true;
      for (const auto& arg : std::get<Call>(n.node).args) {
        std::optional<std::string> label;
        if (const auto* ref = std::get_if<VarRef>(&arg->node); ref && env_.bindings.count(ref->name)) label = ref->name;
        pending_.emplace_back(label, eval(*arg));
      }
      flushPrinted();
      return;
    }
    last_ = {std::nullopt, eval(n)};
  }

  void emit(const std::optional<std::string>& label, const Value& v) {
    const int fp = env_.space.floatpos;
    result_.outputs.push_back({label, v.toMathpar(fp), v.toLatex(fp)});
  }

  void flushPrinted() {
    for (const auto& [label, v] : pending_) emit(label, v);
    pending_.clear();
  }

  // --- expressions -----------------------------------------------------------

  Value eval(const AstNode& n) {
    try {
      return evalNode(n);
    } catch (MathparError& e) {
      e.setPositionIfMissing(n.pos);
      throw;
    }
  }

  Value evalNode(const AstNode& n) {
    return std::visit(
        [&](const auto& node) -> Value {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, NumberLit>) return number(node);
          else if constexpr (std::is_same_v<T, VarRef>) return lookup(node.name);
          else if constexpr (std::is_same_v<T, BinOp>) return binary(node);
          else if constexpr (std::is_same_v<T, Neg>) return negate(eval(*node.operand));
          else if constexpr (std::is_same_v<T, Call>) return call(node);
          else if constexpr (std::is_same_v<T, ListLit>) return list(node);
          else if constexpr (std::is_same_v<T, Relation>)
            fail(ErrorCode::Unsupported, "a relation can only be used inside \\solve");
          else if constexpr (std::is_same_v<T, Assign>)
            fail(ErrorCode::UnexpectedToken, "assignment is only allowed as a statement");
          else fail(ErrorCode::UnexpectedToken, "declaration is only allowed as a statement");
        },
        n.node);
  }

  const SpaceContext& space() const { return env_.space; }
  bool tropical() const { return space().algebra.isTropical(); }
  const TropicalSignature& signature() const { return space().algebra.tropical(); }
  ClassicalDomain domain() const { return space().algebra.classical(); }
  RingPtr ring(ClassicalDomain d) const { return makeRing(d, space().variables); }

  void requireClassical(std::string_view what) const {
    if (tropical()) fail(ErrorCode::WrongSpace, std::string(what) + " needs a classical SPACE, not " + space().name());
  }
  void requireTropical(std::string_view what) const {
    if (!tropical()) fail(ErrorCode::WrongSpace, std::string(what) + " needs a tropical SPACE, not " + space().name());
  }

  Value number(const NumberLit& lit) const {
    if (!tropical()) return {Scalar::fromDecimal(domain(), lit.text)};
    mpq_class q = Scalar::fromDecimal(ClassicalDomain::Q, lit.text).toRational();
    return {Scalar::tropical(tropNormalize(signature(), TropicalScalar::finite(q)))};
  }

  Value constant(const std::string& name) const {
    const std::string bare = name.substr(1);
    if (bare == "infty") {
      if (tropical()) return {Scalar::tropical(tropNormalize(signature(), TropicalScalar::plusInfinity()))};
      fail(ErrorCode::UndefinedValue, "\\infty is a value only in tropical spaces");
    }
    if (bare == "pi") {
      requireClassical("\\pi");
      switch (domain()) {
        case ClassicalDomain::R64: return {Scalar::floating(std::numbers::pi)};
        case ClassicalDomain::C64: return {Scalar::complex(std::numbers::pi)};
        case ClassicalDomain::R: return {Scalar::real(rationalFromDouble(std::numbers::pi))};
        default: fail(ErrorCode::UndefinedValue, "\\pi has no exact value in " + space().name());
      }
    }
    if (bare == "i") {
      if (tropical() || domain() != ClassicalDomain::C64)
        fail(ErrorCode::DomainMismatch, "the imaginary unit needs SPACE = C64[...]");
      return {Scalar::complex({0.0, 1.0})};
    }
    if (isNoncommutativeSymbol(bare))
      fail(ErrorCode::Unsupported, "noncommutative symbols such as " + name + " are not supported");
    fail(ErrorCode::UnboundIdentifier, name + " has no value");
  }

  Value lookup(const std::string& name) {
    if (!name.empty() && name.front() == '\\') return constant(name);
    if (auto it = env_.bindings.find(name); it != env_.bindings.end()) return fresh(name, it->second);
    if (int idx = space().variableIndex(name); idx >= 0) return variable(static_cast<std::size_t>(idx));
    if (auto parts = split(name)) {
      Value acc = variable(parts->front());
      for (std::size_t k = 1; k < parts->size(); ++k) acc = arith(ArithOp::Mul, acc, variable((*parts)[k]));
      return acc;
    }
    fail(ErrorCode::UnboundIdentifier, "'" + name + "' is not defined");
  }

  Value variable(std::size_t idx) const {
    requireClassical("a polynomial variable");
    return {Polynomial::variable(ring(domain()), idx)};
  }

  /// Splits an unknown identifier such as `xy` into space variables.
  std::optional<std::vector<std::size_t>> split(std::string_view name) const {
    if (name.empty()) return std::vector<std::size_t>{};
    std::vector<std::pair<std::size_t, std::size_t>> options;  // (length, index)
    for (std::size_t i = 0; i < space().variables.size(); ++i) {
      const std::string& v = space().variables[i];
      if (name.substr(0, v.size()) == v) options.emplace_back(v.size(), i);
    }
    std::sort(options.rbegin(), options.rend());
    for (auto [len, idx] : options) {
      if (auto rest = split(name.substr(len))) {
        rest->insert(rest->begin(), idx);
        return rest;
      }
    }
    return std::nullopt;
  }

  Value fresh(const std::string& name, const Binding& b) const {
    if (b.space.sameRing(space())) return b.value;
    if (b.value.is<Scalar>()) {
      try {
        return {toSpaceScalar(b.value.as<Scalar>())};
      } catch (const MathparError&) {
      }
    }
    fail(ErrorCode::WrongSpace, "'" + name + "' was computed in " + b.space.name() + " and cannot be used in " +
                                    space().name());
  }

  Scalar toSpaceScalar(const Scalar& s) const {
    if (tropical()) {
      if (s.kind() == Scalar::Kind::Tropical) return Scalar::tropical(tropNormalize(signature(), s.asTropical()));
      mpq_class q = s.kind() == Scalar::Kind::Float ? mpq_class(s.toDouble()) : s.toRational();
      return Scalar::tropical(tropNormalize(signature(), TropicalScalar::finite(q)));
    }
    if (s.kind() == Scalar::Kind::Tropical) {
      if (!s.asTropical().isFinite()) fail(ErrorCode::WrongSpace, "infinite values exist only in tropical spaces");
      return coerce(Scalar::rational(s.asTropical().value), domain());
    }
    return coerce(s, domain());
  }

  // --- arithmetic ------------------------------------------------------------

  ClassicalDomain domainOf(const Value& v) const {
    if (v.is<Scalar>()) return domainOfScalar(v.as<Scalar>());
    if (v.is<Polynomial>()) return v.as<Polynomial>().domain();
    if (v.is<Expr>()) return v.as<Expr>().ring()->domain;
    fail(ErrorCode::DomainMismatch, "a " + v.kindName() + " cannot be used in arithmetic");
  }

  Expr toExpr(const Value& v, ClassicalDomain d) const {
    const RingPtr r = ring(d);
    if (v.is<Scalar>()) return Expr::constant(r, coerce(v.as<Scalar>(), d));
    if (v.is<Polynomial>()) {
      const Polynomial& p = v.as<Polynomial>();
      if (p.variableCount() != r->variables.size())
        fail(ErrorCode::WrongSpace, "polynomial belongs to a different space");
      return Expr::poly(p.toDomain(d).rebased(r));
    }
    if (v.is<Expr>()) {
      const Expr& e = v.as<Expr>();
      if (e.ring()->variables != r->variables) fail(ErrorCode::WrongSpace, "expression belongs to a different space");
      return sameRing(e.ring(), r) ? e : e.rebased(r);
    }
    fail(ErrorCode::DomainMismatch, "a " + v.kindName() + " cannot be used in arithmetic");
  }

  static Value fromExpr(const Expr& e) {
    if (e.isPolynomial()) return {e.polynomial()};
    return {e};
  }

  Value arith(ArithOp op, const Value& a, const Value& b) const {
    if (tropical()) return tropicalArith(op, a, b);
    const ClassicalDomain d = promote(domainOf(a), domainOf(b));
    if (a.is<Scalar>() && b.is<Scalar>()) {
      Scalar x = coerce(a.as<Scalar>(), d), y = coerce(b.as<Scalar>(), d);
      switch (op) {
        case ArithOp::Add: return {x + y};
        case ArithOp::Sub: return {x - y};
        case ArithOp::Mul: return {x * y};
        case ArithOp::Div: return {x / y};
      }
    }
    Expr x = toExpr(a, d), y = toExpr(b, d);
    switch (op) {
      case ArithOp::Add: return fromExpr(x + y);
      case ArithOp::Sub: return fromExpr(x - y);
      case ArithOp::Mul: return fromExpr(x * y);
      case ArithOp::Div: return fromExpr(x / y);
    }
    return a;
  }

  Value tropicalArith(ArithOp op, const Value& a, const Value& b) const {
    const TropicalSignature& s = signature();
    if (a.is<Scalar>() && b.is<Scalar>()) return {scalarArith(space().algebra, op, a.as<Scalar>(), b.as<Scalar>())};
    if (a.is<TropicalMatrix>() && b.is<TropicalMatrix>()) {
      if (op == ArithOp::Add) return {matAdd(a.as<TropicalMatrix>(), b.as<TropicalMatrix>())};
      if (op == ArithOp::Mul) return {matMul(a.as<TropicalMatrix>(), b.as<TropicalMatrix>())};
    }
    if (op == ArithOp::Mul && (a.is<Scalar>() || b.is<Scalar>()) &&
        (a.is<TropicalMatrix>() || b.is<TropicalMatrix>())) {
      const Scalar& k = a.is<Scalar>() ? a.as<Scalar>() : b.as<Scalar>();
      TropicalMatrix m = a.is<TropicalMatrix>() ? a.as<TropicalMatrix>() : b.as<TropicalMatrix>();
      TropicalScalar t = toSpaceScalar(k).asTropical();
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = tropMul(s, t, m.at(r, c));
      return {m};
    }
    fail(ErrorCode::DomainMismatch, "this operation is not defined for a " + a.kindName() + " and a " + b.kindName() +
                                        " in " + s.name());
  }

  long integerOf(const Value& v, std::string_view what) const {
    if (v.is<Scalar>()) {
      const Scalar& s = v.as<Scalar>();
      std::optional<mpq_class> q;
      if (s.isExact()) q = s.toRational();
      else if (s.kind() == Scalar::Kind::Tropical && s.asTropical().isFinite()) q = s.asTropical().value;
      else if (s.kind() == Scalar::Kind::Float || s.kind() == Scalar::Kind::Complex) {
        auto z = s.toComplex();
        if (z.imag() == 0.0 && z.real() == std::floor(z.real()) && std::fabs(z.real()) < 1e15)
          q = mpq_class(static_cast<long>(z.real()));
      }
      if (q && q->get_den() == 1 && q->get_num().fits_slong_p()) return q->get_num().get_si();
    }
    fail(ErrorCode::DomainMismatch, std::string(what) + " must be an integer");
  }

  Value power(const Value& base, long n) const {
    if (tropical()) {
      if (n < 0) fail(ErrorCode::Unsupported, "negative tropical powers are not supported");
      const TropicalSignature& s = signature();
      if (base.is<Scalar>()) {
        TropicalScalar b = toSpaceScalar(base.as<Scalar>()).asTropical(), acc = s.unit;
        for (long k = 0; k < n; ++k) acc = tropMul(s, acc, b);
        return {Scalar::tropical(acc)};
      }
      if (base.is<TropicalMatrix>()) {
        const TropicalMatrix& m = base.as<TropicalMatrix>();
        if (!m.isSquare()) fail(ErrorCode::DimensionMismatch, "only square matrices have powers");
        TropicalMatrix acc = TropicalMatrix::identity(s, m.rows());
        for (long k = 0; k < n; ++k) acc = matMul(acc, m);
        return {acc};
      }
      fail(ErrorCode::DomainMismatch, "a " + base.kindName() + " has no powers");
    }
    if (std::labs(n) > 100000) fail(ErrorCode::Unsupported, "exponent is too large");
    const ClassicalDomain d = domainOf(base);
    if (base.is<Scalar>()) {
      Scalar b = base.as<Scalar>(), acc = Scalar::one(d);
      for (long m = std::labs(n); m > 0; m >>= 1) {
        if (m & 1) acc = acc * b;
        if (m > 1) b = b * b;
      }
      return {n < 0 ? Scalar::one(d) / acc : acc};
    }
    return fromExpr(toExpr(base, d).pow(static_cast<int>(n)));
  }

  Value binary(const BinOp& b) {
    if (b.op == BinaryOp::Pow) {
      long n = integerOf(eval(*b.rhs), "an exponent");
      // In `xy^2` the exponent belongs to the last variable only.
      if (const auto* ref = std::get_if<VarRef>(&b.lhs->node); ref && isSplitName(ref->name)) {
        auto parts = *split(ref->name);
        Value acc = power(variable(parts.back()), n);
        for (std::size_t k = parts.size() - 1; k-- > 0;) acc = arith(ArithOp::Mul, variable(parts[k]), acc);
        return acc;
      }
      return power(eval(*b.lhs), n);
    }
    Value lhs = eval(*b.lhs);
    Value rhs = eval(*b.rhs);
    return arith(arithOf(b.op), lhs, rhs);
  }

  bool isSplitName(const std::string& name) const {
    return !name.empty() && name.front() != '\\' && !env_.bindings.count(name) && space().variableIndex(name) < 0 &&
           !tropical() && split(name).has_value();
  }

  Value negate(const Value& v) const {
    if (tropical()) {
      if (!v.is<Scalar>()) fail(ErrorCode::DomainMismatch, "a " + v.kindName() + " cannot be negated");
      TropicalScalar t = toSpaceScalar(v.as<Scalar>()).asTropical();
      if (t.kind == TropicalScalar::Kind::PlusInfinity) t = TropicalScalar::minusInfinity();
      else if (t.kind == TropicalScalar::Kind::MinusInfinity) t = TropicalScalar::plusInfinity();
      else t.value = -t.value;
      return {Scalar::tropical(tropNormalize(signature(), t))};
    }
    if (v.is<Scalar>()) return {-v.as<Scalar>()};
    if (v.is<Polynomial>()) return {-v.as<Polynomial>()};
    if (v.is<Expr>()) return fromExpr(-v.as<Expr>());
    fail(ErrorCode::DomainMismatch, "a " + v.kindName() + " cannot be negated");
  }

  Value list(const ListLit& l) {
    ValueList out;
    for (const auto& e : l.elements) out.items.push_back(eval(*e));
    if (tropical() && !out.items.empty() &&
        std::all_of(out.items.begin(), out.items.end(), [](const Value& v) { return v.is<ValueList>(); })) {
      std::vector<std::vector<TropicalScalar>> rows;
      for (const auto& row : out.items) {
        std::vector<TropicalScalar> r;
        for (const auto& cell : row.as<ValueList>().items) {
          if (!cell.is<Scalar>()) fail(ErrorCode::DomainMismatch, "matrix entries must be numbers");
          r.push_back(toSpaceScalar(cell.as<Scalar>()).asTropical());
        }
        rows.push_back(std::move(r));
      }
      return {TropicalMatrix::fromRows(signature(), rows)};
    }
    return {out};
  }

  // --- commands --------------------------------------------------------------

  static void arity(const Call& c, std::size_t lo, std::size_t hi) {
    if (c.args.size() < lo || c.args.size() > hi) {
      std::string expected = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
      fail(ErrorCode::ArityError, "\\" + c.name + " expects " + expected + " argument(s), got " +
                                      std::to_string(c.args.size()));
    }
  }

  std::size_t variableArg(const std::string& name) const {
    int idx = space().variableIndex(name);
    if (idx < 0) fail(ErrorCode::ArityError, "'" + name + "' is not a variable of " + space().name());
    return static_cast<std::size_t>(idx);
  }

  Polynomial polynomialArg(const Value& v, ClassicalDomain d) const {
    Expr e = toExpr(v, d);
    if (!e.isPolynomial()) fail(ErrorCode::Unsupported, "a polynomial is required here");
    return e.polynomial();
  }

  std::vector<Polynomial> polynomialArgs(const Call& c) {
    std::vector<Value> values;
    ClassicalDomain d = domain();
    for (const auto& a : c.args) {
      values.push_back(eval(*a));
      d = promote(d, domainOf(values.back()));
    }
    std::vector<Polynomial> out;
    for (const auto& v : values) out.push_back(polynomialArg(v, d));
    return out;
  }

  TropicalMatrix matrixArg(const Value& v, bool column) const {
    if (v.is<TropicalMatrix>()) return v.as<TropicalMatrix>();
    if (v.is<ValueList>()) {
      std::vector<TropicalScalar> cells;
      for (const auto& item : v.as<ValueList>().items) {
        if (!item.is<Scalar>()) fail(ErrorCode::DomainMismatch, "matrix entries must be numbers");
        cells.push_back(toSpaceScalar(item.as<Scalar>()).asTropical());
      }
      std::vector<std::vector<TropicalScalar>> rows;
      if (column) {
        for (auto& c : cells) rows.push_back({c});
      } else {
        rows.push_back(cells);
      }
      return TropicalMatrix::fromRows(signature(), rows);
    }
    if (v.is<Scalar>()) return TropicalMatrix::fromRows(signature(), {{toSpaceScalar(v.as<Scalar>()).asTropical()}});
    fail(ErrorCode::DomainMismatch, "a matrix is required, got a " + v.kindName());
  }

  Value applyFunction(Fn f, const Call& c) {
    arity(c, 1, 1);
    requireClassical("\\" + c.name);
    Value arg = eval(*c.args.front());
    Expr e = Expr::apply(f, toExpr(arg, domainOf(arg)));
    if (arg.is<Scalar>()) {
      if (auto k = e.constantValue()) return {*k};
    }
    return fromExpr(e);
  }

  Value call(const Call& c) {
    cancel_.check();
    const std::string& name = c.name;
    if (auto f = fnFromName(name)) return applyFunction(*f, c);
    if (name == "print" || name == "prints")
      fail(ErrorCode::Unsupported, "\\" + name + " can only be used as a statement");
    if (name == "plot") fail(ErrorCode::Unsupported, "plotting is out of scope");

    if (name == "value") {
      arity(c, 2, 2);
      requireClassical("\\value");
      Value f = eval(*c.args[0]);
      Value pts = eval(*c.args[1]);
      if (!pts.is<ValueList>()) fail(ErrorCode::ArityError, "\\value expects a list of values");
      const auto& items = pts.as<ValueList>().items;
      if (items.size() > space().variables.size())
        fail(ErrorCode::ArityError, "\\value got " + std::to_string(items.size()) + " values for " +
                                        std::to_string(space().variables.size()) + " variables");
      if (items.empty()) return f;
      ClassicalDomain d = domainOf(f);
      for (const auto& v : items) d = promote(d, domainOf(v));
      std::vector<std::optional<Expr>> subs;
      for (const auto& v : items) subs.emplace_back(toExpr(v, d));
      Expr r = toExpr(f, d).substitute(subs);
      if (auto k = r.constantValue()) return {*k};
      return fromExpr(r);
    }
    if (name == "Factor") {
      arity(c, 1, 1);
      requireClassical("\\Factor");
      Value v = eval(*c.args[0]);
      if (v.is<Scalar>()) return v;
      Expr r = factorSimplify(toExpr(v, domainOf(v)));
      return r.isPolynomial() ? Value{r.polynomial()} : Value{r};
    }
    if (name == "int") {
      arity(c, 1, 1);
      requireClassical("\\int");
      if (!c.differential) fail(ErrorCode::ArityError, "\\int needs a differential such as 'd x'");
      const std::size_t var = variableArg(*c.differential);
      Value v = eval(*c.args[0]);
      return {integrate(toExpr(v, domainOf(v)), var).polynomial()};
    }
    if (name == "D") {
      arity(c, 1, 2);
      requireClassical("\\D");
      std::size_t var = 0;
      long order = 1;
      if (c.args.size() == 2) {
        const AstNode& spec = *c.args[1];
        if (const auto* ref = std::get_if<VarRef>(&spec.node)) {
          var = variableArg(ref->name);
        } else if (const auto* p = std::get_if<BinOp>(&spec.node);
                   p && p->op == BinaryOp::Pow && std::holds_alternative<VarRef>(p->lhs->node)) {
          var = variableArg(std::get<VarRef>(p->lhs->node).name);
          order = integerOf(eval(*p->rhs), "the derivative order");
          if (order < 1) fail(ErrorCode::ArityError, "the derivative order must be positive");
        } else {
          fail(ErrorCode::ArityError, "\\D expects a variable or a variable power such as x^2");
        }
      } else if (space().variables.size() != 1) {
        fail(ErrorCode::ArityError, "\\D needs the differentiation variable");
      }
      Value v = eval(*c.args[0]);
      Expr r = toExpr(v, domainOf(v)).derivative(var, static_cast<unsigned>(order));
      return fromExpr(r);
    }
    if (name == "solve") {
      arity(c, 1, 1);
      requireClassical("\\solve");
      const AstNode& arg = *c.args[0];
      RelOp op = RelOp::Eq;
      Value lhs, rhs;
      if (const auto* rel = std::get_if<Relation>(&arg.node)) {
        op = rel->op;
        lhs = eval(*rel->lhs);
        rhs = eval(*rel->rhs);
      } else {
        lhs = eval(arg);
        rhs = Value{Scalar::zero(domain())};
      }
      const ClassicalDomain d = promote(domainOf(lhs), domainOf(rhs));
      Polynomial p = polynomialArg(arith(ArithOp::Sub, lhs, rhs), d);
      if (op == RelOp::Eq) return {solveUnivariate(p, cancel_)};
      return {solveInequality(p, op, cancel_)};
    }
    if (name == "gbasis") {
      if (c.args.empty()) arity(c, 1, 1);
      requireClassical("\\gbasis");
      ValueList out;
      for (auto& g : gbasis(polynomialArgs(c), cancel_)) out.items.push_back({std::move(g)});
      return {out};
    }
    if (name == "solveNAE") {
      if (c.args.empty()) arity(c, 1, 1);
      requireClassical("\\solveNAE");
      return {solveNAE(polynomialArgs(c), cancel_)};
    }
    if (name == "solveLAETropic" || name == "solveLAITropic") {
      arity(c, 2, 2);
      requireTropical("\\" + name);
      TropicalMatrix a = matrixArg(eval(*c.args[0]), false);
      TropicalMatrix b = matrixArg(eval(*c.args[1]), true);
      return {name == "solveLAETropic" ? solveLAETropic(a, b) : solveLAITropic(a, b)};
    }
    if (name == "BellmanEquation") {
      arity(c, 1, 2);
      requireTropical("\\BellmanEquation");
      TropicalMatrix a = matrixArg(eval(*c.args[0]), false);
      if (c.args.size() == 1) return {bellmanHomogeneous(a, cancel_)};
      return {bellman(a, matrixArg(eval(*c.args[1]), true), cancel_)};
    }
    if (name == "searchLeastDistances") {
      arity(c, 1, 1);
      requireTropical("\\searchLeastDistances");
      return {searchLeastDistances(matrixArg(eval(*c.args[0]), false), cancel_)};
    }
    if (name == "findTheShortestPath") {
      arity(c, 3, 3);
      requireTropical("\\findTheShortestPath");
      TropicalMatrix a = matrixArg(eval(*c.args[0]), false);
      long i = integerOf(eval(*c.args[1]), "a node index");
      long j = integerOf(eval(*c.args[2]), "a node index");
      if (i < 1 || j < 1) fail(ErrorCode::DimensionMismatch, "node indices start at 1");
      return {findTheShortestPath(a, static_cast<std::size_t>(i), static_cast<std::size_t>(j), cancel_)};
    }
    fail(ErrorCode::UnknownCommand, "\\" + name + " cannot be evaluated");
  }

  Environment& env_;
  const CancelToken& cancel_;
  ExecutionResult& result_;
  bool printed_ = false;
  std::optional<std::pair<std::optional<std::string>, Value>> last_;
  std::vector<std::pair<std::optional<std::string>, Value>> pending_;
};

}  // namespace

ExecutionResult executeSection(Environment& env, std::string_view source, const CancelToken& cancel) {
  ExecutionResult result;
  env.lastUsedAt = std::chrono::steady_clock::now();
  Program program;
  try {
    program = parseSource(source);
  } catch (const MathparError& e) {
    SourcePos pos = e.position().value_or(SourcePos{1, 1});
    result.diagnostics.push_back({Severity::Error, e.code(), e.what(), pos.line, pos.column});
    return result;
  }
  Evaluator(env, cancel, result).run(program);
  return result;
}

}  // namespace mathpar
