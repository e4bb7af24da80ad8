#include "mathpar/inequality.hpp"

#include <algorithm>
#include <limits>

#include "mathpar/roots.hpp"

namespace mathpar {

double Endpoint::toDouble() const {
  if (kind == Kind::MinusInfinity) return -std::numeric_limits<double>::infinity();
  if (kind == Kind::PlusInfinity) return std::numeric_limits<double>::infinity();
  if (const auto* q = std::get_if<mpq_class>(&value)) return q->get_d();
  return std::get<double>(value);
}

bool operator==(const Endpoint& a, const Endpoint& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != Endpoint::Kind::Finite) return true;
  const auto* qa = std::get_if<mpq_class>(&a.value);
  const auto* qb = std::get_if<mpq_class>(&b.value);
  if (qa && qb) return *qa == *qb;
  return a.toDouble() == b.toDouble();
}

namespace {

std::string endpointText(const Endpoint& e, int floatpos) {
  switch (e.kind) {
    case Endpoint::Kind::MinusInfinity: return "-\\infty";
    case Endpoint::Kind::PlusInfinity: return "\\infty";
    case Endpoint::Kind::Finite: break;
  }
  if (const auto* q = std::get_if<mpq_class>(&e.value)) {
    if (q->get_den() == 1) return q->get_num().get_str();
    return formatFixed(*q, floatpos);
  }
  return formatFixed(std::get<double>(e.value), floatpos);
}

bool wanted(RelOp op, int sign) {
  switch (op) {
    case RelOp::Gt: return sign > 0;
    case RelOp::Ge: return sign >= 0;
    case RelOp::Lt: return sign < 0;
    case RelOp::Le: return sign <= 0;
    case RelOp::Eq: return sign == 0;
  }
  return false;
}

}  // namespace

bool IntervalSet::contains(double x) const {
  for (const auto& c : components) {
    double lo = c.lower.toDouble(), hi = c.upper.toDouble();
    bool aboveLo = c.lowerClosed ? x >= lo : x > lo;
    bool belowHi = c.upperClosed ? x <= hi : x < hi;
    if (aboveLo && belowHi) return true;
  }
  return false;
}

std::string IntervalSet::toMathpar(int floatpos) const {
  if (components.empty()) return "\\emptyset";
  std::string out;
  for (std::size_t k = 0; k < components.size(); ++k) {
    const auto& c = components[k];
    if (k > 0) out += "\\cup";
    if (c.isPoint()) {
      out += "\\{" + endpointText(c.lower, floatpos) + "\\}";
      continue;
    }
    out += c.lowerClosed ? "[" : "(";
    out += endpointText(c.lower, floatpos) + ", " + endpointText(c.upper, floatpos);
    out += c.upperClosed ? "]" : ")";
  }
  return out;
}

IntervalSet solveInequality(const Polynomial& p, RelOp op, const CancelToken& cancel) {
  if (op == RelOp::Eq) fail(ErrorCode::Unsupported, "equations are solved for their roots, not as sets");
  RootList roots = solveUnivariate(p, cancel);

  std::vector<RootEntry> real;
  for (const auto& r : roots.roots)
    if (r.value.imag() == 0.0) real.push_back(r);
  std::reverse(real.begin(), real.end());  // ascending

  // Sign on the rightmost region is the sign of the leading coefficient;
  // crossing a root of odd multiplicity flips it.
  int sign = 0;
  {
    Scalar lc = p.leadingCoefficient();
    double v = lc.kind() == Scalar::Kind::Complex ? lc.toComplex().real() : lc.toDouble();
    sign = lc.isExact() ? lc.sign() : (v > 0) - (v < 0);
  }
  std::vector<int> regionSign(real.size() + 1);
  regionSign[real.size()] = sign;
  for (std::size_t k = real.size(); k-- > 0;) {
    if (real[k].multiplicity % 2 == 1) sign = -sign;
    regionSign[k] = sign;
  }

  auto endpointOf = [](const RootEntry& r) {
    return r.exact ? Endpoint::exact(*r.exact) : Endpoint::approximate(r.value.real());
  };

  // Pieces alternate: open region k, then root k.
  IntervalSet out;
  std::optional<IntervalComponent> open;
  auto close = [&](Endpoint upper, bool closed) {
    if (!open) return;
    open->upper = std::move(upper);
    open->upperClosed = closed;
    out.components.push_back(*open);
    open.reset();
  };
  for (std::size_t k = 0; k <= real.size(); ++k) {
    Endpoint lo = k == 0 ? Endpoint::minusInfinity() : endpointOf(real[k - 1]);
    Endpoint hi = k == real.size() ? Endpoint::plusInfinity() : endpointOf(real[k]);
    if (wanted(op, regionSign[k])) {
      if (!open) open = IntervalComponent{lo, lo, false, false};
    } else {
      close(lo, k > 0 && wanted(op, 0));
    }
    if (k == real.size()) {
      close(hi, false);
      break;
    }
    if (wanted(op, 0)) {
      if (!open) open = IntervalComponent{hi, hi, true, true};
    } else {
      close(hi, false);
    }
  }
  return out;
}

}  // namespace mathpar
