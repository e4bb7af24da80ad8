#include "mathpar/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace mathpar {

namespace {

using Cx = std::complex<double>;

Cx horner(const std::vector<Cx>& a, Cx z) {
  Cx acc = 0.0;
  for (std::size_t k = a.size(); k-- > 0;) acc = acc * z + a[k];
  return acc;
}

Cx hornerDerivative(const std::vector<Cx>& a, Cx z) {
  Cx acc = 0.0;
  for (std::size_t k = a.size(); k-- > 1;) acc = acc * z + a[k] * static_cast<double>(k);
  return acc;
}

// Magnitude of the rounding error expected when evaluating at z.
double roundingScale(const std::vector<Cx>& a, Cx z) {
  double r = std::abs(z), acc = 0.0;
  for (std::size_t k = a.size(); k-- > 0;) acc = acc * r + std::abs(a[k]);
  return acc;
}

void polish(const std::vector<Cx>& a, Cx& z) {
  Cx best = z;
  double bestRes = std::abs(horner(a, z));
  for (int it = 0; it < 8 && bestRes > 0; ++it) {
    Cx d = hornerDerivative(a, best);
    if (d == 0.0) break;
    Cx next = best - horner(a, best) / d;
    double res = std::abs(horner(a, next));
    if (!(res < bestRes)) break;
    best = next;
    bestRes = res;
  }
  z = best;
}

bool hasRealCoefficients(const std::vector<Cx>& a) {
  return std::all_of(a.begin(), a.end(), [](Cx c) { return c.imag() == 0.0; });
}

void enforceConjugateSymmetry(const std::vector<Cx>& a, std::vector<Cx>& roots) {
  std::vector<std::size_t> upper, lower;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    Cx& z = roots[k];
    if (std::fabs(z.imag()) < 1e-9 * std::max(1.0, std::abs(z))) {
      z = Cx(z.real(), 0.0);
      polish(a, z);
      z = Cx(z.real(), 0.0);
    } else {
      (z.imag() > 0 ? upper : lower).push_back(k);
    }
  }
  std::vector<bool> used(roots.size(), false);
  for (std::size_t u : upper) {
    std::size_t best = roots.size();
    double dist = 0;
    for (std::size_t l : lower) {
      if (used[l]) continue;
      double d = std::abs(roots[l] - std::conj(roots[u]));
      if (best == roots.size() || d < dist) best = l, dist = d;
    }
    if (best == roots.size()) continue;
    used[best] = true;
    Cx avg = (roots[u] + std::conj(roots[best])) / 2.0;
    roots[u] = avg;
    roots[best] = std::conj(avg);
  }
}

std::string fixedOf(const RootEntry& r, int floatpos) {
  return r.exact ? formatFixed(*r.exact, floatpos) : formatFixed(r.value.real(), floatpos);
}

std::string render(const RootList& list, int floatpos, bool latex) {
  std::string out = "[";
  bool first = true;
  for (const auto& r : list.roots) {
    std::string text;
    if (r.value.imag() == 0.0) {
      text = fixedOf(r, floatpos);
    } else {
      text = "(" + formatFixed(r.value.real(), floatpos) + (r.value.imag() < 0 ? "-" : "+") +
             formatFixed(std::fabs(r.value.imag()), floatpos) + (latex ? "\\mathbf{i}" : "\\i") + ")";
    }
    for (unsigned m = 0; m < r.multiplicity; ++m) {
      if (!first) out += ",";
      out += text;
      first = false;
    }
  }
  return out + "]";
}

std::vector<unsigned long> divisorsOf(const mpz_class& n) {
  mpz_class a = abs(n);
  if (a > 1000000) return {1, a.fits_ulong_p() ? a.get_ui() : 1UL};
  unsigned long v = a.get_ui();
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    if (d * d != v) out.push_back(v / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

unsigned RootList::totalMultiplicity() const {
  unsigned total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

std::string RootList::toMathpar(int floatpos) const { return render(*this, floatpos, false); }
std::string RootList::toLatex(int floatpos) const { return render(*this, floatpos, true); }

std::vector<Cx> durandKerner(const std::vector<Cx>& coeffs, const CancelToken& cancel) {
  std::vector<Cx> a = coeffs;
  while (!a.empty() && a.back() == 0.0) a.pop_back();
  if (a.size() < 2) return {};
  const std::size_t n = a.size() - 1;
  const Cx lead = a.back();
  for (auto& c : a) c /= lead;
  if (n == 1) return {-a[0]};

  double radius = 0.0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(a[k]));
  radius += 1.0;

  std::vector<Cx> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);

  bool converged = false;
  for (int sweep = 0; sweep < 1000 && !converged; ++sweep) {
    cancel.check();
    double maxUpdate = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Cx den = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) den *= z[k] - z[j];
      if (den == 0.0) den = 1e-300;
      Cx w = horner(a, z[k]) / den;
      z[k] -= w;
      maxUpdate = std::max(maxUpdate, std::abs(w));
    }
    if (maxUpdate < 1e-14 * radius) {
      converged = true;
      break;
    }
    converged = std::all_of(z.begin(), z.end(), [&](Cx r) {
      return std::abs(horner(a, r)) <= 64.0 * std::numeric_limits<double>::epsilon() * roundingScale(a, r);
    });
  }
  if (!converged) fail(ErrorCode::NonConvergence, "root iteration did not converge within 1000 sweeps");
  for (auto& r : z) polish(a, r);
  if (hasRealCoefficients(a)) enforceConjugateSymmetry(a, z);
  return z;
}

std::vector<RootEntry> squareFreeRoots(const uni::QPoly& input, const CancelToken& cancel) {
  uni::QPoly p = uni::monic(input);
  std::vector<RootEntry> out;
  if (uni::degree(p) < 1) return out;
  if (uni::degree(p) == 1) {
    mpq_class r = -p[0];
    out.push_back({Cx(r.get_d(), 0.0), 1, r});
    return out;
  }
  std::vector<Cx> numeric = durandKerner(uni::toComplex(p), cancel);

  mpz_class denLcm = 1;
  for (const auto& c : p) mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<unsigned long> divisors = divisorsOf(denLcm);  // leading coefficient of the integer form

  std::vector<mpq_class> found;
  for (Cx z : numeric) {
    RootEntry entry{z, 1, std::nullopt};
    if (z.imag() == 0.0) {
      for (unsigned long d : divisors) {
        double scaled = z.real() * static_cast<double>(d);
        if (std::fabs(scaled) > 1e15) continue;
        mpq_class q(mpz_class(static_cast<long>(std::llround(scaled))), mpz_class(d));
        q.canonicalize();
        if (std::fabs(q.get_d() - z.real()) > 1e-6 * std::max(1.0, std::fabs(z.real()))) continue;
        if (std::find(found.begin(), found.end(), q) != found.end()) continue;
        if (uni::evaluate(p, q) == 0) {
          found.push_back(q);
          entry.exact = q;
          entry.value = Cx(q.get_d(), 0.0);
          break;
        }
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

void sortRoots(std::vector<RootEntry>& roots) {
  std::stable_sort(roots.begin(), roots.end(), [](const RootEntry& a, const RootEntry& b) {
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() > b.value.imag();
  });
}

RootList solveUnivariate(const Polynomial& p, const CancelToken& cancel) {
  if (p.isZero()) fail(ErrorCode::ZeroPolynomial, "the zero polynomial has every number as a root");
  auto used = p.variablesUsed();
  if (used.size() > 1) fail(ErrorCode::NotUnivariate, "equation involves more than one variable");
  RootList result;
  if (used.empty()) return result;
  std::vector<Scalar> coeffs = p.univariateCoefficients(used.front());

  std::vector<Cx> numeric;
  numeric.reserve(coeffs.size());
  for (const auto& c : coeffs) numeric.push_back(c.toComplex());

  if (hasRealCoefficients(numeric)) {
    uni::QPoly q;
    for (const auto& c : coeffs) q.push_back(c.isExact() ? c.toRational() : rationalFromDouble(c.toComplex().real()));
    for (auto& [factor, mult] : uni::squareFree(q)) {
      for (auto& entry : squareFreeRoots(factor, cancel)) {
        entry.multiplicity = mult;
        result.roots.push_back(std::move(entry));
      }
    }
  } else {
    for (Cx z : durandKerner(numeric, cancel)) {
      auto near = std::find_if(result.roots.begin(), result.roots.end(), [&](const RootEntry& r) {
        return std::abs(r.value - z) < 1e-6 * std::max(1.0, std::abs(z));
      });
      if (near == result.roots.end()) {
        result.roots.push_back({z, 1, std::nullopt});
      } else {
        near->value = (near->value * static_cast<double>(near->multiplicity) + z) /
                      static_cast<double>(near->multiplicity + 1);
        ++near->multiplicity;
      }
    }
  }
  sortRoots(result.roots);
  return result;
}

}  // namespace mathpar
