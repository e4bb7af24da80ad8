#include "mathpar/univariate.hpp"

#include "mathpar/error.hpp"

namespace mathpar::uni {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly derivative(const QPoly& p) {
  QPoly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<unsigned long>(k));
  trim(out);
  return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) fail(ErrorCode::DivisionByZero, "division by the zero polynomial");
  QPoly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {{}, rem};
  QPoly quot(rem.size() - b.size() + 1);
  const mpq_class& lead = b.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpq_class c = rem[k + b.size() - 1] / lead;
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
  }
  rem.resize(b.size() - 1);
  trim(rem);
  trim(quot);
  return {quot, rem};
}

QPoly monic(QPoly p) {
  trim(p);
  if (p.empty()) return p;
  mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

mpq_class evaluate(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

std::vector<std::pair<QPoly, unsigned>> squareFree(const QPoly& input) {
  std::vector<std::pair<QPoly, unsigned>> out;
  QPoly p = monic(input);
  if (degree(p) < 1) return out;
  // Yun's algorithm.
  QPoly dp = derivative(p);
  QPoly a = gcd(p, dp);
  QPoly b = divmod(p, a).first;
  QPoly c = divmod(dp, a).first;
  QPoly d = c;
  {
    QPoly db = derivative(b);
    for (std::size_t k = 0; k < db.size(); ++k) {
      if (k < d.size()) d[k] -= db[k];
      else d.push_back(-db[k]);
    }
    trim(d);
  }
  for (unsigned k = 1; degree(b) >= 1; ++k) {
    QPoly f = gcd(b, d);
    if (degree(f) >= 1) out.emplace_back(f, k);
    b = divmod(b, f).first;
    c = divmod(d, f).first;
    QPoly db = derivative(b);
    d = c;
    for (std::size_t j = 0; j < db.size(); ++j) {
      if (j < d.size()) d[j] -= db[j];
      else d.push_back(-db[j]);
    }
    trim(d);
  }
  return out;
}

std::vector<std::complex<double>> toComplex(const QPoly& p) {
  std::vector<std::complex<double>> out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c.get_d(), 0.0);
  return out;
}

}  // namespace mathpar::uni
