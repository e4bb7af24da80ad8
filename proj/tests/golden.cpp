#include "golden.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "mathpar/engine.hpp"
#include "mathpar/groebner.hpp"

namespace golden {

using mathpar::Polynomial;
using Complex = std::complex<double>;

const std::vector<Script>& exampleScripts() {
  static const std::vector<Script> scripts = {
      {"value", "SPACE = R64[x, y];\nf = \\sin(x^2 + \\tg(y^3 + x));\ng = \\value(f, [1, 2]);\n\\print(g);\n"},
      {"trig", "SPACE = R[x, y];\nf = x^2 + y^2;\ng = \\value(f, [\\sin(x), \\cos(x)]);\n\\Factor(g);\n"},
      {"calculus",
       "SPACE = Q[x];\nf = (2x^2 + 1)^3;\nl = \\int(f) d x;\ndl = \\D(l, x);\nd2l = \\D(l, x^2);\n"
       "\\print(f, l, dl, d2l);\n"},
      {"polyvalue", "SPACE = R[x, y];\nf = x^2 + 5x(y^3 + x);\ng = \\value(f, [1, 2]);\n"},
      {"quartic", "SPACE = C64[x];\nFLOATPOS = 2;\nb = \\solve(x^4 + 2x + 1 = 0);\n"},
      {"inequality", "SPACE = R[x];\nb = \\solve((x + 1)^2(x - 3)(x + 5) \\ge 0);\n"},
      {"gbasis", "SPACE = Z[x, y, z];\n\\gbasis(x^4y^3 + 2xy^2 + 3x + 1, x^3y^2 + x^2, x^4y + z^2+xy^4 + 3);\n"},
      {"nae", "SPACE = R[x, y];\n\\solveNAE(x^2 + y^2 - 4, y - x^2);\n"},
      {"tropical", "SPACE = ZMaxMult[x, y];\na = 2; b = 9;\nc = a + b; d = a b;\n\\print(c, d)\n"},
  };
  return scripts;
}

const Script& script(const std::string& name) {
  for (const auto& s : exampleScripts())
    if (s.name == name) return s;
  throw std::out_of_range("no script " + name);
}

Runner engineSession() {
  auto env = std::make_shared<mathpar::Environment>();
  return [env](const std::string& source) {
    const auto start = std::chrono::steady_clock::now();
    mathpar::ExecutionResult r = mathpar::executeSection(*env, source);
    Run run;
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& o : r.outputs) run.lines.push_back(o.mathparLine());
    for (const auto& d : r.diagnostics)
      run.errors.push_back(std::to_string(d.line) + ":" + std::to_string(d.column) + " " + d.message);
    return run;
  };
}

// --- text helpers ----------------------------------------------------------------

std::string stripSpaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::string valuePart(const std::string& line) {
  const auto eq = line.find(" = ");
  return eq == std::string::npos ? line : line.substr(eq + 3);
}

std::complex<double> parseComplex(const std::string& raw) {
  std::string t = stripSpaces(raw);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  const std::string unit = "\\i";
  if (t.size() < unit.size() || t.compare(t.size() - unit.size(), unit.size(), unit) != 0) return {std::stod(t), 0.0};
  t.erase(t.size() - unit.size());
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;)
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e') {
      split = k;
      break;
    }
  if (split == std::string::npos) return {0.0, std::stod(t)};
  return {std::stod(t.substr(0, split)), std::stod(t.substr(split))};
}

std::vector<std::string> splitList(const std::string& raw) {
  std::string t = stripSpaces(raw);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw std::invalid_argument("not a list: " + raw);
  t = t.substr(1, t.size() - 2);
  std::vector<std::string> items;
  if (t.empty()) return items;
  int depth = 0;
  std::string cur;
  for (char c : t) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  items.push_back(cur);
  return items;
}

std::vector<std::vector<Complex>> parseMatrix(const std::string& text) {
  std::vector<std::vector<Complex>> rows;
  for (const auto& row : splitList(text)) {
    std::vector<Complex> cells;
    for (const auto& cell : splitList(row)) cells.push_back(parseComplex(cell));
    rows.push_back(std::move(cells));
  }
  return rows;
}

namespace {

mathpar::Endpoint parseEndpoint(const std::string& t) {
  if (t == "-\\infty") return mathpar::Endpoint::minusInfinity();
  if (t == "\\infty" || t == "+\\infty") return mathpar::Endpoint::plusInfinity();
  const bool negative = !t.empty() && t.front() == '-';
  mpq_class v = mathpar::Scalar::fromDecimal(mathpar::ClassicalDomain::Q, negative ? t.substr(1) : t).toRational();
  return mathpar::Endpoint::exact(negative ? mpq_class(-v) : v);
}

}  // namespace

mathpar::IntervalSet parseIntervalSet(const std::string& raw) {
  mathpar::IntervalSet set;
  std::string t = stripSpaces(raw);
  if (t == "\\emptyset") return set;
  const std::string cup = "\\cup";
  std::size_t start = 0;
  while (start <= t.size()) {
    std::size_t end = t.find(cup, start);
    if (end == std::string::npos) end = t.size();
    std::string piece = t.substr(start, end - start);
    mathpar::IntervalComponent c;
    if (piece.rfind("\\{", 0) == 0) {
      c.lower = c.upper = parseEndpoint(piece.substr(2, piece.size() - 4));
      c.lowerClosed = c.upperClosed = true;
    } else {
      const auto comma = piece.find(',');
      if (comma == std::string::npos || piece.size() < 4) throw std::invalid_argument("bad interval: " + piece);
      c.lowerClosed = piece.front() == '[';
      c.upperClosed = piece.back() == ']';
      c.lower = parseEndpoint(piece.substr(1, comma - 1));
      c.upper = parseEndpoint(piece.substr(comma + 1, piece.size() - comma - 2));
    }
    set.components.push_back(c);
    start = end + cup.size();
  }
  return set;
}

// --- golden checks ---------------------------------------------------------------

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " | ") + s;
  return out.empty() ? "<none>" : out;
}

std::string describe(const Run& r) { return "lines: " + join(r.lines) + "; errors: " + join(r.errors); }

bool withinBudget(const Run& r, double budget, std::string& detail) {
  if (r.seconds < budget) return true;
  std::ostringstream os;
  os << "took " << r.seconds << " s, budget " << budget << " s";
  detail = os.str();
  return false;
}

bool componentsClose(Complex a, Complex b, double tol) {
  return std::fabs(a.real() - b.real()) <= tol && std::fabs(a.imag() - b.imag()) <= tol;
}

/// Two-decimal display values within one hundredth, compared exactly.
bool displayClose(Complex a, Complex b) {
  auto hundredths = [](double v) { return std::llround(v * 100.0); };
  return std::llabs(hundredths(a.real()) - hundredths(b.real())) <= 1 &&
         std::llabs(hundredths(a.imag()) - hundredths(b.imag())) <= 1;
}

/// Polynomial over Z[x,y,z] from Mathpar text.
Polynomial zxyz(const std::string& text) {
  mathpar::Environment env;
  auto r = mathpar::executeSection(env, "SPACE = Z[x, y, z];\np = " + text + ";");
  if (r.hasErrors()) throw std::invalid_argument("cannot parse '" + text + "': " + r.diagnostics.front().message);
  return env.bindings.at("p").value.as<Polynomial>();
}

Check g1(const SessionFactory& factory) {
  Check c{"G1"};
  Run a = factory()(script("value").source);
  Run b = factory()(script("trig").source);
  const bool textOk = a.errors.empty() && b.errors.empty() && a.lines == std::vector<std::string>{"g = 0.52"} &&
                      b.lines == std::vector<std::string>{"1"};
  if (!textOk) c.detail = "value script " + describe(a) + "; trig script " + describe(b);
  c.pass = textOk && withinBudget(a, 1.0, c.detail) && withinBudget(b, 1.0, c.detail);
  return c;
}

Check g2(const SessionFactory& factory) {
  Check c{"G2"};
  Run r = factory()(script("calculus").source);
  const std::vector<std::string> expected = {"f = 8x^6+12x^4+6x^2+1", "l = (8/7)x^7+(12/5)x^5+2x^3+x",
                                             "dl = 8x^6+12x^4+6x^2+1", "d2l = 48x^5+48x^3+12x"};
  const bool textOk = r.errors.empty() && r.lines == expected;
  if (!textOk) c.detail = describe(r);
  c.pass = textOk && withinBudget(r, 1.0, c.detail);
  return c;
}

Check g3(const SessionFactory& factory) {
  Check c{"G3"};
  Run r = factory()(script("polyvalue").source);
  const bool textOk = r.errors.empty() && r.lines.size() == 1 && stripSpaces(r.lines[0]) == "g=46.00";
  if (!textOk) c.detail = describe(r);
  c.pass = textOk && withinBudget(r, 1.0, c.detail);
  return c;
}

Check g4(const SessionFactory& factory) {
  Check c{"G4"};
  Runner session = factory();
  Run r = session(script("quartic").source);
  if (!r.errors.empty() || r.lines.size() != 1) {
    c.detail = describe(r);
    return c;
  }
  std::vector<Complex> shown;
  for (const auto& item : splitList(valuePart(r.lines[0]))) shown.push_back(parseComplex(item));
  const std::vector<Complex> reference = {{0.77, 1.12}, {0.77, -1.12}, {-0.54, 0.0}, {-1.0, 0.0}};
  if (!matchMultiset(shown, reference, displayClose)) {
    c.detail = "displayed roots " + r.lines[0] + " differ from the expected multiset";
    return c;
  }
  Run precise = session("FLOATPOS = 12;\n\\print(b);");
  if (!precise.errors.empty() || precise.lines.size() != 1) {
    c.detail = "high precision rerun: " + describe(precise);
    return c;
  }
  double worst = 0.0;
  std::size_t count = 0;
  for (const auto& item : splitList(valuePart(precise.lines[0]))) {
    Complex z = parseComplex(item);
    worst = std::max(worst, std::abs(z * z * z * z + 2.0 * z + 1.0));
    ++count;
  }
  if (count != 4 || worst >= 1e-8) {
    std::ostringstream os;
    os << count << " roots, worst residual " << worst;
    c.detail = os.str();
    return c;
  }
  c.pass = withinBudget(r, 1.0, c.detail);
  return c;
}

Check g5(const SessionFactory& factory) {
  Check c{"G5"};
  Run r = factory()(script("inequality").source);
  if (!r.errors.empty() || r.lines.size() != 1) {
    c.detail = describe(r);
    return c;
  }
  using mathpar::Endpoint;
  mathpar::IntervalSet expected;
  expected.components = {
      {Endpoint::minusInfinity(), Endpoint::exact(-5), false, true},
      {Endpoint::exact(-1), Endpoint::exact(-1), true, true},
      {Endpoint::exact(3), Endpoint::plusInfinity(), true, false},
  };
  mathpar::IntervalSet actual;
  try {
    actual = parseIntervalSet(valuePart(r.lines[0]));
  } catch (const std::exception& e) {
    c.detail = std::string("unparsable set: ") + e.what();
    return c;
  }
  if (!(actual == expected) || valuePart(r.lines[0]) != "(-\\infty, -5]\\cup\\{-1\\}\\cup[3, \\infty)") {
    c.detail = "got " + r.lines[0];
    return c;
  }
  c.pass = withinBudget(r, 1.0, c.detail);
  return c;
}

Check g6(const SessionFactory& factory) {
  Check c{"G6"};
  Run r = factory()(script("gbasis").source);
  if (!r.errors.empty() || r.lines.size() != 1) {
    c.detail = describe(r);
    return c;
  }
  try {
    std::vector<Polynomial> basis;
    for (const auto& item : splitList(valuePart(r.lines[0])))
      basis.push_back(mathpar::normalizeGenerator(zxyz(item), mathpar::ClassicalDomain::Z));
    std::vector<Polynomial> reference;
    for (const char* g : {"z^2-x^4+3x^2-10x+9", "y-9x^4-3x^3-x^2-81x+27", "x^5+9x^2-6x+1"})
      reference.push_back(mathpar::normalizeGenerator(zxyz(g), mathpar::ClassicalDomain::Z));
    if (!matchMultiset(basis, reference, [](const Polynomial& a, const Polynomial& b) { return a == b; })) {
      c.detail = "basis differs: " + r.lines[0];
      return c;
    }
    std::vector<Polynomial> q;
    for (const auto& g : basis) q.push_back(mathpar::toRationalRing(g));
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = i + 1; j < q.size(); ++j)
        if (!mathpar::reduce(mathpar::sPolynomial(q[i], q[j]), q).isZero()) {
          c.detail = "an S-polynomial does not reduce to zero";
          return c;
        }
    for (const char* f : {"x^4y^3 + 2xy^2 + 3x + 1", "x^3y^2 + x^2", "x^4y + z^2+xy^4 + 3"})
      if (!mathpar::reduce(mathpar::toRationalRing(zxyz(f)), q).isZero()) {
        c.detail = std::string("input ") + f + " does not reduce to zero";
        return c;
      }
  } catch (const std::exception& e) {
    c.detail = e.what();
    return c;
  }
  c.pass = withinBudget(r, 30.0, c.detail);
  return c;
}

Check g7(const SessionFactory& factory) {
  Check c{"G7"};
  Runner session = factory();
  Run r = session(script("nae").source);
  if (!r.errors.empty() || r.lines.size() != 1) {
    c.detail = describe(r);
    return c;
  }
  using Row = std::vector<Complex>;
  const std::vector<Row> reference = {{{0, 1.60}, {-2.56, 0}}, {{1.24, 0}, {1.56, 0}}, {{0, -1.60}, {-2.56, 0}},
                                  {{-1.24, 0}, {1.56, 0}}};
  auto rowsMatch = [](auto close) {
    return [close](const Row& a, const Row& b) {
      if (a.size() != b.size()) return false;
      for (std::size_t k = 0; k < a.size(); ++k)
        if (!close(a[k], b[k])) return false;
      return true;
    };
  };
  if (!matchMultiset(parseMatrix(valuePart(r.lines[0])), reference, rowsMatch(displayClose))) {
    c.detail = "displayed matrix " + r.lines[0] + " differs from the expected rows";
    return c;
  }
  Run precise = session("FLOATPOS = 12;\n\\solveNAE(x^2 + y^2 - 4, y - x^2);");
  if (!precise.errors.empty() || precise.lines.size() != 1) {
    c.detail = "high precision rerun: " + describe(precise);
    return c;
  }
  auto rows = parseMatrix(valuePart(precise.lines[0]));
  if (!matchMultiset(rows, reference, rowsMatch([](Complex a, Complex b) { return componentsClose(a, b, 0.01); }))) {
    c.detail = "unrounded rows " + precise.lines[0] + " differ from the expected rows";
    return c;
  }
  double worst = 0.0;
  for (const auto& row : rows) {
    const Complex x = row[0], y = row[1];
    worst = std::max({worst, std::abs(x * x + y * y - 4.0), std::abs(y - x * x)});
  }
  if (worst >= 1e-6) {
    std::ostringstream os;
    os << "worst residual " << worst;
    c.detail = os.str();
    return c;
  }
  c.pass = withinBudget(r, 10.0, c.detail);
  return c;
}

Check g8(const SessionFactory& factory) {
  Check c{"G8"};
  Run r = factory()(script("tropical").source);
  std::vector<std::string> compact;
  for (const auto& l : r.lines) compact.push_back(stripSpaces(l));
  const bool textOk = r.errors.empty() && compact == std::vector<std::string>{"c=9", "d=18"};
  if (!textOk) c.detail = describe(r);
  c.pass = textOk && withinBudget(r, 1.0, c.detail);
  return c;
}

}  // namespace

std::vector<Check> runGoldenSuite(const SessionFactory& factory) {
  std::vector<Check> out;
  for (auto fn : {g1, g2, g3, g4, g5, g6, g7, g8}) {
    try {
      out.push_back(fn(factory));
    } catch (const std::exception& e) {
      out.push_back({"G" + std::to_string(out.size() + 1), false, std::string("exception: ") + e.what()});
    }
  }
  return out;
}

}  // namespace golden
