#include "mathpar/printer.hpp"

#include <cctype>

namespace mathpar {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Binding strength used to decide where parentheses are required.
enum Prec { kAssign = 0, kRelation = 1, kAdditive = 2, kUnary = 3, kMultiplicative = 4, kPower = 5, kAtom = 6 };

int precedence(const AstNode& n) {
  if (std::holds_alternative<Assign>(n.node)) return kAssign;
  if (std::holds_alternative<Relation>(n.node)) return kRelation;
  if (std::holds_alternative<Neg>(n.node)) return kUnary;
  if (const auto* b = std::get_if<BinOp>(&n.node)) {
    switch (b->op) {
      case BinaryOp::Add:
      case BinaryOp::Sub: return kAdditive;
      case BinaryOp::Mul:
      case BinaryOp::Div: return kMultiplicative;
      case BinaryOp::Pow: return kPower;
    }
  }
  return kAtom;
}

std::string joinArgs(const std::vector<AstPtr>& args, std::string (*print)(const AstNode&)) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += print(*args[i]);
  }
  return out;
}

// --- Mathpar -----------------------------------------------------------------

std::string mp(const AstNode& n);

std::string mpWrapped(const AstNode& n, bool wrap) { return wrap ? "(" + mp(n) + ")" : mp(n); }

std::string mp(const AstNode& n) {
  return std::visit(
      Overloaded{
          [](const NumberLit& x) { return x.text; },
          [](const VarRef& x) { return x.name; },
          [](const Assign& x) { return x.target + " = " + mp(*x.value); },
          [&](const BinOp& x) {
            const int lp = precedence(*x.lhs);
            const int rp = precedence(*x.rhs);
            switch (x.op) {
              case BinaryOp::Add:
              case BinaryOp::Sub:
                return mpWrapped(*x.lhs, lp < kUnary) + std::string(binaryOpSymbol(x.op)) +
                       mpWrapped(*x.rhs, rp < kMultiplicative);
              case BinaryOp::Mul:
              case BinaryOp::Div: {
                std::string l = mpWrapped(*x.lhs, lp < kMultiplicative);
                std::string r = mpWrapped(*x.rhs, rp <= kMultiplicative);
                const bool juxtapose = x.op == BinaryOp::Mul &&
                                       std::holds_alternative<NumberLit>(x.lhs->node) && !r.empty() &&
                                       (std::isalpha(static_cast<unsigned char>(r[0])) || r[0] == '\\' ||
                                        r[0] == '(');
                return l + (juxtapose ? "" : std::string(binaryOpSymbol(x.op))) + r;
              }
              case BinaryOp::Pow:
                return mpWrapped(*x.lhs, lp < kAtom) + "^" + mpWrapped(*x.rhs, rp < kPower);
            }
            return std::string();
          },
          [](const Neg& x) { return "-" + mpWrapped(*x.operand, precedence(*x.operand) < kUnary); },
          [](const Call& x) {
            std::string out = "\\" + x.name + "(" + joinArgs(x.args, mp) + ")";
            if (x.differential) out += " d " + *x.differential;
            return out;
          },
          [](const ListLit& x) { return "[" + joinArgs(x.elements, mp) + "]"; },
          [](const Relation& x) {
            std::string op(relOpSymbol(x.op));
            return mpWrapped(*x.lhs, precedence(*x.lhs) <= kRelation) + " " + op + " " +
                   mpWrapped(*x.rhs, precedence(*x.rhs) <= kRelation);
          },
          [](const SpaceDecl& x) {
            std::string out = "SPACE = " + x.algebra + "[";
            for (std::size_t i = 0; i < x.variables.size(); ++i) out += (i ? ", " : "") + x.variables[i];
            return out + "]";
          },
          [](const ConfigDecl& x) { return x.key + " = " + std::to_string(x.value); },
          [](const TextComment& x) { return "\"" + x.text + "\""; },
      },
      n.node);
}

// A top-level `x = 1` equation would re-parse as an assignment.
std::string mpStatement(const AstNode& n) {
  if (const auto* r = std::get_if<Relation>(&n.node)) {
    if (r->op == RelOp::Eq && std::holds_alternative<VarRef>(r->lhs->node))
      return "(" + mp(*r->lhs) + ") = " + mpWrapped(*r->rhs, precedence(*r->rhs) <= kRelation);
  }
  return mp(n);
}

// --- LaTeX -------------------------------------------------------------------

std::string tex(const AstNode& n);

std::string texWrapped(const AstNode& n, bool wrap) {
  return wrap ? "\\left(" + tex(n) + "\\right)" : tex(n);
}

std::string texName(const std::string& name) {
  if (name == "\\i") return "\\mathbf{i}";
  auto us = name.find('_');
  if (us == std::string::npos || us + 1 >= name.size()) return name;
  return name.substr(0, us) + "_{" + name.substr(us + 1) + "}";
}

std::string texEscapeText(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\textbackslash{}"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '$': out += "\\$"; break;
      case '&': out += "\\&"; break;
      case '#': out += "\\#"; break;
      case '_': out += "\\_"; break;
      case '%': out += "\\%"; break;
      case '^': out += "\\^{}"; break;
      case '~': out += "\\~{}"; break;
      default: out += c;
    }
  }
  return out;
}

std::string texFunctionName(const std::string& name) {
  if (name == "sin" || name == "cos" || name == "ln" || name == "exp") return "\\" + name;
  return "\\mathrm{" + name + "}";
}

std::string tex(const AstNode& n) {
  return std::visit(
      Overloaded{
          [](const NumberLit& x) { return x.text; },
          [](const VarRef& x) { return texName(x.name); },
          [](const Assign& x) { return texName(x.target) + " = " + tex(*x.value); },
          [&](const BinOp& x) {
            const int lp = precedence(*x.lhs);
            const int rp = precedence(*x.rhs);
            switch (x.op) {
              case BinaryOp::Add:
              case BinaryOp::Sub:
                return texWrapped(*x.lhs, lp < kUnary) + std::string(binaryOpSymbol(x.op)) +
                       texWrapped(*x.rhs, rp < kMultiplicative);
              case BinaryOp::Mul: {
                std::string l = texWrapped(*x.lhs, lp < kMultiplicative);
                std::string r = texWrapped(*x.rhs, rp <= kMultiplicative);
                const bool juxtapose = std::holds_alternative<NumberLit>(x.lhs->node) && !r.empty() &&
                                       !std::isdigit(static_cast<unsigned char>(r[0]));
                return l + (juxtapose ? "" : " \\cdot ") + r;
              }
              case BinaryOp::Div: return "\\frac{" + tex(*x.lhs) + "}{" + tex(*x.rhs) + "}";
              case BinaryOp::Pow: return texWrapped(*x.lhs, lp < kAtom) + "^{" + tex(*x.rhs) + "}";
            }
            return std::string();
          },
          [](const Neg& x) { return "-" + texWrapped(*x.operand, precedence(*x.operand) < kUnary); },
          [](const Call& x) {
            if (x.name == "int") {
              std::string out = "\\int \\left(" + joinArgs(x.args, tex) + "\\right)";
              if (x.differential) out += "\\, d" + texName(*x.differential);
              return out;
            }
            return texFunctionName(x.name) + "\\left(" + joinArgs(x.args, tex) + "\\right)";
          },
          [](const ListLit& x) { return "\\left[" + joinArgs(x.elements, tex) + "\\right]"; },
          [](const Relation& x) {
            std::string op(relOpSymbol(x.op));
            return texWrapped(*x.lhs, precedence(*x.lhs) <= kRelation) + " " + op + " " +
                   texWrapped(*x.rhs, precedence(*x.rhs) <= kRelation);
          },
          [](const SpaceDecl& x) {
            std::string out = "\\mathrm{SPACE} = \\mathrm{" + x.algebra + "}\\left[";
            for (std::size_t i = 0; i < x.variables.size(); ++i)
              out += (i ? ", " : "") + texName(x.variables[i]);
            return out + "\\right]";
          },
          [](const ConfigDecl& x) { return "\\mathrm{" + x.key + "} = " + std::to_string(x.value); },
          [](const TextComment& x) { return "\\text{" + texEscapeText(x.text) + "}"; },
      },
      n.node);
}

}  // namespace

std::string printMathpar(const AstNode& node) { return mpStatement(node); }

std::string printMathpar(const Program& program) {
  std::string out;
  for (std::size_t i = 0; i < program.statements.size(); ++i) {
    if (i) out += "; ";
    out += mpStatement(*program.statements[i]);
  }
  return out;
}

std::string printLatex(const AstNode& node) { return tex(node); }

std::string printLatex(const Program& program) {
  std::string out;
  for (std::size_t i = 0; i < program.statements.size(); ++i) {
    if (i) out += ";\\quad ";
    out += tex(*program.statements[i]);
  }
  return out;
}

}  // namespace mathpar
