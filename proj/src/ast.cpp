#include "mathpar/ast.hpp"

#include <array>
#include <cctype>

namespace mathpar {

namespace {

bool eqPtr(const AstPtr& a, const AstPtr& b) {
  if (!a || !b) return a == b;
  return structurallyEqual(*a, *b);
}

bool eqList(const std::vector<AstPtr>& a, const std::vector<AstPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!eqPtr(a[i], b[i])) return false;
  return true;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::array kFunctions = {
    "value", "Factor", "int", "D", "solve", "gbasis", "solveNAE", "solveLAETropic",
    "solveLAITropic", "BellmanEquation", "searchLeastDistances", "findTheShortestPath",
    "print", "prints", "plot", "sin", "cos", "tg", "ctg", "ln", "exp",
};

constexpr std::array kConstants = {
    "infty", "pi", "i",
    "alpha", "beta", "gamma", "delta", "epsilon", "varepsilon", "zeta", "eta", "theta",
    "vartheta", "iota", "kappa", "lambda", "mu", "nu", "xi", "rho", "varrho", "sigma",
    "tau", "upsilon", "phi", "varphi", "chi", "psi", "omega",
    "Gamma", "Delta", "Theta", "Lambda", "Xi", "Pi", "Sigma", "Upsilon", "Phi", "Psi", "Omega",
};

constexpr std::array kRelations = {"le", "ge", "leq", "geq", "lt", "gt"};

}  // namespace

bool structurallyEqual(const AstNode& a, const AstNode& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      Overloaded{
          [&](const NumberLit& x) { return x.text == std::get<NumberLit>(b.node).text; },
          [&](const VarRef& x) { return x.name == std::get<VarRef>(b.node).name; },
          [&](const Assign& x) {
            const auto& y = std::get<Assign>(b.node);
            return x.target == y.target && eqPtr(x.value, y.value);
          },
          [&](const BinOp& x) {
            const auto& y = std::get<BinOp>(b.node);
            return x.op == y.op && eqPtr(x.lhs, y.lhs) && eqPtr(x.rhs, y.rhs);
          },
          [&](const Neg& x) { return eqPtr(x.operand, std::get<Neg>(b.node).operand); },
          [&](const Call& x) {
            const auto& y = std::get<Call>(b.node);
            return x.name == y.name && x.differential == y.differential && eqList(x.args, y.args);
          },
          [&](const ListLit& x) { return eqList(x.elements, std::get<ListLit>(b.node).elements); },
          [&](const Relation& x) {
            const auto& y = std::get<Relation>(b.node);
            return x.op == y.op && eqPtr(x.lhs, y.lhs) && eqPtr(x.rhs, y.rhs);
          },
          [&](const SpaceDecl& x) {
            const auto& y = std::get<SpaceDecl>(b.node);
            return x.algebra == y.algebra && x.variables == y.variables;
          },
          [&](const ConfigDecl& x) {
            const auto& y = std::get<ConfigDecl>(b.node);
            return x.key == y.key && x.value == y.value;
          },
          [&](const TextComment& x) { return x.text == std::get<TextComment>(b.node).text; },
      },
      a.node);
}

bool structurallyEqual(const Program& a, const Program& b) { return eqList(a.statements, b.statements); }

std::optional<CommandKind> lookupCommand(std::string_view name) {
  for (std::string_view f : kFunctions)
    if (f == name) return CommandKind::Function;
  for (std::string_view c : kConstants)
    if (c == name) return CommandKind::Constant;
  for (std::string_view r : kRelations)
    if (r == name) return CommandKind::Relation;
  return std::nullopt;
}

bool isNoncommutativeSymbol(std::string_view name) {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name.front())) && !lookupCommand(name);
}

std::string_view binaryOpSymbol(BinaryOp op) noexcept {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Pow: return "^";
  }
  return "?";
}

std::string_view relOpSymbol(RelOp op) noexcept {
  switch (op) {
    case RelOp::Eq: return "=";
    case RelOp::Le: return "\\le";
    case RelOp::Ge: return "\\ge";
    case RelOp::Lt: return "<";
    case RelOp::Gt: return ">";
  }
  return "?";
}

}  // namespace mathpar
