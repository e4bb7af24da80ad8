#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mathpar/error.hpp"

namespace mathpar {

struct AstNode;
using AstPtr = std::shared_ptr<const AstNode>;

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class RelOp { Eq, Le, Ge, Lt, Gt };

struct NumberLit {
  std::string text;  // exact decimal literal, interpreted per active space
};
struct VarRef {
  std::string name;
};
struct Assign {
  std::string target;
  AstPtr value;
};
struct BinOp {
  BinaryOp op;
  AstPtr lhs;
  AstPtr rhs;
};
struct Neg {
  AstPtr operand;
};
struct Call {
  std::string name;  // without the leading backslash
  std::vector<AstPtr> args;
  std::optional<std::string> differential;  // `\int(f) d x`
};
struct ListLit {
  std::vector<AstPtr> elements;
};
struct Relation {
  RelOp op;
  AstPtr lhs;
  AstPtr rhs;
};
struct SpaceDecl {
  std::string algebra;
  std::vector<std::string> variables;
};
struct ConfigDecl {
  std::string key;  // currently only FLOATPOS
  long value = 0;
};
struct TextComment {
  std::string text;
};

struct AstNode {
  using Variant = std::variant<NumberLit, VarRef, Assign, BinOp, Neg, Call, ListLit, Relation,
                               SpaceDecl, ConfigDecl, TextComment>;
  Variant node;
  SourcePos pos;
};

struct Program {
  std::vector<AstPtr> statements;
};

template <class T>
AstPtr makeNode(T value, SourcePos pos = {}) {
  return std::make_shared<const AstNode>(AstNode{std::move(value), pos});
}

/// Equality of tree shape and payloads; source positions are ignored.
bool structurallyEqual(const AstNode& a, const AstNode& b);
bool structurallyEqual(const Program& a, const Program& b);

// --- command table ---------------------------------------------------------

enum class CommandKind {
  Function,  // must be followed by a parenthesized argument list
  Constant,  // \infty, \pi, \i, Greek letters
  Relation,  // \le, \ge, ...
};

/// Looks up a backslash command (name without the backslash).
std::optional<CommandKind> lookupCommand(std::string_view name);

/// Capitalized backslash names that are not registered commands denote
/// noncommutative symbols: accepted by the parser, rejected by evaluation.
bool isNoncommutativeSymbol(std::string_view name);

std::string_view binaryOpSymbol(BinaryOp op) noexcept;
std::string_view relOpSymbol(RelOp op) noexcept;

}  // namespace mathpar
