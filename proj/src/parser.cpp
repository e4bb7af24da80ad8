#include "mathpar/parser.hpp"

#include <charconv>

#include "mathpar/error.hpp"

namespace mathpar {

namespace {

SourcePos posOf(const Token& t) { return SourcePos{t.line, t.column}; }

std::string quoted(const Token& t) { return "'" + t.lexeme + "'"; }

class Parser {
 public:
  explicit Parser(std::span<const Token> toks) : toks_(toks) {}

  Program program() {
    Program prog;
    while (!atEnd()) {
      const Token& t = peek();
      if (isPunct(t, ";")) {
        ++i_;
        continue;
      }
      if (t.kind == TokenKind::QuotedText) {
        prog.statements.push_back(
            makeNode(TextComment{t.lexeme.substr(1, t.lexeme.size() - 2)}, posOf(t)));
        ++i_;
        continue;
      }
      prog.statements.push_back(statement());
      if (atEnd()) break;
      const Token& next = peek();
      if (isPunct(next, ";") || next.kind == TokenKind::QuotedText) continue;
      if (isCloser(next))
        throw MathparError(ErrorCode::UnbalancedParens, "unmatched " + quoted(next), posOf(next));
      throw MathparError(ErrorCode::UnexpectedToken,
                         "unexpected token " + quoted(next) + "; expected ';' between statements",
                         posOf(next));
    }
    return prog;
  }

 private:
  // --- token helpers --------------------------------------------------------

  bool atEnd() const { return i_ >= toks_.size(); }
  const Token& peek(std::size_t ahead = 0) const { return toks_[i_ + ahead]; }
  bool has(std::size_t ahead) const { return i_ + ahead < toks_.size(); }

  static bool isPunct(const Token& t, std::string_view p) {
    return t.kind == TokenKind::Punct && t.lexeme == p;
  }
  static bool isOp(const Token& t, std::string_view p) {
    return t.kind == TokenKind::Operator && t.lexeme == p;
  }
  static bool isCloser(const Token& t) {
    return isPunct(t, ")") || isPunct(t, "]") || isPunct(t, "}");
  }
  bool nextIsPunct(std::string_view p) const { return !atEnd() && isPunct(peek(), p); }
  bool nextIsOp(std::string_view p) const { return !atEnd() && isOp(peek(), p); }

  [[noreturn]] void failAtEnd(std::string_view expected) const {
    const Token& last = toks_.back();
    throw MathparError(ErrorCode::UnexpectedToken,
                       "unexpected end of input after " + quoted(last) + "; expected " +
                           std::string(expected),
                       posOf(last));
  }

  [[noreturn]] void failUnexpected(const Token& t, std::string_view expected) const {
    if (isCloser(t))
      throw MathparError(ErrorCode::UnbalancedParens, "unmatched " + quoted(t), posOf(t));
    throw MathparError(ErrorCode::UnexpectedToken,
                       "unexpected token " + quoted(t) + "; expected " + std::string(expected),
                       posOf(t));
  }

  const Token& expectIdentifier(std::string_view what) {
    if (atEnd()) failAtEnd(what);
    const Token& t = peek();
    if (t.kind != TokenKind::Identifier) failUnexpected(t, what);
    ++i_;
    return t;
  }

  void expectPunct(std::string_view p) {
    if (atEnd()) failAtEnd("'" + std::string(p) + "'");
    if (!isPunct(peek(), p)) failUnexpected(peek(), "'" + std::string(p) + "'");
    ++i_;
  }

  // Closing bracket for an opener at `open`; a missing closer is reported at
  // the opener.
  void expectCloser(const Token& open, std::string_view closer) {
    if (!atEnd() && isPunct(peek(), closer)) {
      ++i_;
      return;
    }
    if (!atEnd() && !isPunct(peek(), ";") && peek().kind != TokenKind::QuotedText && !isCloser(peek()))
      failUnexpected(peek(), "'" + std::string(closer) + "'");
    throw MathparError(ErrorCode::UnbalancedParens, "unclosed " + quoted(open), posOf(open));
  }

  // --- statements -------------------------------------------------------------

  AstPtr statement() {
    const Token& first = peek();
    if (first.kind == TokenKind::Identifier && has(1) && isOp(peek(1), "=")) {
      if (first.lexeme == "SPACE") return spaceDecl();
      if (first.lexeme == "FLOATPOS") return configDecl();
      i_ += 2;
      AstPtr value = expression();
      return makeNode(Assign{first.lexeme, std::move(value)}, posOf(first));
    }
    return expression();
  }

  AstPtr spaceDecl() {
    const Token& first = peek();
    i_ += 2;
    const Token& algebra = expectIdentifier("an algebra name such as R64 or ZMaxPlus");
    SpaceDecl decl{algebra.lexeme, {}};
    if (atEnd()) failAtEnd("'['");
    const Token& open = peek();
    expectPunct("[");
    if (!nextIsPunct("]")) {
      while (true) {
        decl.variables.push_back(expectIdentifier("a variable name").lexeme);
        if (nextIsPunct(",")) {
          ++i_;
          continue;
        }
        break;
      }
    }
    expectCloser(open, "]");
    return makeNode(std::move(decl), posOf(first));
  }

  AstPtr configDecl() {
    const Token& first = peek();
    i_ += 2;
    if (atEnd()) failAtEnd("a nonnegative integer");
    const Token& num = peek();
    long value = 0;
    const auto* b = num.lexeme.data();
    const auto* e = b + num.lexeme.size();
    if (num.kind != TokenKind::Number || std::from_chars(b, e, value).ptr != e)
      failUnexpected(num, "a nonnegative integer");
    ++i_;
    return makeNode(ConfigDecl{first.lexeme, value}, posOf(first));
  }

  // --- expressions ------------------------------------------------------------

  std::optional<RelOp> relationAhead() const {
    if (atEnd()) return std::nullopt;
    const Token& t = peek();
    if (t.kind == TokenKind::Operator) {
      if (t.lexeme == "=") return RelOp::Eq;
      if (t.lexeme == "<") return RelOp::Lt;
      if (t.lexeme == ">") return RelOp::Gt;
      if (t.lexeme == "<=") return RelOp::Le;
      if (t.lexeme == ">=") return RelOp::Ge;
    }
    if (t.kind == TokenKind::Command) {
      std::string_view n = std::string_view(t.lexeme).substr(1);
      if (n == "le" || n == "leq") return RelOp::Le;
      if (n == "ge" || n == "geq") return RelOp::Ge;
      if (n == "lt") return RelOp::Lt;
      if (n == "gt") return RelOp::Gt;
    }
    return std::nullopt;
  }

  AstPtr expression() {
    AstPtr lhs = additive();
    if (auto op = relationAhead()) {
      ++i_;
      AstPtr rhs = additive();
      if (relationAhead()) failUnexpected(peek(), "a single relation per expression");
      SourcePos pos = lhs->pos;
      return makeNode(Relation{*op, std::move(lhs), std::move(rhs)}, pos);
    }
    return lhs;
  }

  AstPtr additive() {
    AstPtr lhs = unary();
    while (nextIsOp("+") || nextIsOp("-")) {
      BinaryOp op = peek().lexeme == "+" ? BinaryOp::Add : BinaryOp::Sub;
      ++i_;
      AstPtr rhs = unary();
      SourcePos pos = lhs->pos;
      lhs = makeNode(BinOp{op, std::move(lhs), std::move(rhs)}, pos);
    }
    return lhs;
  }

  AstPtr unary() {
    if (nextIsOp("-")) {
      SourcePos pos = posOf(peek());
      ++i_;
      return makeNode(Neg{unary()}, pos);
    }
    if (nextIsOp("+")) {
      ++i_;
      return unary();
    }
    return multiplicative();
  }

  bool startsImplicitOperand() const {
    if (atEnd()) return false;
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Identifier: return true;
      case TokenKind::Command: {
        auto kind = lookupCommand(std::string_view(t.lexeme).substr(1));
        return !kind || *kind != CommandKind::Relation;
      }
      case TokenKind::Punct: return t.lexeme == "(" || t.lexeme == "{";
      default: return false;
    }
  }

  AstPtr multiplicative() {
    AstPtr lhs = power();
    while (true) {
      if (nextIsOp("*") || nextIsOp("/")) {
        BinaryOp op = peek().lexeme == "*" ? BinaryOp::Mul : BinaryOp::Div;
        ++i_;
        AstPtr rhs;
        if (nextIsOp("-")) {
          SourcePos pos = posOf(peek());
          ++i_;
          rhs = makeNode(Neg{power()}, pos);
        } else {
          rhs = power();
        }
        SourcePos pos = lhs->pos;
        lhs = makeNode(BinOp{op, std::move(lhs), std::move(rhs)}, pos);
      } else if (startsImplicitOperand()) {
        AstPtr rhs = power();
        SourcePos pos = lhs->pos;
        lhs = makeNode(BinOp{BinaryOp::Mul, std::move(lhs), std::move(rhs)}, pos);
      } else {
        return lhs;
      }
    }
  }

  AstPtr power() {
    AstPtr base = primary();
    if (nextIsOp("^")) {
      ++i_;
      AstPtr exponent = exponentOperand();
      SourcePos pos = base->pos;
      return makeNode(BinOp{BinaryOp::Pow, std::move(base), std::move(exponent)}, pos);
    }
    return base;
  }

  AstPtr exponentOperand() {
    if (nextIsOp("-")) {
      SourcePos pos = posOf(peek());
      ++i_;
      return makeNode(Neg{exponentOperand()}, pos);
    }
    return power();
  }

  std::vector<AstPtr> argumentList(const Token& open, std::string_view closer) {
    std::vector<AstPtr> args;
    if (nextIsPunct(closer)) {
      ++i_;
      return args;
    }
    while (true) {
      if (atEnd()) throw MathparError(ErrorCode::UnbalancedParens, "unclosed " + quoted(open), posOf(open));
      args.push_back(expression());
      if (nextIsPunct(",")) {
        ++i_;
        continue;
      }
      expectCloser(open, closer);
      return args;
    }
  }

  AstPtr primary() {
    if (atEnd()) failAtEnd("an operand");
    const Token& t = peek();
    const SourcePos pos = posOf(t);
    switch (t.kind) {
      case TokenKind::Number:
        ++i_;
        return makeNode(NumberLit{t.lexeme}, pos);
      case TokenKind::Identifier:
        ++i_;
        return makeNode(VarRef{t.lexeme}, pos);
      case TokenKind::Command:
        return command();
      case TokenKind::Punct:
        if (t.lexeme == "(" || t.lexeme == "{") {
          ++i_;
          if (atEnd()) throw MathparError(ErrorCode::UnbalancedParens, "unclosed " + quoted(t), pos);
          AstPtr inner = expression();
          expectCloser(t, t.lexeme == "(" ? ")" : "}");
          return inner;
        }
        if (t.lexeme == "[") {
          ++i_;
          return makeNode(ListLit{argumentList(t, "]")}, pos);
        }
        break;
      default:
        break;
    }
    failUnexpected(t, "an operand");
  }

  AstPtr command() {
    const Token& t = peek();
    const SourcePos pos = posOf(t);
    const std::string name = t.lexeme.substr(1);
    auto kind = lookupCommand(name);
    if (!kind) {
      if (isNoncommutativeSymbol(name)) {
        ++i_;
        return makeNode(VarRef{t.lexeme}, pos);
      }
      throw MathparError(ErrorCode::UnknownCommand, "unknown command " + quoted(t), pos);
    }
    if (*kind == CommandKind::Constant) {
      ++i_;
      return makeNode(VarRef{t.lexeme}, pos);
    }
    if (*kind == CommandKind::Relation) failUnexpected(t, "an operand");
    ++i_;
    if (atEnd() || !isPunct(peek(), "("))
      throw MathparError(ErrorCode::UnexpectedToken,
                         "command " + quoted(t) + " requires a parenthesized argument list", pos);
    const Token& open = peek();
    ++i_;
    Call call{name, argumentList(open, ")"), std::nullopt};
    if (name == "int") call.differential = differentialSuffix();
    return makeNode(std::move(call), pos);
  }

  // `d x` (or `dx`) following \int(...).
  std::optional<std::string> differentialSuffix() {
    if (atEnd() || peek().kind != TokenKind::Identifier) return std::nullopt;
    const std::string& lex = peek().lexeme;
    if (lex == "d" && has(1) && peek(1).kind == TokenKind::Identifier) {
      std::string var = peek(1).lexeme;
      i_ += 2;
      return var;
    }
    if (lex.size() >= 2 && lex[0] == 'd') {
      ++i_;
      return lex.substr(1);
    }
    return std::nullopt;
  }

  std::span<const Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Program parse(std::span<const Token> tokens) { return Parser(tokens).program(); }

Program parseSource(std::string_view source) {
  auto tokens = tokenize(source);
  return parse(tokens);
}

}  // namespace mathpar
