#pragma once

#include <span>
#include <string>
#include <string_view>

#include "mathpar/ast.hpp"
#include "mathpar/lexer.hpp"

namespace mathpar {

/// Parses a token sequence into a Program. Statements are separated by `;`
/// or by quoted text comments, which are kept as TextComment statements.
///
/// Precedence, tightest first: `^` (right associative), explicit and
/// implicit multiplication with `/` (left associative), unary minus,
/// `+`/`-`, relations, and finally statement-level `=` assignment.
/// Implicit multiplication applies when an operand is followed directly by
/// an identifier, a command, or an opening bracket, so `5x(y^3+x)` is
/// 5*x*(y^3+x) and `x^4y^3` is (x^4)*(y^3).
///
/// Throws MathparError (UnexpectedToken, UnknownCommand, UnbalancedParens)
/// positioned at the offending token.
Program parse(std::span<const Token> tokens);

/// tokenize + parse.
Program parseSource(std::string_view source);

}  // namespace mathpar
