#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mathpar {

enum class TokenKind { Command, Identifier, Number, Operator, Punct, QuotedText };

struct Token {
  TokenKind kind;
  std::string lexeme;
  int line = 1;
  int column = 1;

  friend bool operator==(const Token&, const Token&) = default;
};

std::string_view tokenKindName(TokenKind kind) noexcept;

/// Splits ATeX source into tokens. Whitespace is dropped; a double-quoted
/// text comment becomes one QuotedText token whose lexeme keeps the quotes.
/// Throws MathparError (UnterminatedQuote, IllegalCharacter) with position.
std::vector<Token> tokenize(std::string_view source);

}  // namespace mathpar
