#include "mathpar/lexer.hpp"

#include <cctype>

#include "mathpar/error.hpp"

namespace mathpar {

std::string_view tokenKindName(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Command: return "Command";
    case TokenKind::Identifier: return "Identifier";
    case TokenKind::Number: return "Number";
    case TokenKind::Operator: return "Operator";
    case TokenKind::Punct: return "Punct";
    case TokenKind::QuotedText: return "QuotedText";
  }
  return "?";
}

namespace {

bool isLetter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (i_ < src_.size()) {
      const char c = src_[i_];
      if (c == '\n') {
        advance();
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      const int line = line_;
      const int col = col_;
      const std::size_t start = i_;
      if (c == '"') {
        advance();
        while (i_ < src_.size() && src_[i_] != '"') advance();
        if (i_ >= src_.size())
          throw MathparError(ErrorCode::UnterminatedQuote, "unterminated quoted text starting with '\"'",
                             SourcePos{line, col});
        advance();
        out.push_back({TokenKind::QuotedText, std::string(src_.substr(start, i_ - start)), line, col});
      } else if (c == '\\') {
        advance();
        if (i_ >= src_.size() || !isLetter(src_[i_]))
          throw MathparError(ErrorCode::IllegalCharacter, "illegal character '\\': a command name must follow",
                             SourcePos{line, col});
        while (i_ < src_.size() && isLetter(src_[i_])) advance();
        out.push_back({TokenKind::Command, std::string(src_.substr(start, i_ - start)), line, col});
      } else if (isLetter(c)) {
        while (i_ < src_.size() && (isLetter(src_[i_]) || isDigit(src_[i_]) || src_[i_] == '_')) advance();
        out.push_back({TokenKind::Identifier, std::string(src_.substr(start, i_ - start)), line, col});
      } else if (isDigit(c)) {
        while (i_ < src_.size() && isDigit(src_[i_])) advance();
        if (i_ + 1 < src_.size() && src_[i_] == '.' && isDigit(src_[i_ + 1])) {
          advance();
          while (i_ < src_.size() && isDigit(src_[i_])) advance();
        }
        out.push_back({TokenKind::Number, std::string(src_.substr(start, i_ - start)), line, col});
      } else if (c == '<' || c == '>') {
        advance();
        if (i_ < src_.size() && src_[i_] == '=') advance();
        out.push_back({TokenKind::Operator, std::string(src_.substr(start, i_ - start)), line, col});
      } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '=') {
        advance();
        out.push_back({TokenKind::Operator, std::string(1, c), line, col});
      } else if (c == '(' || c == ')' || c == '[' || c == ']' || c == '{' || c == '}' || c == ',' ||
                 c == ';') {
        advance();
        out.push_back({TokenKind::Punct, std::string(1, c), line, col});
      } else {
        std::string shown = (static_cast<unsigned char>(c) < 0x80) ? std::string(1, c)
                                                                   : std::string("non-ASCII byte");
        throw MathparError(ErrorCode::IllegalCharacter, "illegal character '" + shown + "'",
                           SourcePos{line, col});
      }
    }
    return out;
  }

 private:
  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace mathpar
