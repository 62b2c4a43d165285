#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polycontact::cli {

/// Byte range in the source text, with 1-based line/column of its first byte.
struct Span {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Lexical, name-resolution, grammar or evaluation failure located in the source.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, Span span);
  const Span& span() const { return span_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  Span span_;
};

class EvalError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

enum class TokenKind {
  number,  // 12 or 3/4
  ident,
  frame,   // @x0; text holds the coordinate name
  plus,
  minus,
  star,
  caret,
  lparen,
  rparen,
  lbracket,
  rbracket,
  comma,
  end,
};

const char* describe(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  Span span;
};

std::vector<Token> tokenize(std::string_view source);

/// Span covering [offset, offset + length) of `source`.
Span make_span(std::string_view source, std::size_t offset, std::size_t length);

/// "line:col: message" followed by the offending line and a caret marker.
std::string format_diagnostic(std::string_view source, const SyntaxError& error);

}  // namespace polycontact::cli
