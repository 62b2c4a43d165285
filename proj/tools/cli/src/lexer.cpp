#include "polycontact/cli/lexer.hpp"

#include <algorithm>
#include <cctype>

namespace polycontact::cli {

SyntaxError::SyntaxError(const std::string& message, Span span)
    : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
      message_(message),
      span_(span) {}

const char* describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::number: return "number";
    case TokenKind::ident: return "identifier";
    case TokenKind::frame: return "frame field";
    case TokenKind::plus: return "'+'";
    case TokenKind::minus: return "'-'";
    case TokenKind::star: return "'*'";
    case TokenKind::caret: return "'^'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::lbracket: return "'['";
    case TokenKind::rbracket: return "']'";
    case TokenKind::comma: return "','";
    case TokenKind::end: return "end of input";
  }
  return "token";
}

Span make_span(std::string_view source, std::size_t offset, std::size_t length) {
  Span s{offset, length, 1, 1};
  for (std::size_t i = 0; i < offset && i < source.size(); ++i) {
    if (source[i] == '\n') {
      ++s.line;
      s.column = 1;
    } else {
      ++s.column;
    }
  }
  return s;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](TokenKind k, std::size_t start, std::string text) {
    out.push_back({k, std::move(text), make_span(src, start, i - start)});
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (digit(c)) {
      while (i < src.size() && digit(src[i])) ++i;
      // "a/b" is one rational literal; there is no division operator.
      if (i < src.size() && src[i] == '/') {
        ++i;
        if (i >= src.size() || !digit(src[i])) {
          throw SyntaxError("expected a denominator after '/'", make_span(src, start, i - start));
        }
        while (i < src.size() && digit(src[i])) ++i;
      }
      push(TokenKind::number, start, std::string(src.substr(start, i - start)));
      continue;
    }
    if (ident_start(c)) {
      while (i < src.size() && ident_char(src[i])) ++i;
      push(TokenKind::ident, start, std::string(src.substr(start, i - start)));
      continue;
    }
    if (c == '@') {
      ++i;
      if (i >= src.size() || !ident_start(src[i])) {
        throw SyntaxError("expected a coordinate name after '@'", make_span(src, start, 1));
      }
      while (i < src.size() && ident_char(src[i])) ++i;
      push(TokenKind::frame, start, std::string(src.substr(start + 1, i - start - 1)));
      continue;
    }
    TokenKind k;
    switch (c) {
      case '+': k = TokenKind::plus; break;
      case '-': k = TokenKind::minus; break;
      case '*': k = TokenKind::star; break;
      case '^': k = TokenKind::caret; break;
      case '(': k = TokenKind::lparen; break;
      case ')': k = TokenKind::rparen; break;
      case '[': k = TokenKind::lbracket; break;
      case ']': k = TokenKind::rbracket; break;
      case ',': k = TokenKind::comma; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", make_span(src, start, 1));
    }
    ++i;
    push(k, start, std::string(1, c));
  }
  out.push_back({TokenKind::end, "", make_span(src, src.size(), 0)});
  return out;
}

std::string format_diagnostic(std::string_view source, const SyntaxError& error) {
  const Span& s = error.span();
  std::size_t begin = std::min(s.offset, source.size());
  while (begin > 0 && source[begin - 1] != '\n') --begin;
  std::size_t end = source.find('\n', begin);
  if (end == std::string_view::npos) end = source.size();
  std::string out = error.what();
  out += "\n  ";
  out += source.substr(begin, end - begin);
  out += "\n  ";
  out += std::string(s.column - 1, ' ');
  out += std::string(std::max<std::size_t>(s.length, 1), '^');
  return out;
}

}  // namespace polycontact::cli
