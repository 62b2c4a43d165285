#include <algorithm>

#include "polycontact/cli/evaluator.hpp"

namespace polycontact::cli {

namespace {

// Recursive descent, loosest first:
//   additive := unary (('+' | '-') unary)*
//   unary    := '-' unary | product
//   product  := power ('*' power)*
//   power    := primary ('^' exponent)?
class Parser {
 public:
  Parser(std::string_view src, const Workspace& ws) : src_(src), ws_(ws), toks_(tokenize(src)) {}

  NodePtr run() {
    NodePtr n = additive();
    if (peek().kind != TokenKind::end) fail_expected("an operator or end of input");
    return n;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail_expected(const std::string& what) const {
    const Token& t = peek();
    std::string got = t.kind == TokenKind::end ? "end of input" : "'" + t.text + "'";
    throw SyntaxError("expected " + what + ", found " + got, t.span);
  }

  const Token& expect(TokenKind k) {
    if (peek().kind != k) fail_expected(describe(k));
    return take();
  }

  Span cover(const Span& a, const Span& b) const {
    std::size_t end = std::max(a.offset + a.length, b.offset + b.length);
    return make_span(src_, a.offset, end - a.offset);
  }

  NodePtr node(NodeKind k, Span span, std::vector<NodePtr> kids = {}) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->span = span;
    n->children = std::move(kids);
    return n;
  }

  NodePtr binary(NodeKind k, NodePtr a, NodePtr b) {
    Span s = cover(a->span, b->span);
    std::vector<NodePtr> kids;
    kids.push_back(std::move(a));
    kids.push_back(std::move(b));
    return node(k, s, std::move(kids));
  }

  NodePtr additive() {
    NodePtr lhs = unary();
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      NodeKind k = take().kind == TokenKind::plus ? NodeKind::sum : NodeKind::difference;
      lhs = binary(k, std::move(lhs), unary());
    }
    return lhs;
  }

  NodePtr unary() {
    if (peek().kind == TokenKind::minus) {
      Span start = take().span;
      NodePtr inner = unary();
      Span s = cover(start, inner->span);
      std::vector<NodePtr> kids;
      kids.push_back(std::move(inner));
      return node(NodeKind::negate, s, std::move(kids));
    }
    return product();
  }

  NodePtr product() {
    NodePtr lhs = power();
    while (peek().kind == TokenKind::star) {
      take();
      if (peek().kind == TokenKind::minus) fail_expected("a factor (parenthesise negative factors)");
      lhs = binary(NodeKind::product, std::move(lhs), power());
    }
    return lhs;
  }

  NodePtr power() {
    NodePtr base = primary();
    if (peek().kind != TokenKind::caret) return base;
    take();
    bool paren = false;
    if (peek().kind == TokenKind::lparen) {
      take();
      paren = true;
    }
    bool negative = false;
    if (peek().kind == TokenKind::minus) {
      take();
      negative = true;
    }
    const Token& digits = peek();
    if (digits.kind != TokenKind::number || digits.text.find('/') != std::string::npos) {
      fail_expected("an integer exponent");
    }
    take();
    long e = 0;
    try {
      e = std::stol(digits.text);
    } catch (const std::exception&) {
      throw SyntaxError("exponent out of range", digits.span);
    }
    if (e > 1000) throw SyntaxError("exponent out of range", digits.span);
    Span end = digits.span;
    if (paren) end = expect(TokenKind::rparen).span;
    auto n = node(NodeKind::power, cover(base->span, end));
    n->exponent = static_cast<int>(negative ? -e : e);
    n->children.push_back(std::move(base));
    return n;
  }

  std::vector<NodePtr> arguments(std::size_t count, TokenKind close, Span& end) {
    std::vector<NodePtr> args;
    for (std::size_t k = 0; k < count; ++k) {
      if (k) expect(TokenKind::comma);
      args.push_back(additive());
    }
    end = expect(close).span;
    return args;
  }

  NodePtr call(NodeKind k, const Token& head, std::size_t arity) {
    expect(TokenKind::lparen);
    Span end;
    auto args = arguments(arity, TokenKind::rparen, end);
    return node(k, cover(head.span, end), std::move(args));
  }

  NodePtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::number: {
        take();
        auto n = node(NodeKind::number, t.span);
        const auto slash = t.text.find('/');
        mpq_class q;
        if (slash == std::string::npos) {
          q = mpq_class(mpz_class(t.text));
        } else {
          mpz_class den(t.text.substr(slash + 1));
          if (den == 0) throw SyntaxError("zero denominator", t.span);
          q = mpq_class(mpz_class(t.text.substr(0, slash)), den);
          q.canonicalize();
        }
        n->value = GaussianRational(q);
        return n;
      }
      case TokenKind::frame: {
        take();
        if (!ws_.chart().slot_of(t.text)) throw SyntaxError("unknown coordinate '" + t.text + "'", t.span);
        auto n = node(NodeKind::frame, t.span);
        n->name = t.text;
        return n;
      }
      case TokenKind::lparen: {
        take();
        NodePtr inner = additive();
        expect(TokenKind::rparen);
        return inner;
      }
      case TokenKind::lbracket: {
        take();
        Span end;
        auto args = arguments(2, TokenKind::rbracket, end);
        return node(NodeKind::bracket, cover(t.span, end), std::move(args));
      }
      case TokenKind::ident: return identifier();
      default: fail_expected("an operand");
    }
  }

  NodePtr identifier() {
    const Token& t = take();
    const bool called = peek().kind == TokenKind::lparen;
    if (called) {
      if (t.text == "exp") return call(NodeKind::exp, t, 1);
      if (t.text == "d") return call(NodeKind::exterior, t, 1);
      if (t.text == "i_") return call(NodeKind::interior, t, 2);
      if (t.text == "L_") return call(NodeKind::lie, t, 2);
    }
    if (t.text == "I") return node(NodeKind::imaginary, t.span);
    NodeKind k;
    if (ws_.has_named(t.text)) {
      k = NodeKind::named;
    } else if (ws_.chart().context()->find(t.text)) {
      k = NodeKind::generator;
    } else {
      throw SyntaxError("unknown identifier '" + t.text + "'", t.span);
    }
    auto n = node(k, t.span);
    n->name = t.text;
    return n;
  }

  std::string_view src_;
  const Workspace& ws_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

NodePtr parse_expression(std::string_view text, const Workspace& ws) { return Parser(text, ws).run(); }

}  // namespace polycontact::cli
