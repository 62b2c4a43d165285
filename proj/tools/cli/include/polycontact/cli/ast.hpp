#pragma once

#include <memory>
#include <string>
#include <vector>

#include "polycontact/cli/lexer.hpp"
#include "polycontact/gaussian_rational.hpp"

namespace polycontact::cli {

enum class NodeKind {
  number,     // non-negative rational literal
  imaginary,  // I
  generator,  // chart generator, e.g. th1 or dx0
  frame,      // @x0
  named,      // alpha, Q1, ...
  sum,
  difference,
  negate,
  product,
  power,
  exp,
  exterior,  // d(e)
  interior,  // i_(X, w)
  lie,       // L_(X, w)
  bracket,   // [X, Y]
};

const char* to_string(NodeKind kind);

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
  NodeKind kind = NodeKind::number;
  Span span;
  std::string name;        // generator, frame and named nodes
  GaussianRational value;  // number nodes
  int exponent = 0;        // power nodes
  std::vector<NodePtr> children;
};

/// Canonical text with the fewest parentheses that reparse to the same tree.
std::string print(const Node& node);

/// Structural equality; spans are ignored.
bool same_tree(const Node& a, const Node& b);

}  // namespace polycontact::cli
