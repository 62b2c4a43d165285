#include "polycontact/cli/ast.hpp"

namespace polycontact::cli {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::number: return "number";
    case NodeKind::imaginary: return "imaginary";
    case NodeKind::generator: return "generator";
    case NodeKind::frame: return "frame";
    case NodeKind::named: return "named";
    case NodeKind::sum: return "sum";
    case NodeKind::difference: return "difference";
    case NodeKind::negate: return "negate";
    case NodeKind::product: return "product";
    case NodeKind::power: return "power";
    case NodeKind::exp: return "exp";
    case NodeKind::exterior: return "exterior";
    case NodeKind::interior: return "interior";
    case NodeKind::lie: return "lie";
    case NodeKind::bracket: return "bracket";
  }
  return "node";
}

namespace {

// Binding strength, mirroring the parser: additive 1, unary minus 2, product 3,
// power 4, anything self-delimiting 5.
int strength(const Node& n) {
  switch (n.kind) {
    case NodeKind::sum:
    case NodeKind::difference: return 1;
    case NodeKind::negate: return 2;
    case NodeKind::product: return 3;
    case NodeKind::power: return 4;
    default: return 5;
  }
}

std::string wrap(const Node& n, int needed) {
  std::string s = print(n);
  return strength(n) < needed ? "(" + s + ")" : s;
}

}  // namespace

std::string print(const Node& n) {
  const auto& c = n.children;
  switch (n.kind) {
    case NodeKind::number: return n.value.to_string();
    case NodeKind::imaginary: return "I";
    case NodeKind::generator:
    case NodeKind::named: return n.name;
    case NodeKind::frame: return "@" + n.name;
    case NodeKind::sum: return wrap(*c[0], 1) + " + " + wrap(*c[1], 2);
    case NodeKind::difference: return wrap(*c[0], 1) + " - " + wrap(*c[1], 2);
    case NodeKind::negate: return "-" + wrap(*c[0], 2);
    case NodeKind::product: return wrap(*c[0], 3) + "*" + wrap(*c[1], 4);
    case NodeKind::power:
      return wrap(*c[0], 5) + "^" + (n.exponent < 0 ? "(" + std::to_string(n.exponent) + ")" : std::to_string(n.exponent));
    case NodeKind::exp: return "exp(" + print(*c[0]) + ")";
    case NodeKind::exterior: return "d(" + print(*c[0]) + ")";
    case NodeKind::interior: return "i_(" + print(*c[0]) + ", " + print(*c[1]) + ")";
    case NodeKind::lie: return "L_(" + print(*c[0]) + ", " + print(*c[1]) + ")";
    case NodeKind::bracket: return "[" + print(*c[0]) + ", " + print(*c[1]) + "]";
  }
  return {};
}

bool same_tree(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.name != b.name || !(a.value == b.value) || a.exponent != b.exponent ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.children.size(); ++k) {
    if (!same_tree(*a.children[k], *b.children[k])) return false;
  }
  return true;
}

}  // namespace polycontact::cli
