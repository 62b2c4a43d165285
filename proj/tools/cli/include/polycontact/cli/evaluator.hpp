#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polycontact/chart.hpp"
#include "polycontact/cli/ast.hpp"
#include "polycontact/super_poly.hpp"
#include "polycontact/vector_field.hpp"

namespace polycontact::cli {

// Vector fields and vector-valued forms share one leg representation; which one is
// meant follows from the operator slot a value lands in.
using Value = std::variant<SuperPoly, VectorValuedForm>;

/// Zero compares equal to zero whatever its shape.
bool same_value(const Value& a, const Value& b);
std::string render(const Value& v, bool latex = false);

/// The chart expressions live on (x0..x3, th1, th2, thb1, thb2, l, r with r invertible,
/// plus their differentials) and the named objects built over it.
class Workspace {
 public:
  Workspace();
  static const Workspace& shared();

  const Chart& chart() const { return chart_; }
  bool has_named(std::string_view name) const;
  const Value& named(std::string_view name) const;
  /// Names in display order.
  const std::vector<std::string>& named_order() const { return order_; }

 private:
  void add(std::string name, Value v);

  Chart chart_;
  std::map<std::string, Value, std::less<>> named_;
  std::vector<std::string> order_;
};

NodePtr parse_expression(std::string_view text, const Workspace& ws);
Value evaluate(const Node& node, const Workspace& ws);
Value evaluate(std::string_view text, const Workspace& ws);

}  // namespace polycontact::cli
