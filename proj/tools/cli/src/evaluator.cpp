#include "polycontact/cli/evaluator.hpp"

#include "polycontact/calculus.hpp"
#include "polycontact/errors.hpp"
#include "polycontact/polysymplectic.hpp"
#include "polycontact/render.hpp"
#include "polycontact/susy.hpp"

namespace polycontact::cli {

namespace {

Chart build_chart() {
  Chart::Builder b;
  for (const char* x : {"x0", "x1", "x2", "x3"}) b.base(x, Parity::even);
  for (const char* t : {"th1", "th2", "thb1", "thb2"}) b.base(t, Parity::odd);
  b.base("l", Parity::even);
  b.base("r", Parity::even, true);
  return std::move(b).build();
}

VectorValuedForm as_legs(const VectorField& x) { return {x.chart(), x.components(), x.parity()}; }
VectorField as_field(const VectorValuedForm& f) { return {f.chart(), f.components(), f.parity()}; }

bool is_zero(const Value& v) {
  return std::visit([](const auto& x) { return x.is_zero(); }, v);
}

}  // namespace

bool same_value(const Value& a, const Value& b) {
  if (is_zero(a) || is_zero(b)) return is_zero(a) && is_zero(b);
  if (a.index() != b.index()) return false;
  if (const auto* p = std::get_if<SuperPoly>(&a)) return *p == std::get<SuperPoly>(b);
  return std::get<VectorValuedForm>(a) == std::get<VectorValuedForm>(b);
}

std::string render(const Value& v, bool latex) {
  return std::visit([latex](const auto& x) { return latex ? render_latex(x) : render_plain(x); }, v);
}

Workspace::Workspace() : chart_(build_chart()) {
  const VectorValuedForm alpha = polycontact_form(chart_);
  add("alpha", alpha);
  add("dalpha", exterior_derivative(alpha));
  add("omega", transport(symplectic_form(), chart_));
  add("varpi", transport(cone_form(), chart_));
  const SusyGenerators g = build_generators(chart_);
  for (int a = 0; a < 2; ++a) add("Q" + std::to_string(a + 1), as_legs(g.Q[a]));
  for (int a = 0; a < 2; ++a) add("Qb" + std::to_string(a + 1), as_legs(g.Qbar[a]));
  for (int a = 0; a < 2; ++a) add("D" + std::to_string(a + 1), as_legs(g.D[a]));
  for (int a = 0; a < 2; ++a) add("Db" + std::to_string(a + 1), as_legs(g.Dbar[a]));
  for (int mu = 0; mu < 4; ++mu) add("P" + std::to_string(mu), as_legs(g.P[mu]));
  add("R", as_legs(g.R));
}

const Workspace& Workspace::shared() {
  static const Workspace ws;
  return ws;
}

void Workspace::add(std::string name, Value v) {
  order_.push_back(name);
  named_.emplace(std::move(name), std::move(v));
}

bool Workspace::has_named(std::string_view name) const { return named_.find(name) != named_.end(); }

const Value& Workspace::named(std::string_view name) const {
  auto it = named_.find(name);
  if (it == named_.end()) throw UnknownGenerator("no named object '" + std::string(name) + "'");
  return it->second;
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const Workspace& ws) : ws_(ws), chart_(ws.chart()) {}

  Value eval(const Node& n) {
    try {
      return dispatch(n);
    } catch (const EvalError&) {
      throw;
    } catch (const AlgebraError& e) {
      throw EvalError(std::string(to_string(n.kind)) + ": " + e.what(), n.span);
    }
  }

 private:
  const SuperPoly& scalar(const Value& v, const Node& at, const char* role) {
    if (const auto* p = std::get_if<SuperPoly>(&v)) return *p;
    throw EvalError(std::string(role) + " must be a function, got a vector-valued object", at.span);
  }

  // A function that happens to be zero is accepted as the zero leg object.
  VectorValuedForm legs(const Value& v, const Node& at, const char* role) {
    if (const auto* f = std::get_if<VectorValuedForm>(&v)) return *f;
    if (std::get<SuperPoly>(v).is_zero()) return {chart_, Parity::even};
    throw EvalError(std::string(role) + " must be a vector field, got a function", at.span);
  }

  Value dispatch(const Node& n) {
    const auto& c = n.children;
    switch (n.kind) {
      case NodeKind::number: return chart_.constant(n.value);
      case NodeKind::imaginary: return chart_.constant(GaussianRational::i());
      case NodeKind::generator: return chart_.var(n.name);
      case NodeKind::frame: return as_legs(VectorField::coordinate(chart_, chart_.slot(n.name)));
      case NodeKind::named: return ws_.named(n.name);
      case NodeKind::sum:
      case NodeKind::difference: return additive(n);
      case NodeKind::negate:
        return std::visit([](const auto& x) -> Value { return -x; }, eval(*c[0]));
      case NodeKind::product: {
        Value a = eval(*c[0]);
        Value b = eval(*c[1]);
        const SuperPoly& f = scalar(a, *c[0], "left factor");
        if (const auto* g = std::get_if<SuperPoly>(&b)) return f * *g;
        return f * std::get<VectorValuedForm>(b);
      }
      case NodeKind::power: return scalar(eval(*c[0]), *c[0], "base of '^'").pow(n.exponent);
      case NodeKind::exp: return exponential(scalar(eval(*c[0]), *c[0], "argument of exp"), *c[0]);
      case NodeKind::exterior: {
        Value v = eval(*c[0]);
        if (const auto* p = std::get_if<SuperPoly>(&v)) return exterior_derivative(chart_, *p);
        return exterior_derivative(std::get<VectorValuedForm>(v));
      }
      case NodeKind::interior:
      case NodeKind::lie: {
        VectorField x = as_field(legs(eval(*c[0]), *c[0], "first argument"));
        Value w = eval(*c[1]);
        const bool lie = n.kind == NodeKind::lie;
        if (const auto* p = std::get_if<SuperPoly>(&w)) return lie ? lie_derivative(x, *p) : interior_product(x, *p);
        const auto& f = std::get<VectorValuedForm>(w);
        return lie ? lie_derivative(x, f) : interior_product(x, f);
      }
      case NodeKind::bracket: {
        VectorField x = as_field(legs(eval(*c[0]), *c[0], "first argument"));
        VectorField y = as_field(legs(eval(*c[1]), *c[1], "second argument"));
        return as_legs(graded_commutator(x, y));
      }
    }
    throw EvalError("unhandled node", n.span);
  }

  Value additive(const Node& n) {
    Value a = eval(*n.children[0]);
    Value b = eval(*n.children[1]);
    const bool minus = n.kind == NodeKind::difference;
    if (a.index() != b.index()) {
      // 0 + X and X + 0 are harmless; anything else mixes shapes.
      if (is_zero(a)) return minus ? std::visit([](const auto& x) -> Value { return -x; }, b) : b;
      if (is_zero(b)) return a;
      throw EvalError("cannot add a function and a vector-valued object", n.span);
    }
    if (auto* p = std::get_if<SuperPoly>(&a)) return minus ? *p - std::get<SuperPoly>(b) : *p + std::get<SuperPoly>(b);
    auto& f = std::get<VectorValuedForm>(a);
    return minus ? f - std::get<VectorValuedForm>(b) : f + std::get<VectorValuedForm>(b);
  }

  // exp(c*g) for an even chart generator g; exp(0) = 1.
  SuperPoly exponential(const SuperPoly& arg, const Node& at) {
    if (arg.is_zero()) return chart_.constant(1);
    if (arg.size() == 1) {
      const auto& [m, coeff] = *arg.terms().begin();
      if (!m.has_odd() && m.exps().empty() && m.powers().size() == 1 && m.powers().front().second == 1) {
        const GenIndex g = m.powers().front().first;
        if ((*chart_.context())[g].parity == Parity::even) return SuperPoly::exp(chart_.context(), g, coeff);
      }
    }
    throw EvalError("exp takes a multiple of one even generator, as in exp(2*l)", at.span);
  }

  const Workspace& ws_;
  const Chart& chart_;
};

}  // namespace

Value evaluate(const Node& node, const Workspace& ws) { return Evaluator(ws).eval(node); }

Value evaluate(std::string_view text, const Workspace& ws) { return evaluate(*parse_expression(text, ws), ws); }

}  // namespace polycontact::cli
