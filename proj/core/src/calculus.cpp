#include "polycontact/calculus.hpp"

#include "polycontact/errors.hpp"

namespace polycontact {

namespace {

void require_on_chart(const Chart& chart, const SuperPoly& f) {
  if (f.context() != chart.context()) throw ContextMismatch("form does not live on the chart");
}

GaussianRational sign(bool negative) { return negative ? GaussianRational(-1) : GaussianRational(1); }

std::vector<SuperPoly> map_components(const VectorValuedForm& form, auto&& fn) {
  std::vector<SuperPoly> out;
  out.reserve(form.dim());
  for (const auto& c : form.components()) out.push_back(fn(c));
  return out;
}

// -(-1)^{|X||Omega|} Omega^B dX^A/dx^B along leg A.
void add_leg_correction(std::vector<SuperPoly>& comps, const VectorField& x, const VectorValuedForm& form) {
  const Chart& chart = x.chart();
  const GaussianRational s = -koszul_sign(x.parity(), form.parity());
  for (std::size_t a = 0; a < chart.dim(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < chart.dim(); ++b) {
      if (form[b].is_zero()) continue;
      SuperPoly dx = x[a].derivative(chart.base_generator(b));
      if (dx.is_zero()) continue;
      comps[a] += s * (form[b] * dx);
    }
  }
}

}  // namespace

SuperPoly exterior_derivative(const Chart& chart, const SuperPoly& form) {
  require_on_chart(chart, form);
  SuperPoly out = chart.zero();
  for (std::size_t b = 0; b < chart.dim(); ++b) {
    SuperPoly partial = form.derivative(chart.base_generator(b));
    if (!partial.is_zero()) out += chart.differential(b) * partial;
  }
  return out;
}

VectorValuedForm exterior_derivative(const VectorValuedForm& form) {
  const Chart& chart = form.chart();
  return {chart, map_components(form, [&](const SuperPoly& c) { return exterior_derivative(chart, c); }),
          flip(form.parity())};
}

SuperPoly interior_product(const VectorField& x, const SuperPoly& form) {
  const Chart& chart = x.chart();
  require_on_chart(chart, form);
  SuperPoly out = chart.zero();
  for (std::size_t b = 0; b < chart.dim(); ++b) {
    if (x[b].is_zero()) continue;
    SuperPoly partial = form.derivative(chart.fiber_generator(b));
    if (!partial.is_zero()) out += x[b] * partial;
  }
  if (is_odd(x.parity())) out = -out;
  return out;
}

VectorValuedForm interior_product(const VectorField& x, const VectorValuedForm& form) {
  require_same_chart(x.chart(), form.chart(), "interior product");
  return {form.chart(), map_components(form, [&](const SuperPoly& c) { return interior_product(x, c); }),
          flip(x.parity() + form.parity())};
}

SuperPoly lie_derivative(const VectorField& x, const SuperPoly& form) {
  const Chart& chart = x.chart();
  require_on_chart(chart, form);
  SuperPoly out = chart.zero();
  const GaussianRational s = sign(is_odd(x.parity()));
  for (std::size_t c = 0; c < chart.dim(); ++c) {
    if (x[c].is_zero()) continue;
    SuperPoly by_fiber = form.derivative(chart.fiber_generator(c));
    if (by_fiber.is_zero()) continue;
    SuperPoly dxc = exterior_derivative(chart, x[c]);  // dx^B dX^C/dx^B
    if (!dxc.is_zero()) out += s * (dxc * by_fiber);
  }
  for (std::size_t b = 0; b < chart.dim(); ++b) {
    if (x[b].is_zero()) continue;
    SuperPoly partial = form.derivative(chart.base_generator(b));
    if (!partial.is_zero()) out += x[b] * partial;
  }
  return out;
}

VectorValuedForm lie_derivative(const VectorField& x, const VectorValuedForm& form) {
  require_same_chart(x.chart(), form.chart(), "Lie derivative");
  auto comps = map_components(form, [&](const SuperPoly& c) { return lie_derivative(x, c); });
  add_leg_correction(comps, x, form);
  return {form.chart(), std::move(comps), x.parity() + form.parity()};
}

SuperPoly lie_derivative_cartan(const VectorField& x, const SuperPoly& form) {
  const Chart& chart = x.chart();
  SuperPoly out = exterior_derivative(chart, interior_product(x, form));
  SuperPoly second = interior_product(x, exterior_derivative(chart, form));
  // -(-1)^{|X|+1} = (-1)^{|X|}
  if (is_odd(x.parity())) {
    out -= second;
  } else {
    out += second;
  }
  return out;
}

VectorValuedForm lie_derivative_cartan(const VectorField& x, const VectorValuedForm& form) {
  require_same_chart(x.chart(), form.chart(), "Lie derivative");
  auto comps = map_components(form, [&](const SuperPoly& c) { return lie_derivative_cartan(x, c); });
  add_leg_correction(comps, x, form);
  return {form.chart(), std::move(comps), x.parity() + form.parity()};
}

VectorField graded_commutator(const VectorField& x, const VectorField& y) {
  require_same_chart(x.chart(), y.chart(), "graded commutator");
  const GaussianRational s = koszul_sign(x.parity(), y.parity());
  std::vector<SuperPoly> comps;
  comps.reserve(x.dim());
  for (std::size_t a = 0; a < x.dim(); ++a) comps.push_back(x.apply(y[a]) - s * y.apply(x[a]));
  return {x.chart(), std::move(comps), x.parity() + y.parity()};
}

}  // namespace polycontact
