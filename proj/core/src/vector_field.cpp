#include "polycontact/vector_field.hpp"

namespace polycontact {

VectorField VectorField::coordinate(const Chart& chart, std::size_t slot) {
  std::vector<SuperPoly> comps(chart.dim(), chart.zero());
  comps.at(slot) = chart.constant(1);
  return {chart, std::move(comps), chart.slot_parity(slot)};
}

SuperPoly VectorField::apply(const SuperPoly& f) const {
  if (f.context() != chart().context()) throw ContextMismatch("vector field applied to a foreign function");
  SuperPoly out = chart().zero();
  for (std::size_t s = 0; s < dim(); ++s) {
    if ((*this)[s].is_zero()) continue;
    SuperPoly df = f.derivative(chart().base_generator(s));
    if (!df.is_zero()) out += (*this)[s] * df;
  }
  return out;
}

namespace {

std::vector<SuperPoly> transport_components(const std::vector<SuperPoly>& comps, const Chart& source,
                                            const Chart& target) {
  std::vector<SuperPoly> out(target.dim(), target.zero());
  Substitution into(source.context(), target.context());
  for (std::size_t s = 0; s < comps.size(); ++s) {
    if (comps[s].is_zero()) continue;
    auto slot = target.slot_of(source.slot_name(s));
    if (!slot) throw ContextMismatch("leg '" + source.slot_name(s) + "' does not exist on the target chart");
    out[*slot] = into.apply(comps[s]);
  }
  return out;
}

}  // namespace

VectorField transport(const VectorField& x, const Chart& target) {
  if (x.chart() == target) return x;
  return {target, transport_components(x.components(), x.chart(), target), x.parity()};
}

VectorValuedForm transport(const VectorValuedForm& form, const Chart& target) {
  if (form.chart() == target) return form;
  return {target, transport_components(form.components(), form.chart(), target), form.parity()};
}

}  // namespace polycontact
