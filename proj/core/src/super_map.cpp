#include "polycontact/super_map.hpp"

#include "polycontact/calculus.hpp"
#include "polycontact/errors.hpp"

namespace polycontact {

namespace {

void check_images(const std::vector<SuperPoly>& images, const Chart& over, const Chart& coords, const char* what) {
  if (images.size() != coords.dim()) throw AlgebraError(std::string(what) + ": wrong number of coordinate images");
  for (std::size_t s = 0; s < images.size(); ++s) {
    if (images[s].context() != over.context()) throw ContextMismatch(std::string(what) + ": image over wrong chart");
    auto p = images[s].parity();
    if (!p || (!images[s].is_zero() && *p != coords.slot_parity(s))) {
      throw ParityError(std::string(what) + ": image of '" + coords.slot_name(s) + "' does not preserve parity");
    }
  }
}

// Substitution from `from` to `onto` sending the base coordinates of `from` to `images`.
Substitution base_substitution(const Chart& from, const Chart& onto, const std::vector<SuperPoly>& images) {
  Substitution sub(from.context(), onto.context());
  for (std::size_t s = 0; s < from.dim(); ++s) sub.assign(from.base_generator(s), images[s]);
  return sub;
}

}  // namespace

SuperMap::SuperMap(Chart source, Chart target, std::vector<SuperPoly> forward, std::vector<SuperPoly> inverse)
    : source_(std::move(source)), target_(std::move(target)), forward_(std::move(forward)), inverse_(std::move(inverse)) {
  check_images(forward_, source_, target_, "forward map");
  check_images(inverse_, target_, source_, "inverse map");
}

SuperMap SuperMap::identity(const Chart& chart) {
  std::vector<SuperPoly> coords;
  for (std::size_t s = 0; s < chart.dim(); ++s) coords.push_back(chart.coordinate(s));
  return {chart, chart, coords, coords};
}

SuperMap SuperMap::inverted() const { return {target_, source_, inverse_, forward_}; }

SuperPoly SuperMap::substitute_base(const SuperPoly& f_on_target) const {
  return base_substitution(target_, source_, forward_).apply(f_on_target);
}

SuperMap SuperMap::after(const SuperMap& first) const {
  require_same_chart(first.target_, source_, "composition");
  std::vector<SuperPoly> fwd;
  for (const auto& f : forward_) fwd.push_back(first.substitute_base(f));
  SuperMap back = inverted();
  std::vector<SuperPoly> inv;
  for (const auto& g : first.inverse_) inv.push_back(back.substitute_base(g));
  return {first.source_, target_, std::move(fwd), std::move(inv)};
}

bool SuperMap::inverse_is_exact() const {
  SuperMap back = inverted();
  for (std::size_t s = 0; s < source_.dim(); ++s) {
    if (substitute_base(inverse_[s]) != source_.coordinate(s)) return false;
  }
  for (std::size_t s = 0; s < target_.dim(); ++s) {
    if (back.substitute_base(forward_[s]) != target_.coordinate(s)) return false;
  }
  return true;
}

SuperPoly pullback(const SuperMap& phi, const SuperPoly& form_on_target) {
  const Chart& target = phi.target();
  const Chart& source = phi.source();
  if (form_on_target.context() != target.context()) throw ContextMismatch("pullback: form is not on the target chart");
  Substitution sub = base_substitution(target, source, phi.forward());
  for (std::size_t s = 0; s < target.dim(); ++s) {
    sub.assign(target.fiber_generator(s), exterior_derivative(source, phi.forward()[s]));
  }
  return sub.apply(form_on_target);
}

VectorValuedForm transform_vector_valued(const SuperMap& phi, const VectorValuedForm& form_on_target) {
  const Chart& target = phi.target();
  const Chart& source = phi.source();
  require_same_chart(form_on_target.chart(), target, "transform_vector_valued");
  std::vector<SuperPoly> comps(source.dim(), source.zero());
  for (std::size_t a = 0; a < target.dim(); ++a) {
    if (form_on_target[a].is_zero()) continue;
    SuperPoly pulled = pullback(phi, form_on_target[a]);
    for (std::size_t b = 0; b < source.dim(); ++b) {
      SuperPoly jac = phi.inverse()[b].derivative(target.base_generator(a));
      if (jac.is_zero()) continue;
      comps[b] += pulled * pullback(phi, jac);
    }
  }
  return {source, std::move(comps), form_on_target.parity()};
}

}  // namespace polycontact
