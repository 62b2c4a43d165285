#include "polycontact/chart.hpp"

#include "polycontact/errors.hpp"

namespace polycontact {

Chart::Builder& Chart::Builder::base(std::string name, Parity parity, bool invertible) {
  base_.push_back({std::move(name), parity, invertible});
  return *this;
}

Chart::Builder& Chart::Builder::parameter(std::string name, Parity parity, bool invertible) {
  params_.push_back({std::move(name), parity, invertible});
  return *this;
}

Chart Chart::Builder::build() && {
  GeneratorContext::Builder gb;
  for (const auto& e : base_) gb.add(e.name, e.parity, GeneratorKind::base, e.invertible);
  for (const auto& e : base_) gb.add("d" + e.name, flip(e.parity), GeneratorKind::fiber);
  for (const auto& e : params_) gb.add(e.name, e.parity, GeneratorKind::parameter, e.invertible);

  Chart chart;
  chart.ctx_ = std::move(gb).build();
  const std::size_t n = base_.size();
  chart.slot_of_gen_.assign(chart.ctx_->size(), std::nullopt);
  chart.fiber_flag_.assign(chart.ctx_->size(), false);
  for (std::size_t s = 0; s < n; ++s) {
    chart.base_.push_back(static_cast<GenIndex>(s));
    chart.fiber_.push_back(static_cast<GenIndex>(n + s));
    chart.slot_of_gen_[s] = s;
    chart.fiber_flag_[n + s] = true;
  }
  for (std::size_t p = 0; p < params_.size(); ++p) chart.params_.push_back(static_cast<GenIndex>(2 * n + p));
  return chart;
}

std::optional<std::size_t> Chart::slot_of(GenIndex gen) const {
  if (gen >= slot_of_gen_.size()) return std::nullopt;
  return slot_of_gen_[gen];
}

std::optional<std::size_t> Chart::slot_of(std::string_view name) const {
  auto gen = ctx_->find(name);
  if (!gen) return std::nullopt;
  return slot_of(*gen);
}

std::size_t Chart::slot(std::string_view name) const {
  if (auto s = slot_of(name)) return *s;
  throw UnknownGenerator("'" + std::string(name) + "' is not a base coordinate of the chart");
}

bool Chart::is_fiber(GenIndex gen) const { return gen < fiber_flag_.size() && fiber_flag_[gen]; }

void require_same_chart(const Chart& a, const Chart& b, const char* what) {
  if (!(a == b)) throw ContextMismatch(std::string(what) + ": operands live on different charts");
}

}  // namespace polycontact
