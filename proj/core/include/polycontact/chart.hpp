#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polycontact/generator.hpp"
#include "polycontact/super_poly.hpp"

namespace polycontact {

/// Single global chart on the antitangent bundle: base coordinates x^A, paired fibre
/// coordinates dx^A of opposite parity, and inert parameters. Slots index the base
/// coordinates in declaration order.
class Chart {
 public:
  class Builder {
   public:
    /// Adds base coordinate `name` and its fibre coordinate "d" + name.
    Builder& base(std::string name, Parity parity, bool invertible = false);
    Builder& parameter(std::string name, Parity parity, bool invertible = false);
    Chart build() &&;

   private:
    struct Entry {
      std::string name;
      Parity parity;
      bool invertible;
    };
    std::vector<Entry> base_;
    std::vector<Entry> params_;
  };

  const ContextPtr& context() const { return ctx_; }
  std::size_t dim() const { return base_.size(); }

  GenIndex base_generator(std::size_t slot) const { return base_[slot]; }
  GenIndex fiber_generator(std::size_t slot) const { return fiber_[slot]; }
  std::span<const GenIndex> base_generators() const { return base_; }
  std::span<const GenIndex> fiber_generators() const { return fiber_; }
  std::span<const GenIndex> parameters() const { return params_; }

  Parity slot_parity(std::size_t slot) const { return (*ctx_)[base_[slot]].parity; }
  const std::string& slot_name(std::size_t slot) const { return (*ctx_)[base_[slot]].name; }
  /// Slot of a base coordinate, by generator index or by name.
  std::optional<std::size_t> slot_of(GenIndex gen) const;
  std::optional<std::size_t> slot_of(std::string_view name) const;
  /// Throws UnknownGenerator.
  std::size_t slot(std::string_view name) const;

  bool is_fiber(GenIndex gen) const;

  SuperPoly coordinate(std::size_t slot) const { return SuperPoly::generator(ctx_, base_[slot]); }
  SuperPoly differential(std::size_t slot) const { return SuperPoly::generator(ctx_, fiber_[slot]); }
  SuperPoly var(std::string_view name) const { return SuperPoly::generator(ctx_, name); }
  SuperPoly constant(const GaussianRational& c) const { return {ctx_, c}; }
  SuperPoly zero() const { return SuperPoly(ctx_); }

  friend bool operator==(const Chart& a, const Chart& b) { return a.ctx_ == b.ctx_; }

 private:
  ContextPtr ctx_;
  std::vector<GenIndex> base_;
  std::vector<GenIndex> fiber_;
  std::vector<GenIndex> params_;
  std::vector<std::optional<std::size_t>> slot_of_gen_;
  std::vector<bool> fiber_flag_;
};

/// Throws ContextMismatch unless the two charts are the same.
void require_same_chart(const Chart& a, const Chart& b, const char* what);

}  // namespace polycontact
