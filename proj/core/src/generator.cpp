#include "polycontact/generator.hpp"

#include "polycontact/errors.hpp"

namespace polycontact {

const char* to_string(Parity p) { return is_odd(p) ? "odd" : "even"; }

GeneratorContext::Builder& GeneratorContext::Builder::add(Generator g) {
  gens_.push_back(std::move(g));
  return *this;
}

GeneratorContext::Builder& GeneratorContext::Builder::add(std::string name, Parity parity, GeneratorKind kind,
                                                          bool invertible) {
  return add(Generator{std::move(name), parity, kind, invertible});
}

std::shared_ptr<const GeneratorContext> GeneratorContext::Builder::build() && {
  std::shared_ptr<GeneratorContext> ctx(new GeneratorContext());
  ctx->gens_ = std::move(gens_);
  ctx->odd_rank_.assign(ctx->gens_.size(), 0);
  for (GenIndex i = 0; i < ctx->gens_.size(); ++i) {
    const Generator& g = ctx->gens_[i];
    if (g.name.empty()) throw AlgebraError("generator with empty name");
    if (!ctx->by_name_.emplace(g.name, i).second) throw AlgebraError("duplicate generator name '" + g.name + "'");
    if (g.invertible && is_odd(g.parity)) throw ParityError("odd generator '" + g.name + "' cannot be invertible");
    if (is_odd(g.parity)) {
      if (ctx->odd_by_rank_.size() == kMaxOdd) throw AlgebraError("too many odd generators");
      ctx->odd_rank_[i] = static_cast<unsigned>(ctx->odd_by_rank_.size());
      ctx->odd_by_rank_.push_back(i);
    }
  }
  return ctx;
}

std::optional<GenIndex> GeneratorContext::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

GenIndex GeneratorContext::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
}

}  // namespace polycontact
