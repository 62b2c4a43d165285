#include "polycontact/super_poly.hpp"

#include <bit>
#include <utility>

#include "polycontact/errors.hpp"

namespace polycontact {

SuperPoly::SuperPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw AlgebraError("SuperPoly requires a generator context");
}

SuperPoly::SuperPoly(ContextPtr ctx, const GaussianRational& constant) : SuperPoly(std::move(ctx)) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

SuperPoly SuperPoly::generator(const ContextPtr& ctx, GenIndex gen) {
  if (gen >= ctx->size()) throw UnknownGenerator("generator index out of range");
  SuperPoly p(ctx);
  const Generator& g = (*ctx)[gen];
  Monomial m = is_odd(g.parity) ? Monomial::odd(ctx->odd_rank(gen)) : Monomial::power(gen, 1);
  p.terms_.emplace(std::move(m), GaussianRational(1));
  return p;
}

SuperPoly SuperPoly::generator(const ContextPtr& ctx, std::string_view name) {
  return generator(ctx, ctx->index(name));
}

SuperPoly SuperPoly::exp(const ContextPtr& ctx, GenIndex base, const GaussianRational& multiplier) {
  if (is_odd((*ctx)[base].parity)) throw ParityError("exponential atom on odd generator '" + (*ctx)[base].name + "'");
  if (multiplier.is_zero()) return {ctx, 1};
  return term(ctx, Monomial::exp_atom(base, multiplier), 1);
}

SuperPoly SuperPoly::term(const ContextPtr& ctx, Monomial m, const GaussianRational& coeff) {
  for (const auto& [gen, e] : m.powers()) {
    if (e < 0 && !(*ctx)[gen].invertible) {
      throw AlgebraError("negative exponent on non-invertible generator '" + (*ctx)[gen].name + "'");
    }
  }
  SuperPoly p(ctx);
  if (!coeff.is_zero()) p.terms_.emplace(std::move(m), coeff);
  return p;
}

std::optional<Parity> SuperPoly::parity() const {
  if (terms_.empty()) return Parity::even;
  Parity first = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_) {
    if (m.parity() != first) return std::nullopt;
  }
  return first;
}

bool SuperPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

GaussianRational SuperPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? GaussianRational{} : it->second;
}

bool SuperPoly::depends_on(GenIndex gen) const {
  const Generator& g = (*ctx_)[gen];
  for (const auto& [m, c] : terms_) {
    if (is_odd(g.parity)) {
      if (m.odd_mask() & (OddMask{1} << ctx_->odd_rank(gen))) return true;
    } else if (m.exponent(gen) != 0 || m.exp_multiplier(gen) != nullptr) {
      return true;
    }
  }
  return false;
}

bool SuperPoly::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const Monomial& m = terms_.begin()->first;
  if (m.has_odd()) return false;
  for (const auto& [gen, e] : m.powers()) {
    if (!(*ctx_)[gen].invertible) return false;
  }
  return true;
}

void SuperPoly::check_same(const SuperPoly& o) const {
  if (ctx_ != o.ctx_) throw ContextMismatch("operands belong to different generator contexts");
}

void SuperPoly::add_term(const Monomial& m, const GaussianRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPoly& SuperPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  a.check_same(b);
  SuperPoly out(a.ctx_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto prod = Monomial::multiply(ma, mb);
      if (!prod) continue;
      GaussianRational c = ca * cb;
      if (prod->second < 0) c = -c;
      out.add_term(prod->first, c);
    }
  }
  return out;
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SuperPoly SuperPoly::inverse_unit() const {
  if (!is_unit_monomial()) throw AlgebraError("only unit monomials can be inverted");
  const auto& [m, c] = *terms_.begin();
  std::vector<Monomial::Power> powers = m.powers();
  for (auto& p : powers) p.second = -p.second;
  std::vector<Monomial::ExpAtom> exps = m.exps();
  for (auto& e : exps) e.second = -e.second;
  return term(ctx_, m.with_commuting(std::move(powers), std::move(exps)), c.inverse());
}

SuperPoly SuperPoly::pow(int n) const {
  if (n < 0) return inverse_unit().pow(-n);
  SuperPoly result(ctx_, 1);
  SuperPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

SuperPoly SuperPoly::body() const {
  SuperPoly out(ctx_);
  for (const auto& [m, c] : terms_) {
    if (!m.has_odd()) out.terms_.emplace(m, c);
  }
  return out;
}

SuperPoly SuperPoly::derivative(GenIndex gen) const {
  if (gen >= ctx_->size()) throw UnknownGenerator("generator index out of range");
  SuperPoly out(ctx_);
  if (is_odd((*ctx_)[gen].parity)) {
    const unsigned rank = ctx_->odd_rank(gen);
    const OddMask bit = OddMask{1} << rank;
    const OddMask below = bit - 1;
    for (const auto& [m, c] : terms_) {
      if (!(m.odd_mask() & bit)) continue;
      bool negative = std::popcount(m.odd_mask() & below) & 1;
      out.add_term(m.without_odd(rank), negative ? -c : c);
    }
    return out;
  }
  for (const auto& [m, c] : terms_) {
    if (int e = m.exponent(gen); e != 0) out.add_term(m.with_exponent(gen, e - 1), c * GaussianRational(e));
    if (const GaussianRational* mult = m.exp_multiplier(gen)) out.add_term(m, c * *mult);
  }
  return out;
}

SuperPoly SuperPoly::transport(const ContextPtr& target) const {
  if (target == ctx_) return *this;
  return Substitution(ctx_, target).apply(*this);
}

bool operator==(const SuperPoly& a, const SuperPoly& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

// ---------------------------------------------------------------------------

Substitution::Substitution(ContextPtr source, ContextPtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  images_.resize(source_->size());
  assigned_.assign(source_->size(), false);
  for (GenIndex i = 0; i < source_->size(); ++i) {
    const Generator& g = (*source_)[i];
    auto j = (source_ == target_) ? std::optional<GenIndex>(i) : target_->find(g.name);
    if (!j) continue;
    const Generator& h = (*target_)[*j];
    if (h.parity != g.parity) throw ParityError("generator '" + g.name + "' changes parity between contexts");
    images_[i] = SuperPoly::generator(target_, *j);
  }
}

Substitution& Substitution::assign(GenIndex gen, SuperPoly value) {
  if (gen >= source_->size()) throw UnknownGenerator("generator index out of range");
  if (value.context() != target_) throw ContextMismatch("substituted value is not over the target context");
  const Generator& g = (*source_)[gen];
  auto p = value.parity();
  if (!p) throw ParityError("inhomogeneous value substituted for '" + g.name + "'");
  if (!value.is_zero() && *p != g.parity) {
    throw ParityError("value of parity " + std::string(to_string(*p)) + " substituted for " + to_string(g.parity) +
                      " generator '" + g.name + "'");
  }
  images_[gen] = std::move(value);
  assigned_[gen] = true;
  return *this;
}

Substitution& Substitution::assign(std::string_view name, SuperPoly value) {
  return assign(source_->index(name), std::move(value));
}

const SuperPoly& Substitution::image(GenIndex gen) const {
  if (!images_[gen]) {
    throw UnknownGenerator("generator '" + (*source_)[gen].name + "' has no image in the target context");
  }
  return *images_[gen];
}

SuperPoly Substitution::exp_image(GenIndex gen, const GaussianRational& multiplier) const {
  const SuperPoly& value = image(gen);
  if (!assigned_[gen]) {
    // Renamed or identical generator.
    const auto& [m, c] = *value.terms().begin();
    return SuperPoly::exp(target_, m.powers().front().first, multiplier);
  }
  // e^{m (sum_i k_i g_i + N)} with N nilpotent factors as a product of atoms times a
  // terminating series.
  SuperPoly result(target_, 1);
  SuperPoly nilpotent(target_);
  for (const auto& [m, c] : value.terms()) {
    if (m.has_odd()) {
      nilpotent.add_term(m, c);
      continue;
    }
    bool linear = m.exps().empty() && m.powers().size() == 1 && m.powers().front().second == 1;
    if (!linear) {
      throw UnsupportedSubstitution("exponential base '" + (*source_)[gen].name +
                                    "' may only be mapped to a linear combination of even generators "
                                    "plus a nilpotent correction");
    }
    result = result * SuperPoly::exp(target_, m.powers().front().first, multiplier * c);
  }
  if (!nilpotent.is_zero()) {
    nilpotent *= multiplier;
    SuperPoly series(target_, 1);
    SuperPoly power(target_, 1);
    for (long j = 1;; ++j) {
      power = power * nilpotent * GaussianRational(1, j);
      if (power.is_zero()) break;
      series += power;
    }
    result = result * series;
  }
  return result;
}

SuperPoly Substitution::apply(const SuperPoly& p) const {
  if (p.context() != source_) throw ContextMismatch("substitution applied to a polynomial over another context");
  SuperPoly out(target_);
  for (const auto& [m, c] : p.terms()) {
    SuperPoly term(target_, c);
    for (const auto& [gen, e] : m.powers()) {
      term = term * image(gen).pow(e);
      if (term.is_zero()) break;
    }
    if (term.is_zero()) continue;
    for (const auto& [gen, mult] : m.exps()) term = term * exp_image(gen, mult);
    for (OddMask rest = m.odd_mask(); rest != 0 && !term.is_zero(); rest &= rest - 1) {
      unsigned rank = static_cast<unsigned>(std::countr_zero(rest));
      term = term * image(source_->odd_generator(rank));
    }
    out += term;
  }
  return out;
}

SuperPoly substitute(const SuperPoly& p, const std::map<GenIndex, SuperPoly>& assignment) {
  Substitution s(p.context());
  for (const auto& [gen, value] : assignment) s.assign(gen, value);
  return s.apply(p);
}

}  // namespace polycontact
