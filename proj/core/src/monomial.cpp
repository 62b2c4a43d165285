#include "polycontact/monomial.hpp"

#include <algorithm>

#include "polycontact/errors.hpp"

namespace polycontact {

int reorder_sign(OddMask first, OddMask second) {
  if (first & second) return 0;
  unsigned inversions = 0;
  for (OddMask rest = second; rest != 0; rest &= rest - 1) {
    unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    OddMask above = (j == 63) ? 0 : (first >> (j + 1));
    inversions += static_cast<unsigned>(std::popcount(above));
  }
  return (inversions & 1U) ? -1 : 1;
}

Monomial Monomial::power(GenIndex gen, int exponent) {
  Monomial m;
  if (exponent != 0) m.powers_.emplace_back(gen, exponent);
  return m;
}

Monomial Monomial::exp_atom(GenIndex base, GaussianRational multiplier) {
  Monomial m;
  if (!multiplier.is_zero()) m.exps_.emplace_back(base, std::move(multiplier));
  return m;
}

int Monomial::exponent(GenIndex gen) const {
  auto it = std::lower_bound(powers_.begin(), powers_.end(), gen,
                             [](const Power& p, GenIndex g) { return p.first < g; });
  return (it != powers_.end() && it->first == gen) ? it->second : 0;
}

const GaussianRational* Monomial::exp_multiplier(GenIndex gen) const {
  for (const auto& [base, mult] : exps_) {
    if (base == gen) return &mult;
  }
  return nullptr;
}

namespace {

template <typename T, typename Combine>
std::vector<std::pair<GenIndex, T>> merge_sorted(const std::vector<std::pair<GenIndex, T>>& a,
                                                 const std::vector<std::pair<GenIndex, T>>& b, Combine combine) {
  std::vector<std::pair<GenIndex, T>> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      T merged = combine(ia->second, ib->second);
      if (merged != T{}) out.emplace_back(ia->first, std::move(merged));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

std::optional<std::pair<Monomial, int>> Monomial::multiply(const Monomial& a, const Monomial& b) {
  int sign = reorder_sign(a.odd_, b.odd_);
  if (sign == 0) return std::nullopt;
  Monomial m;
  m.odd_ = a.odd_ | b.odd_;
  if (b.powers_.empty()) {
    m.powers_ = a.powers_;
  } else if (a.powers_.empty()) {
    m.powers_ = b.powers_;
  } else {
    m.powers_ = merge_sorted(a.powers_, b.powers_, [](int x, int y) { return x + y; });
  }
  if (!a.exps_.empty() || !b.exps_.empty()) {
    m.exps_ = merge_sorted(a.exps_, b.exps_,
                           [](const GaussianRational& x, const GaussianRational& y) { return x + y; });
  }
  return std::pair{std::move(m), sign};
}

Monomial Monomial::with_exponent(GenIndex gen, int exponent) const {
  Monomial m = *this;
  auto it = std::lower_bound(m.powers_.begin(), m.powers_.end(), gen,
                             [](const Power& p, GenIndex g) { return p.first < g; });
  if (it != m.powers_.end() && it->first == gen) {
    if (exponent == 0) {
      m.powers_.erase(it);
    } else {
      it->second = exponent;
    }
  } else if (exponent != 0) {
    m.powers_.insert(it, Power{gen, exponent});
  }
  return m;
}

Monomial Monomial::without_exp(GenIndex gen) const {
  Monomial m = *this;
  std::erase_if(m.exps_, [gen](const ExpAtom& e) { return e.first == gen; });
  return m;
}

Monomial Monomial::without_odd(unsigned rank) const {
  Monomial m = *this;
  m.odd_ &= ~(OddMask{1} << rank);
  return m;
}

Monomial Monomial::with_odd_mask(OddMask mask) const {
  Monomial m = *this;
  m.odd_ = mask;
  return m;
}

Monomial Monomial::with_commuting(std::vector<Power> powers, std::vector<ExpAtom> exps) const {
  Monomial m;
  m.powers_ = std::move(powers);
  m.exps_ = std::move(exps);
  m.odd_ = odd_;
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.odd_degree() <=> b.odd_degree(); c != 0) return c;
  if (a.odd_ != b.odd_) {
    OddMask diff = a.odd_ ^ b.odd_;
    OddMask lowest = diff & (~diff + 1);
    return (a.odd_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.powers_ <=> b.powers_; c != 0) return c;
  return a.exps_ <=> b.exps_;
}

}  // namespace polycontact
