#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace polycontact {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr Parity flip(Parity p) { return p + Parity::odd; }
constexpr bool is_odd(Parity p) { return p == Parity::odd; }
/// (-1)^(a*b) as +1 / -1.
constexpr int koszul_sign(Parity a, Parity b) { return (is_odd(a) && is_odd(b)) ? -1 : 1; }

const char* to_string(Parity p);

enum class GeneratorKind : std::uint8_t { base, fiber, parameter };

/// Position of a generator within its context; declaration order is canonical order.
using GenIndex = std::uint32_t;
inline constexpr GenIndex kNoGenerator = std::numeric_limits<GenIndex>::max();

struct Generator {
  std::string name;
  Parity parity = Parity::even;
  GeneratorKind kind = GeneratorKind::base;
  // Admits negative integer exponents (Laurent). Only meaningful for even generators.
  bool invertible = false;
};

/// Immutable, ordered set of generators shared by every SuperPoly built over it.
class GeneratorContext {
 public:
  /// Supports up to 64 odd generators (odd parts are stored as bit masks).
  static constexpr std::size_t kMaxOdd = 64;

  class Builder {
   public:
    Builder& add(Generator g);
    Builder& add(std::string name, Parity parity, GeneratorKind kind = GeneratorKind::base,
                 bool invertible = false);
    std::shared_ptr<const GeneratorContext> build() &&;

   private:
    std::vector<Generator> gens_;
  };

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](GenIndex i) const { return gens_[i]; }
  const std::vector<Generator>& generators() const { return gens_; }

  std::optional<GenIndex> find(std::string_view name) const;
  /// Throws UnknownGenerator.
  GenIndex index(std::string_view name) const;

  /// Bit position of an odd generator among the odd generators (in canonical order).
  unsigned odd_rank(GenIndex i) const { return odd_rank_[i]; }
  GenIndex odd_generator(unsigned rank) const { return odd_by_rank_[rank]; }
  std::size_t odd_count() const { return odd_by_rank_.size(); }

 private:
  GeneratorContext() = default;

  std::vector<Generator> gens_;
  std::unordered_map<std::string, GenIndex> by_name_;
  std::vector<unsigned> odd_rank_;
  std::vector<GenIndex> odd_by_rank_;
};

using ContextPtr = std::shared_ptr<const GeneratorContext>;

}  // namespace polycontact
